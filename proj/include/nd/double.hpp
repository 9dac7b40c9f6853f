#pragma once

#include "nd/hopf.hpp"
#include "nd/nichols.hpp"

#include <memory>
#include <stdexcept>
#include <unordered_map>

namespace nd {

class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// How <y_w, x> is reduced: which y letter is stripped first and which skew derivation acts on x.
enum class PairingConvention { FirstLeft, FirstRight, LastLeft, LastRight };

/// Braided Drinfeld double of the Nichols algebra over K*, on the basis x^A delta_m y^B.
///   delta_m x_j = x_j delta_{m - e_j},   delta_m y_j = y_j delta_{m + e_j},
///   y_i x_j - q_ji x_j y_i = delta_ij (1 - k_i),   k_i = sum_m b(g_m, g_i) delta_m,
/// Delta(x_i) = x_i (x) 1 + gamma_i (x) x_i,  Delta(y_i) = y_i (x) 1 + gamma_bar_i (x) y_i.
class BraidedDouble : public FiniteHopfAlgebra {
public:
    static constexpr PairingConvention kDefaultPairing = PairingConvention::LastLeft;

    BraidedDouble(const Bicharacter& bc, int cutoff = NicholsAlgebra::kDefaultCutoff,
                  PairingConvention pairing = kDefaultPairing);
    BraidedDouble(NicholsAlgebra x, NicholsAlgebra y, PairingConvention pairing = kDefaultPairing);

    const NicholsAlgebra& x_algebra() const { return bx_; }
    const NicholsAlgebra& y_algebra() const { return by_; }
    const Bicharacter& bichar() const { return bx_.bichar(); }
    const GroupData& group() const { return bx_.bichar().group(); }
    std::int64_t group_size() const { return gsize_; }
    PairingConvention pairing_convention() const { return pairing_; }

    struct Index {
        int x;
        std::int64_t m;
        int y;
    };
    std::int64_t index(int x, std::int64_t m, int y) const { return (x * gsize_ + m) * ny_ + y; }
    Index decode(std::int64_t k) const;

    std::int64_t dim() const override { return static_cast<std::int64_t>(nx_) * gsize_ * ny_; }
    int conductor() const override { return bx_.conductor(); }
    const Elem& mul_basis(std::int64_t a, std::int64_t b) const override;
    const Elem2& coproduct_basis(std::int64_t a) const override;
    const Elem& antipode_basis(std::int64_t a) const override;
    CycNumber counit_basis(std::int64_t a) const override;
    Elem unit() const override;
    /// x_i delta_m, delta_m, delta_m y_i for all i, m
    std::vector<Elem> generators() const override;
    std::string basis_label(std::int64_t a) const override;

    Elem delta(std::int64_t m) const;
    Elem x(int i) const;
    Elem y(int i) const;
    /// sum_m chi(g_m) delta_m
    Elem character_elem(const Character& chi) const;
    Elem gamma(int i) const;
    Elem gamma_bar(int i) const;
    Elem k(int i) const;

    /// <y_b, x_a> on section bases
    CycNumber pairing(int y_idx, int x_idx) const;
    /// <y_w, x> for an arbitrary y word
    CycNumber pair_word(const Word& w, const SVec& x) const;
    /// Dual coefficients: y^a = sum_b dual[a][b] y_b with <y^a, x_c> = [a = c].
    const std::vector<SVec>& dual_basis() const;
    /// sum_a sum_m delta_m y^a (x) x_a gamma_m
    Elem2 r_matrix() const;

private:
    RootOfUnity r_idx(std::int64_t g, std::int64_t h) const { return {r_exp_[static_cast<std::size_t>(g * gsize_ + h)], conductor()}; }
    Elem compute_mul(std::int64_t a, std::int64_t b) const;
    Elem2 compute_coproduct(std::int64_t a) const;
    Elem compute_antipode(std::int64_t a) const;

    NicholsAlgebra bx_;
    NicholsAlgebra by_;
    PairingConvention pairing_;
    int nx_ = 0;
    int ny_ = 0;
    std::int64_t gsize_ = 1;
    std::vector<std::int64_t> r_exp_;
    std::vector<std::int64_t> unit_idx_;
    std::vector<int> x_prefix_, y_prefix_;

    mutable std::unordered_map<std::uint64_t, Elem> mul_cache_;
    mutable std::unordered_map<std::int64_t, Elem2> delta_cache_;
    mutable std::unordered_map<std::int64_t, Elem> s_cache_;
    mutable std::vector<SVec> dual_;
    mutable bool dual_ready_ = false;
};

/// H = B_q # K* on the basis x^A delta_m, realized as the y-free part of the braided double.
class SmashAlgebra : public FiniteHopfAlgebra {
public:
    explicit SmashAlgebra(std::shared_ptr<const BraidedDouble> d);

    const BraidedDouble& ambient() const { return *d_; }
    const NicholsAlgebra& nichols() const { return d_->x_algebra(); }
    std::int64_t index(int x, std::int64_t m) const { return x * d_->group_size() + m; }
    std::int64_t to_ambient(std::int64_t a) const { return a * d_->y_algebra().size(); }
    Elem to_ambient(const Elem& e) const;

    std::int64_t dim() const override { return static_cast<std::int64_t>(d_->x_algebra().size()) * d_->group_size(); }
    int conductor() const override { return d_->conductor(); }
    const Elem& mul_basis(std::int64_t a, std::int64_t b) const override;
    const Elem2& coproduct_basis(std::int64_t a) const override;
    const Elem& antipode_basis(std::int64_t a) const override;
    CycNumber counit_basis(std::int64_t a) const override { return d_->counit_basis(to_ambient(a)); }
    Elem unit() const override;
    /// x_i delta_m and delta_m
    std::vector<Elem> generators() const override;
    std::string basis_label(std::int64_t a) const override { return d_->basis_label(to_ambient(a)); }

private:
    Elem from_ambient(const Elem& e) const;

    std::shared_ptr<const BraidedDouble> d_;
    mutable std::unordered_map<std::uint64_t, Elem> mul_cache_;
    mutable std::unordered_map<std::int64_t, Elem2> delta_cache_;
    mutable std::unordered_map<std::int64_t, Elem> s_cache_;
};

/// Drinfeld double D(H) = H*cop |><| H on the basis e^i (x) e_j, index i * dim H + j.
///   (f (x) a)(g (x) b) = f g(S^{-1}(a_3) ? a_1) (x) a_2 b,   R = sum_i (eps (x) e_i) (x) (e^i (x) 1).
class GenericDouble : public FiniteHopfAlgebra {
public:
    static constexpr std::int64_t kDefaultMaxBase = 16;

    explicit GenericDouble(const FiniteHopfAlgebra& h, std::int64_t max_base_dim = kDefaultMaxBase);

    const FiniteHopfAlgebra& base() const { return *h_; }
    std::int64_t base_dim() const { return d_; }
    std::int64_t index(std::int64_t f, std::int64_t a) const { return f * d_ + a; }

    std::int64_t dim() const override { return d_ * d_; }
    int conductor() const override { return h_->conductor(); }
    const Elem& mul_basis(std::int64_t a, std::int64_t b) const override;
    const Elem2& coproduct_basis(std::int64_t a) const override { return delta_[static_cast<std::size_t>(a)]; }
    const Elem& antipode_basis(std::int64_t a) const override;
    CycNumber counit_basis(std::int64_t a) const override;
    Elem unit() const override;
    /// eps (x) (generators of H) and e^i (x) 1
    std::vector<Elem> generators() const override;
    std::string basis_label(std::int64_t a) const override;

    /// eps (x) a
    Elem embed(const Elem& a) const;
    /// f (x) 1 for f given in dual-basis coordinates
    Elem embed_dual(const Elem& f) const;
    /// counit of H in dual-basis coordinates
    Elem counit_functional() const;
    Elem2 r_matrix() const;

private:
    std::unique_ptr<TabulatedHopfAlgebra> h_;
    std::int64_t d_;
    std::vector<Elem> s_inv_;
    std::vector<Elem3> delta2_;
    std::vector<Elem2> delta_;
    mutable std::unordered_map<std::uint64_t, Elem> mul_cache_;
    mutable std::unordered_map<std::int64_t, Elem> s_cache_;
};

}  // namespace nd
