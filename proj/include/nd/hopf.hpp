#pragma once

#include "nd/cyclo.hpp"
#include "nd/linalg.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nd {

using Elem = std::map<std::int64_t, CycNumber>;
using Elem2 = std::map<std::pair<std::int64_t, std::int64_t>, CycNumber>;
using Elem3 = std::map<std::array<std::int64_t, 3>, CycNumber>;

void add_term(Elem& e, std::int64_t k, const CycNumber& c);
void add_term(Elem2& e, std::int64_t a, std::int64_t b, const CycNumber& c);
void add_term(Elem3& e, const std::array<std::int64_t, 3>& k, const CycNumber& c);
void axpy(Elem& acc, const CycNumber& c, const Elem& x);
void axpy(Elem2& acc, const CycNumber& c, const Elem2& x);
Elem scaled(const Elem& x, const CycNumber& c);
Elem basis_elem(std::int64_t k, int conductor);
bool is_zero(const Elem& e);
bool is_zero(const Elem2& e);
Elem2 flip(const Elem2& x);

/// Finite-dimensional Hopf algebra given by its structure maps on a basis 0..dim-1.
class FiniteHopfAlgebra {
public:
    virtual ~FiniteHopfAlgebra() = default;

    virtual std::int64_t dim() const = 0;
    virtual int conductor() const = 0;
    virtual const Elem& mul_basis(std::int64_t a, std::int64_t b) const = 0;
    virtual const Elem2& coproduct_basis(std::int64_t a) const = 0;
    virtual const Elem& antipode_basis(std::int64_t a) const = 0;
    virtual CycNumber counit_basis(std::int64_t a) const = 0;
    virtual Elem unit() const = 0;
    /// A set generating the algebra.
    virtual std::vector<Elem> generators() const = 0;
    virtual std::string basis_label(std::int64_t a) const { return "e" + std::to_string(a); }

    Elem mul(const Elem& a, const Elem& b) const;
    Elem2 mul(const Elem2& a, const Elem2& b) const;
    Elem3 mul(const Elem3& a, const Elem3& b) const;
    Elem2 coproduct(const Elem& a) const;
    Elem antipode(const Elem& a) const;
    CycNumber counit(const Elem& a) const;
    std::string label(const Elem& a) const;
};

/// Outcome of one identity checked over a family of inputs.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::int64_t checked = 0;
    std::string failure;

    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    void fail(const std::string& what) {
        if (passed) failure = what;
        passed = false;
    }
};

struct HopfReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Inputs for the identities: basis indices for the elementwise checks, generator pairs for multiplicativity.
struct AxiomScope {
    std::vector<std::int64_t> basis;
    std::vector<std::array<std::int64_t, 3>> triples;
    std::vector<std::pair<std::size_t, std::size_t>> generator_pairs;
};

/// Exhaustive scope: every basis element, every generator pair; triples sampled up to max_triples
/// (all triples when dim^3 <= max_triples).
AxiomScope full_scope(const FiniteHopfAlgebra& H, std::int64_t max_triples, unsigned seed = 1);
AxiomScope sampled_scope(const FiniteHopfAlgebra& H, std::int64_t basis_samples, std::int64_t triple_samples,
                         std::int64_t pair_samples, unsigned seed = 1);

HopfReport verify_hopf(const FiniteHopfAlgebra& H, const AxiomScope& scope);

/// (Delta (x) id) R = R13 R23, (id (x) Delta) R = R13 R12, Delta^op(h) R = R Delta(h), QYBE, R invertible.
HopfReport verify_quasitriangular(const FiniteHopfAlgebra& H, const Elem2& R, const std::vector<Elem>& test_elements);

/// rank of h* -> H, f -> (f (x) id)(R21 R)
std::size_t drinfeld_map_rank(const FiniteHopfAlgebra& H, const Elem2& R);

/// Dense structure constants cached from any implementation.
class TabulatedHopfAlgebra : public FiniteHopfAlgebra {
public:
    explicit TabulatedHopfAlgebra(const FiniteHopfAlgebra& src);

    std::int64_t dim() const override { return dim_; }
    int conductor() const override { return conductor_; }
    const Elem& mul_basis(std::int64_t a, std::int64_t b) const override;
    const Elem2& coproduct_basis(std::int64_t a) const override { return delta_[static_cast<std::size_t>(a)]; }
    const Elem& antipode_basis(std::int64_t a) const override { return s_[static_cast<std::size_t>(a)]; }
    CycNumber counit_basis(std::int64_t a) const override { return eps_[static_cast<std::size_t>(a)]; }
    Elem unit() const override { return unit_; }
    std::vector<Elem> generators() const override { return gens_; }
    std::string basis_label(std::int64_t a) const override { return labels_[static_cast<std::size_t>(a)]; }

private:
    std::int64_t dim_;
    int conductor_;
    std::vector<Elem> mul_;
    std::vector<Elem2> delta_;
    std::vector<Elem> s_;
    std::vector<CycNumber> eps_;
    Elem unit_;
    std::vector<Elem> gens_;
    std::vector<std::string> labels_;
};

}  // namespace nd
