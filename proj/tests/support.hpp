#pragma once

#include "nd/hopf.hpp"

namespace nd::testing {

// Group algebra of Z_n on the basis g^0..g^{n-1}, written out independently of the library.
class CyclicGroupAlgebra : public FiniteHopfAlgebra {
public:
    explicit CyclicGroupAlgebra(int n) : n_(n) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) mul_.push_back(basis_elem((a + b) % n, 1));
            delta_.push_back(Elem2{{{a, a}, CycNumber(1)}});
            s_.push_back(basis_elem((n - a) % n, 1));
        }
    }
    std::int64_t dim() const override { return n_; }
    int conductor() const override { return 1; }
    const Elem& mul_basis(std::int64_t a, std::int64_t b) const override { return mul_[static_cast<std::size_t>(a * n_ + b)]; }
    const Elem2& coproduct_basis(std::int64_t a) const override { return delta_[static_cast<std::size_t>(a)]; }
    const Elem& antipode_basis(std::int64_t a) const override { return s_[static_cast<std::size_t>(a)]; }
    CycNumber counit_basis(std::int64_t) const override { return CycNumber(1); }
    Elem unit() const override { return basis_elem(0, 1); }
    std::vector<Elem> generators() const override { return {basis_elem(1 % n_, 1)}; }

private:
    int n_;
    std::vector<Elem> mul_;
    std::vector<Elem2> delta_;
    std::vector<Elem> s_;
};

}  // namespace nd::testing
