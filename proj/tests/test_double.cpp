#include "doctest.h"

#include "nd/catalog.hpp"
#include "nd/double.hpp"
#include "support.hpp"

#include <random>

using namespace nd;
using nd::testing::CyclicGroupAlgebra;

namespace {

std::string first_failure(const HopfReport& r) {
    for (const auto& c : r.checks) {
        if (!c.passed) return c.name + ": " + c.failure;
    }
    return "";
}

Elem2 tensor(const Elem& a, const Elem& b) {
    Elem2 out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) add_term(out, i, j, ci * cj);
    return out;
}

Elem power(const FiniteHopfAlgebra& H, const Elem& a, int e) {
    Elem out = H.unit();
    for (int k = 0; k < e; ++k) out = H.mul(out, a);
    return out;
}

}  // namespace

TEST_CASE("u_q(sl2) preset n = 3: exhaustive axioms, R-matrix, Drinfeld map") {
    BraidedDouble D(preset_uqsl2(3).bichar);
    CHECK(D.dim() == 27);
    auto rep = verify_hopf(D, full_scope(D, 27 * 27 * 27));
    CHECK_MESSAGE(rep.passed(), first_failure(rep));
    auto R = D.r_matrix();
    std::vector<Elem> all;
    for (std::int64_t a = 0; a < D.dim(); ++a) all.push_back(basis_elem(a, D.conductor()));
    auto qt = verify_quasitriangular(D, R, all);
    CHECK_MESSAGE(qt.passed(), first_failure(qt));
    CHECK(drinfeld_map_rank(D, R) == 27);
}

TEST_CASE("generator relations of the double") {
    for (const auto& p : {preset_uqsl2(3), preset_super_a11(1), preset_super_a11(3)}) {
        BraidedDouble D(p.bichar);
        const auto& G = D.group();
        const int n = p.bichar.rank();
        const int N = D.conductor();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Elem lhs = D.mul(D.y(i), D.x(j));
                axpy(lhs, -p.bichar.q(j, i).value(), D.mul(D.x(j), D.y(i)));
                Elem rhs;
                if (i == j) {
                    rhs = D.unit();
                    axpy(rhs, CycNumber(-1), D.k(i));
                }
                CHECK(lhs == rhs);
            }
        }
        for (std::int64_t m = 0; m < G.size(); ++m) {
            for (std::int64_t p2 = 0; p2 < G.size(); ++p2) {
                Elem e = D.mul(D.delta(m), D.delta(p2));
                CHECK(e == (m == p2 ? D.delta(m) : Elem{}));
            }
            for (int j = 0; j < n; ++j) {
                const std::int64_t ej = G.index(G.unit(j));
                CHECK(D.mul(D.delta(m), D.x(j)) == D.mul(D.x(j), D.delta(G.add_index(m, G.neg_index(ej)))));
                CHECK(D.mul(D.delta(m), D.y(j)) == D.mul(D.y(j), D.delta(G.add_index(m, ej))));
            }
            CHECK(D.antipode(D.delta(m)) == D.delta(G.neg_index(m)));
            Elem2 dd;
            for (std::int64_t a = 0; a < G.size(); ++a) {
                add_term(dd, D.index(0, a, 0), D.index(0, G.add_index(m, G.neg_index(a)), 0), CycNumber::one(N));
            }
            CHECK(D.coproduct(D.delta(m)) == dd);
        }
    }
}

TEST_CASE("super A(1|1): coproduct of x_1 uses k_2^n") {
    for (int n : {1, 3}) {
        BraidedDouble D(preset_super_a11(n).bichar);
        Elem k2n = power(D, D.k(1), n);
        CHECK(D.gamma(0) == k2n);
        Elem2 expect = tensor(D.x(0), D.unit());
        for (const auto& [k, c] : tensor(k2n, D.x(0))) add_term(expect, k.first, k.second, c);
        CHECK(D.coproduct(D.x(0)) == expect);
    }
}

TEST_CASE("super A(1|1) n = 1: sampled axioms and quasi-triangularity") {
    BraidedDouble D(preset_super_a11(1).bichar);
    CHECK(D.dim() == 256);
    auto rep = verify_hopf(D, sampled_scope(D, 256, 2000, 400, 7));
    CHECK_MESSAGE(rep.passed(), first_failure(rep));
    auto qt = verify_quasitriangular(D, D.r_matrix(), D.generators());
    CHECK_MESSAGE(qt.passed(), first_failure(qt));
}

TEST_CASE("pairing conventions") {
    auto bc = preset_super_a11(1).bichar;
    for (auto conv : {PairingConvention::FirstLeft, PairingConvention::FirstRight, PairingConvention::LastLeft,
                      PairingConvention::LastRight}) {
        BraidedDouble D(bc, NicholsAlgebra::kDefaultCutoff, conv);
        bool ok = verify_quasitriangular(D, D.r_matrix(), D.generators()).passed();
        bool expect = conv == PairingConvention::FirstRight || conv == PairingConvention::LastLeft;
        CHECK(ok == expect);
    }
}

TEST_CASE("pairing vanishes on the relations of the dual Nichols algebra") {
    for (const auto& p : {preset_super_a11(1), preset_super_a11(3), preset_cartan("A2", 3)}) {
        BraidedDouble D(p.bichar);
        const auto& By = D.y_algebra();
        const auto& Bx = D.x_algebra();
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> letter(0, p.bichar.rank() - 1);
        for (int trial = 0; trial < 60; ++trial) {
            Word w(static_cast<std::size_t>(2 + trial % 4));
            for (auto& l : w) l = letter(rng);
            SVec proj = By.project(w);
            for (int a = Bx.degree_begin(static_cast<int>(w.size())); a < Bx.degree_end(static_cast<int>(w.size())); ++a) {
                SVec xa{{a, CycNumber::one(D.conductor())}};
                CycNumber via_proj = CycNumber::zero(D.conductor());
                for (const auto& [b, c] : proj) via_proj += c * D.pairing(b, a);
                CHECK(D.pair_word(w, xa) == via_proj);
            }
        }
    }
}

TEST_CASE("R-matrix shape") {
    BraidedDouble D(preset_taft(3).bichar);
    // 3 x-basis elements times 3 lattice points, each gamma_m spread over 3 deltas
    CHECK(D.r_matrix().size() == 27);
    for (const auto& row : D.dual_basis()) CHECK(row.size() == 1);
    // degree-0 part is sum_m delta_m (x) gamma_m
    Elem2 deg0;
    const auto& G = D.group();
    for (std::int64_t m = 0; m < G.size(); ++m) {
        Elem2 t = tensor(D.delta(m), D.character_elem(D.bichar().gamma(G.element(m))));
        for (const auto& [k, c] : t) add_term(deg0, k.first, k.second, c);
    }
    for (const auto& [k, c] : deg0) CHECK(D.r_matrix().at(k) == c);
}

TEST_CASE("trivial Nichols algebra") {
    BraidedDouble D(Bicharacter(GroupData(std::vector<int>{}), 1, {}));
    CHECK(D.dim() == 1);
    auto R = D.r_matrix();
    CHECK(R == tensor(D.unit(), D.unit()));
    CHECK(verify_quasitriangular(D, R, D.generators()).passed());
    CHECK(verify_hopf(D, full_scope(D, 1)).passed());
}

TEST_CASE("dimension identities") {
    for (const auto& p : {preset_taft(4), preset_uqsl2(5), preset_super_a11(1), preset_super_a11(3)}) {
        auto D = std::make_shared<const BraidedDouble>(p.bichar);
        SmashAlgebra H(D);
        const std::int64_t b = D->x_algebra().total_dim();
        const std::int64_t g = D->group_size();
        CHECK(D->dim() == b * b * g);
        CHECK(H.dim() == b * g);
        CHECK(D->dim() * g == H.dim() * H.dim());
    }
}

TEST_CASE("smash product") {
    auto D = std::make_shared<const BraidedDouble>(preset_super_a11(1).bichar);
    SmashAlgebra H(D);
    auto rep = verify_hopf(H, full_scope(H, 40000));
    CHECK_MESSAGE(rep.passed(), first_failure(rep));
    const auto& G = D->group();
    const auto& B = H.nichols();
    for (int a = 0; a < B.size(); ++a) {
        for (std::int64_t m = 0; m < G.size(); ++m) {
            for (int c = 0; c < B.size(); ++c) {
                for (std::int64_t p = 0; p < G.size(); ++p) {
                    const Elem& prod = H.mul_basis(H.index(a, m), H.index(c, p));
                    Elem expect;
                    if (G.add_index(m, G.neg_index(B.gdeg_index(c))) == p) {
                        for (const auto& [e, ce] : B.mul(a, c)) add_term(expect, H.index(e, p), ce);
                    }
                    CHECK(prod == expect);
                }
            }
        }
    }
}

TEST_CASE("Drinfeld double of Taft_3") {
    auto D = std::make_shared<const BraidedDouble>(preset_taft(3).bichar);
    SmashAlgebra H(D);
    GenericDouble DD(H);
    CHECK(DD.dim() == 81);
    CHECK(DD.dim() == 3 * 27);
    auto rep = verify_hopf(DD, sampled_scope(DD, 81, 3000, 400, 5));
    CHECK_MESSAGE(rep.passed(), first_failure(rep));
    auto R = DD.r_matrix();
    auto qt = verify_quasitriangular(DD, R, DD.generators());
    CHECK_MESSAGE(qt.passed(), first_failure(qt));
    CHECK(drinfeld_map_rank(DD, R) == 81);
}

TEST_CASE("Drinfeld double of a group algebra") {
    CyclicGroupAlgebra H(3);
    CHECK(verify_hopf(H, full_scope(H, 27)).passed());
    GenericDouble DD(H);
    CHECK(DD.dim() == 9);
    CHECK(verify_hopf(DD, full_scope(DD, 729)).passed());
    auto R = DD.r_matrix();
    CHECK(verify_quasitriangular(DD, R, DD.generators()).passed());
    CHECK(drinfeld_map_rank(DD, R) == 9);
    // identity R-matrix: the Drinfeld map factors through the counit
    CHECK(drinfeld_map_rank(H, tensor(H.unit(), H.unit())) == 1);
}

TEST_CASE("generic double bound") {
    auto D = std::make_shared<const BraidedDouble>(preset_taft(5).bichar);
    SmashAlgebra H(D);
    CHECK_THROWS_AS(GenericDouble{H}, BoundExceeded);
}
