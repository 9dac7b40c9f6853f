#include "doctest.h"

#include "nd/catalog.hpp"
#include "nd/verifier.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace nd;
using nd::testing::CyclicGroupAlgebra;

namespace {

struct Setup {
    std::shared_ptr<const BraidedDouble> D;
    std::unique_ptr<SmashAlgebra> H;
    DistinguishedData d;
};

Setup setup(const Bicharacter& bc) {
    Setup s;
    s.D = std::make_shared<const BraidedDouble>(bc);
    s.H = std::make_unique<SmashAlgebra>(s.D);
    s.d = distinguished_data(*s.H);
    return s;
}

using PairSet = std::set<std::pair<LatticeVec, LatticeVec>>;

// Left integrals of H found as the common solution space of (h - eps(h)) Lambda = 0 over the generators.
std::size_t left_integral_space_dim(const FiniteHopfAlgebra& H) {
    const auto d = static_cast<std::size_t>(H.dim());
    Matrix rows;
    for (const auto& h : H.generators()) {
        Matrix block = zero_matrix(d, d, H.conductor());
        const CycNumber e = H.counit(h);
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& [i, c] : H.mul(h, basis_elem(static_cast<std::int64_t>(j), H.conductor()))) {
                block[static_cast<std::size_t>(i)][j] += c;
            }
            block[j][j] -= e;
        }
        rows.insert(rows.end(), block.begin(), block.end());
    }
    return d - rank(rows);
}

}  // namespace

TEST_CASE("Taft parity of Kauffman-Radford pairs") {
    for (int n = 3; n <= 7; ++n) {
        auto s = setup(preset_taft(n).bichar);
        auto kr = enumerate_kr_pairs(*s.H, s.d);
        const auto& G = s.D->group();
        if (n % 2 == 0) {
            CHECK(kr.empty());
            continue;
        }
        REQUIRE(kr.size() == 1);
        const int m = (n + 1) / 2;
        CHECK(kr[0].zeta_point == G.scale(s.d.alpha_point, m));
        CHECK(kr[0].a == s.d.g_H.pow(m));
    }
}

TEST_CASE("Taft distinguished grouplikes") {
    for (int n = 3; n <= 6; ++n) {
        auto s = setup(preset_taft(n).bichar);
        const auto& G = s.D->group();
        CHECK(s.d.i_ell == LatticeVec{n - 1});
        CHECK(s.d.g_H == s.D->bichar().gamma(LatticeVec{n - 1}));
        // alpha_H(g) = q^{-2} with q = zeta_{2n}
        CHECK(s.d.g_H.eval(s.d.alpha_point) == RootOfUnity(-2, 2 * n));
        // alpha_H(x) = 0, i.e. Lambda x = 0
        const Elem lam = basis_elem(s.d.left_integral, s.H->conductor());
        for (std::int64_t m = 0; m < G.size(); ++m) {
            CHECK(s.H->mul(lam, basis_elem(s.H->index(1, m), s.H->conductor())).empty());
        }
        CHECK_FALSE(spherical_verdict(s.d, spiv(*s.H, s.d)));
        CHECK(spherical_check_remark(s.D->bichar(), s.d.i_ell).empty());
        CHECK(radford_s4_check(*s.H, s.d));
        CHECK(radford_consistency(s.D->bichar(), s.d.i_ell));
    }
}

TEST_CASE("left integrals are one-dimensional and spanned by delta_0 x_ell") {
    for (const auto& bc : {preset_taft(3).bichar, preset_taft(4).bichar, preset_super_a11(1).bichar}) {
        auto s = setup(bc);
        CHECK(left_integral_space_dim(*s.H) == 1);
        CHECK(check_distinguished_data(*s.H, s.d).passed());
    }
}

TEST_CASE("super A(1|1): distinguished data, KR pairs, SPiv, modularity") {
    for (int n : {1, 3}) {
        auto s = setup(preset_super_a11(n).bichar);
        const auto& bc = s.D->bichar();
        const auto& G = s.D->group();
        CHECK(s.d.i_ell == LatticeVec{0, 0});
        CHECK(s.d.g_H.is_trivial());
        CHECK(G.is_zero(s.d.alpha_point));

        auto sp = spiv(*s.H, s.d);
        REQUIRE(sp.size() == 1);
        CHECK(sp[0].a == bc.k_elem(LatticeVec{n, n}));
        CHECK(sp[0].a == bc.gamma(LatticeVec{1, 0}) * bc.gamma_bar(LatticeVec{0, 1}));
        CHECK(spherical_verdict(s.d, sp));

        auto rem = spherical_check_remark(bc, s.d.i_ell);
        bool has_10_01 = false;
        for (const auto& w : rem) {
            has_10_01 = has_10_01 || (w.b == LatticeVec{1, 0} && w.c == LatticeVec{0, 1});
            CHECK(w.a == sp[0].a);
        }
        CHECK(has_10_01);

        auto kr = enumerate_kr_pairs(*s.H, s.d);
        CHECK(kr.size() == 4);
        // KR pairs with zeta = eps are exactly SPiv
        std::size_t eps_pairs = 0;
        for (const auto& p : kr) {
            if (G.is_zero(p.zeta_point)) {
                ++eps_pairs;
                CHECK(p.a == sp[0].a);
            }
        }
        CHECK(eps_pairs == 1);

        auto mr = modularity_check(s.D->x_algebra());
        CHECK(mr.b_nondegenerate);
        CHECK(mr.radford_consistent);
        CHECK(mr.verdict == Verdict::Yes);
        // conditions evaluated by hand: r(g_j, g_1) = (-1)^{j_1}, r(g_j, g_2) = q^{j_1} (-1)^{j_2},
        // b(g_1, g_a) = q^{a_2}, b(g_2, g_a) = q^{a_1}, q^n = -1
        PairSet expect{{{0, 0}, {n, n}}, {{n, 0}, {0, 0}}, {{0, n}, {0, n}}, {{n, n}, {n, 0}}};
        CHECK(PairSet(mr.witnesses.begin(), mr.witnesses.end()) == expect);
        CHECK(mr.strict_witnesses == mr.witnesses);
        // each witness gives the KR pair zeta = evaluation at -j, a = k_a
        for (const auto& [j, a] : mr.witnesses) {
            const Character ka = bc.k_elem(a);
            CHECK(std::any_of(kr.begin(), kr.end(),
                              [&](const RibbonPair& p) { return p.zeta_point == G.neg(j) && p.a == ka; }));
        }
    }
}

TEST_CASE("modularity verdicts") {
    auto uq = NicholsAlgebra::build(preset_uqsl2(3).bichar);
    auto uq_rep = modularity_check(uq);
    CHECK(uq_rep.verdict == Verdict::Yes);
    // q_11 = w = zeta_3, i_ell = 2: j = 1 from 2j = 2; w^{4a} = w^2 forces a = 2, and w^{1 + 4 a} = w^{-1}
    REQUIRE(uq_rep.witnesses.size() == 1);
    CHECK(uq_rep.witnesses[0] == std::make_pair(LatticeVec{1}, LatticeVec{2}));
    CHECK(uq_rep.strict_witnesses.empty());
    auto uq5 = NicholsAlgebra::build(preset_uqsl2(5).bichar);
    CHECK(modularity_check(uq5).verdict == Verdict::Yes);

    // all q_ij = 1 over Z_2 x Z_2: b is trivial
    Bicharacter trivial(GroupData({2, 2}), 2, {{0, 0}, {0, 0}});
    auto poly = NicholsAlgebra::build(trivial, 5);
    CHECK_FALSE(poly.finite());
    auto rep = modularity_check(poly);
    CHECK_FALSE(rep.b_nondegenerate);
    CHECK(rep.verdict == Verdict::Undetermined);

    // q_11 = q_22 = -1, q_12 = q_21 = 1 over Z_2 x Z_2: finite, b trivial
    Bicharacter ext(GroupData({2, 2}), 2, {{1, 0}, {0, 1}});
    auto E = NicholsAlgebra::build(ext);
    REQUIRE(E.finite());
    auto rep2 = modularity_check(E);
    CHECK_FALSE(rep2.b_nondegenerate);
    CHECK(rep2.verdict == Verdict::No);
}

TEST_CASE("trivial algebra") {
    auto s = setup(Bicharacter(GroupData(std::vector<int>{}), 1, {}));
    CHECK(s.H->dim() == 1);
    CHECK(s.d.left_integral == 0);
    CHECK(s.d.g_H.is_trivial());
    auto sp = spiv(*s.H, s.d);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].a.is_trivial());
    CHECK(spherical_verdict(s.d, sp));
    auto rem = spherical_check_remark(s.D->bichar(), s.d.i_ell);
    REQUIRE(rem.size() == 1);
    CHECK(radford_consistency(s.D->bichar(), s.d.i_ell));
    GenericDouble DD(*s.H);
    auto kr = enumerate_kr_pairs(*s.H, s.d);
    REQUIRE(kr.size() == 1);
    Elem v = ribbon_element(DD, *s.H, kr[0]);
    CHECK(v == DD.unit());
    CHECK(verify_ribbon(DD, DD.r_matrix(), v).passed());
}

TEST_CASE("ribbon element of D(Taft_3)") {
    auto s = setup(preset_taft(3).bichar);
    auto kr = enumerate_kr_pairs(*s.H, s.d);
    REQUIRE(kr.size() == 1);
    GenericDouble DD(*s.H);
    const Elem2 R = DD.r_matrix();
    Elem v = ribbon_element(DD, *s.H, kr[0]);
    auto rep = verify_ribbon(DD, R, v);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.failure);

    // every ribbon element is u G^{-1} for a grouplike G = zeta (x) a of D(H); scan all 9
    const auto& G = s.D->group();
    int found = 0;
    for (std::int64_t p = 0; p < G.size(); ++p) {
        for (const auto& chi : characters(G, s.H->conductor())) {
            Elem w = ribbon_element(DD, point_functional(*s.H, G.element(p)), grouplike(*s.H, chi));
            if (verify_ribbon(DD, R, w).passed()) {
                ++found;
                CHECK(G.element(p) == G.neg(kr[0].zeta_point));
                CHECK(chi == kr[0].a.inv());
            }
        }
    }
    CHECK(found == 1);
}

TEST_CASE("ribbon elements of D(k Z_2)") {
    CyclicGroupAlgebra H(2);
    GenericDouble DD(H);
    const Elem2 R = DD.r_matrix();
    // grouplikes of H: g^0, g^1; of H*: eps and the sign character
    std::vector<Elem> hs{basis_elem(0, 1), basis_elem(1, 1)};
    std::vector<Elem> fs{Elem{{0, CycNumber(1)}, {1, CycNumber(1)}}, Elem{{0, CycNumber(1)}, {1, CycNumber(-1)}}};
    int found = 0;
    for (const auto& f : fs)
        for (const auto& a : hs) found += verify_ribbon(DD, R, ribbon_element(DD, f, a)).passed() ? 1 : 0;
    // zeta^2 = eps, a^2 = 1 and S^2 = id hold for all four pairs
    CHECK(found == 4);
    // a non-grouplike twist fails
    Elem bad = DD.mul(drinfeld_element(DD, R), DD.embed(Elem{{0, CycNumber(1)}, {1, CycNumber(1)}}));
    CHECK_FALSE(verify_ribbon(DD, R, bad).passed());
}
