#include "nd/verifier.hpp"

#include <random>
#include <set>

namespace nd {

namespace {

CycNumber evaluate(const Elem& functional, const Elem& x) {
    CycNumber out;
    for (const auto& [k, c] : x) {
        auto it = functional.find(k);
        if (it != functional.end()) out += it->second * c;
    }
    return out;
}

CycNumber evaluate(const Elem& functional, std::int64_t k) {
    auto it = functional.find(k);
    return it == functional.end() ? CycNumber() : it->second;
}

Elem3 double_coproduct(const FiniteHopfAlgebra& H, const Elem& h) {
    Elem3 out;
    for (const auto& [k, c] : H.coproduct(h)) {
        for (const auto& [k1, c1] : H.coproduct_basis(k.first)) add_term(out, {k1.first, k1.second, k.second}, c * c1);
    }
    return out;
}

// sum zeta_l(h_1) x h_2 y zeta_r(h_3)
Elem winding(const FiniteHopfAlgebra& H, const Elem& h, const Elem& zl, const Elem& x, const Elem& y, const Elem& zr) {
    Elem out;
    for (const auto& [k, c] : double_coproduct(H, h)) {
        const CycNumber l = evaluate(zl, k[0]);
        if (l.is_zero()) continue;
        const CycNumber r = evaluate(zr, k[2]);
        if (r.is_zero()) continue;
        axpy(out, c * l * r, H.mul(H.mul(x, basis_elem(k[1], H.conductor())), y));
    }
    return out;
}

LatticeVec character_exponents(const GroupData& G, const Character& chi) {
    LatticeVec t;
    for (std::size_t s = 0; s < chi.values().size(); ++s) {
        const RootOfUnity& z = chi.values()[s];
        const std::int64_t m = G.orders()[s];
        t.push_back(static_cast<int>(z.exponent() * m / z.conductor()));
    }
    return t;
}

std::vector<std::int64_t> check_indices(const SmashAlgebra& H, std::int64_t max_checks) {
    std::vector<std::int64_t> out;
    if (H.dim() <= max_checks) {
        for (std::int64_t a = 0; a < H.dim(); ++a) out.push_back(a);
        return out;
    }
    const auto& B = H.nichols();
    const std::int64_t g = H.ambient().group_size();
    std::set<std::int64_t> pick;
    for (int x = B.degree_begin(B.max_degree()); x < B.degree_end(B.max_degree()); ++x)
        for (std::int64_t m = 0; m < g; ++m) pick.insert(H.index(x, m));
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> d(0, H.dim() - 1);
    while (static_cast<std::int64_t>(pick.size()) < max_checks) pick.insert(d(rng));
    return {pick.begin(), pick.end()};
}

}  // namespace

Elem grouplike(const SmashAlgebra& H, const Character& chi) {
    Elem out;
    const auto& G = H.ambient().group();
    for (std::int64_t m = 0; m < G.size(); ++m) add_term(out, H.index(0, m), chi.eval(G.element(m)).value());
    return out;
}

Elem point_functional(const SmashAlgebra& H, const LatticeVec& p) {
    return basis_elem(H.index(0, H.ambient().group().index(p)), H.conductor());
}

HopfReport check_distinguished_data(const SmashAlgebra& H, const DistinguishedData& d, std::int64_t max_basis_checks) {
    HopfReport rep;
    const int N = H.conductor();
    const Elem lam = basis_elem(d.left_integral, N);
    const Elem alpha = point_functional(H, d.alpha_point);

    CheckResult left{"left integral"}, alpha_chk{"alpha_H"};
    for (const auto& h : H.generators()) {
        ++left.checked;
        if (H.mul(h, lam) != scaled(lam, H.counit(h))) left.fail("h Lambda != eps(h) Lambda for h=" + H.label(h));
        ++alpha_chk.checked;
        if (H.mul(lam, h) != scaled(lam, evaluate(alpha, h))) alpha_chk.fail("Lambda h != alpha(h) Lambda for h=" + H.label(h));
    }
    rep.checks.push_back(left);
    rep.checks.push_back(alpha_chk);

    CheckResult right{"right integral of the dual"}, g_chk{"g_H"};
    const Elem one = H.unit();
    const Elem g = grouplike(H, d.g_H);
    for (std::int64_t a : check_indices(H, max_basis_checks)) {
        const Elem2& delta = H.coproduct_basis(a);
        const CycNumber la = evaluate(d.right_integral, a);
        Elem l, r;
        for (const auto& [k, c] : delta) {
            CycNumber v1 = evaluate(d.right_integral, k.first);
            if (!v1.is_zero()) add_term(l, k.second, c * v1);
            CycNumber v2 = evaluate(d.right_integral, k.second);
            if (!v2.is_zero()) add_term(r, k.first, c * v2);
        }
        ++right.checked;
        if (l != scaled(one, la)) right.fail("(lambda (x) id) Delta != lambda 1 on " + H.basis_label(a));
        ++g_chk.checked;
        if (r != scaled(g, la)) g_chk.fail("(id (x) lambda) Delta != lambda g_H on " + H.basis_label(a));
    }
    rep.checks.push_back(right);
    rep.checks.push_back(g_chk);
    return rep;
}

DistinguishedData distinguished_data(const SmashAlgebra& H, std::int64_t max_basis_checks) {
    const auto& B = H.nichols();
    const auto& G = H.ambient().group();
    DistinguishedData d;
    d.i_ell = B.i_ell();
    d.alpha_point = G.neg(d.i_ell);
    d.g_H = B.bichar().gamma(d.i_ell);
    d.left_integral = H.index(B.top_index(), G.index(d.alpha_point));
    for (std::int64_t m = 0; m < G.size(); ++m) d.right_integral.emplace(H.index(B.top_index(), m), CycNumber::one(H.conductor()));
    HopfReport rep = check_distinguished_data(H, d, max_basis_checks);
    for (const auto& c : rep.checks) {
        if (!c.passed) throw std::logic_error("distinguished data: " + c.name + ": " + c.failure);
    }
    return d;
}

bool satisfies_s2(const SmashAlgebra& H, const LatticeVec& zeta_point, const Character& a) {
    const auto& G = H.ambient().group();
    const Elem zl = point_functional(H, G.neg(zeta_point));
    const Elem zr = point_functional(H, zeta_point);
    const Elem ae = grouplike(H, a);
    const Elem ai = grouplike(H, a.inv());
    for (const auto& h : H.generators()) {
        if (H.antipode(H.antipode(h)) != winding(H, h, zl, ae, ai, zr)) return false;
    }
    return true;
}

std::vector<RibbonPair> enumerate_kr_pairs(const SmashAlgebra& H, const DistinguishedData& d) {
    const auto& G = H.ambient().group();
    const auto chars = characters(G, H.conductor());
    std::vector<RibbonPair> out;
    for (std::int64_t p = 0; p < G.size(); ++p) {
        const LatticeVec pv = G.element(p);
        if (G.scale(pv, 2) != G.reduce(d.alpha_point)) continue;
        for (const auto& chi : chars) {
            if (chi * chi != d.g_H) continue;
            if (satisfies_s2(H, pv, chi)) out.push_back({pv, chi, character_exponents(G, chi)});
        }
    }
    return out;
}

std::vector<SphericalWitness> spiv(const SmashAlgebra& H, const DistinguishedData& d) {
    const auto& G = H.ambient().group();
    std::vector<SphericalWitness> out;
    for (const auto& chi : characters(G, H.conductor())) {
        if (chi * chi != d.g_H) continue;
        if (satisfies_s2(H, G.zero(), chi)) out.push_back({chi, character_exponents(G, chi)});
    }
    return out;
}

bool spherical_verdict(const DistinguishedData& d, const std::vector<SphericalWitness>& witnesses) {
    bool alpha_trivial = true;
    for (int v : d.alpha_point) alpha_trivial = alpha_trivial && v == 0;
    return alpha_trivial && !witnesses.empty();
}

std::vector<RemarkWitness> spherical_check_remark(const Bicharacter& bc, const LatticeVec& i_ell) {
    const auto& G = bc.group();
    std::vector<RemarkWitness> out;
    if (!G.is_zero(i_ell)) return out;
    for (std::int64_t bi = 0; bi < G.size(); ++bi) {
        const LatticeVec b = G.element(bi);
        for (std::int64_t ci = 0; ci < G.size(); ++ci) {
            const LatticeVec c = G.element(ci);
            const Character a = bc.gamma(b) * bc.gamma_bar(c);
            if (!(a * a).is_trivial()) continue;
            bool ok = true;
            for (int i = 0; i < bc.rank() && ok; ++i) {
                const LatticeVec ei = G.unit(i);
                ok = bc.r(ei, b) * bc.r(c, ei) == bc.q(i, i).inv();
            }
            if (ok) out.push_back({b, c, a});
        }
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "modular";
        case Verdict::No: return "not-modular-by-criterion";
        case Verdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

bool radford_consistency(const Bicharacter& bc, const LatticeVec& i_ell) {
    const auto& G = bc.group();
    for (int i = 0; i < bc.rank(); ++i) {
        const LatticeVec ei = G.unit(i);
        if (bc.r(i_ell, ei) * bc.r(ei, i_ell) != bc.q(i, i).pow(-2)) return false;
    }
    return true;
}

ModularityReport modularity_check(const NicholsAlgebra& B) {
    ModularityReport rep;
    const Bicharacter& bc = B.bichar();
    const auto& G = bc.group();
    rep.finite = B.finite();
    rep.b_nondegenerate = bc.is_nondegenerate();
    if (!rep.finite) return rep;
    const LatticeVec il = B.i_ell();
    rep.radford_consistent = radford_consistency(bc, il);

    const LatticeVec half_target = G.reduce(il);
    for (std::int64_t jk = 0; jk < G.size(); ++jk) {
        const LatticeVec j = G.element(jk);
        if (G.scale(j, 2) != half_target) continue;
        for (std::int64_t ak = 0; ak < G.size(); ++ak) {
            const LatticeVec a = G.element(ak);
            bool ok = true;
            for (int i = 0; i < bc.rank() && ok; ++i) {
                const LatticeVec ei = G.unit(i);
                const RootOfUnity bia = bc.b(ei, a);
                ok = bia * bia == bc.r(ei, il) && bc.r(j, ei) * bia == bc.q(i, i).inv();
            }
            if (!ok) continue;
            rep.witnesses.emplace_back(j, a);
            if (G.scale(a, 2) == half_target) rep.strict_witnesses.emplace_back(j, a);
        }
    }
    rep.verdict = rep.b_nondegenerate && !rep.witnesses.empty() ? Verdict::Yes : Verdict::No;
    return rep;
}

bool radford_s4_check(const SmashAlgebra& H, const DistinguishedData& d) {
    const Elem al = point_functional(H, H.ambient().group().neg(d.alpha_point));
    const Elem ar = point_functional(H, d.alpha_point);
    const Elem g = grouplike(H, d.g_H);
    const Elem gi = grouplike(H, d.g_H.inv());
    for (const auto& h : H.generators()) {
        Elem s4 = H.antipode(H.antipode(H.antipode(H.antipode(h))));
        if (s4 != winding(H, h, al, g, gi, ar)) return false;
    }
    return true;
}

Elem drinfeld_element(const FiniteHopfAlgebra& D, const Elem2& R) {
    Elem u;
    for (const auto& [k, c] : R) axpy(u, c, D.mul(D.antipode_basis(k.second), basis_elem(k.first, D.conductor())));
    return u;
}

Elem ribbon_element(const GenericDouble& DD, const Elem& zeta_inv, const Elem& a_inv) {
    const Elem u = drinfeld_element(DD, DD.r_matrix());
    return DD.mul(u, DD.mul(DD.embed_dual(zeta_inv), DD.embed(a_inv)));
}

Elem ribbon_element(const GenericDouble& DD, const SmashAlgebra& H, const RibbonPair& pair) {
    const auto& G = H.ambient().group();
    return ribbon_element(DD, point_functional(H, G.neg(pair.zeta_point)), grouplike(H, pair.a.inv()));
}

std::optional<Elem> inverse_element(const FiniteHopfAlgebra& D, const Elem& v) {
    const auto d = static_cast<std::size_t>(D.dim());
    Matrix L = zero_matrix(d, d, D.conductor());
    for (std::size_t j = 0; j < d; ++j) {
        for (const auto& [i, c] : D.mul(v, basis_elem(static_cast<std::int64_t>(j), D.conductor()))) {
            L[static_cast<std::size_t>(i)][j] = c;
        }
    }
    auto inv = inverse(L);
    if (!inv) return std::nullopt;
    Elem w;
    for (const auto& [k, c] : D.unit()) {
        for (std::size_t i = 0; i < d; ++i) add_term(w, static_cast<std::int64_t>(i), (*inv)[i][static_cast<std::size_t>(k)] * c);
    }
    return w;
}

HopfReport verify_ribbon(const FiniteHopfAlgebra& D, const Elem2& R, const Elem& v) {
    HopfReport rep;
    const int N = D.conductor();
    CheckResult central{"central"};
    for (std::int64_t a = 0; a < D.dim(); ++a) {
        ++central.checked;
        const Elem e = basis_elem(a, N);
        if (D.mul(v, e) != D.mul(e, v)) central.fail("v does not commute with " + D.basis_label(a));
    }
    rep.checks.push_back(central);

    CheckResult invertible{"invertible"};
    ++invertible.checked;
    auto w = inverse_element(D, v);
    if (!w || D.mul(*w, v) != D.unit()) invertible.fail("v is not invertible");
    rep.checks.push_back(invertible);

    CheckResult eps{"eps(v) = 1"};
    ++eps.checked;
    if (!D.counit(v).is_one()) eps.fail("eps(v) = " + D.counit(v).to_string());
    rep.checks.push_back(eps);

    CheckResult s{"S(v) = v"};
    ++s.checked;
    if (D.antipode(v) != v) s.fail("S(v) != v");
    rep.checks.push_back(s);

    CheckResult delta{"Delta(v) = (R21 R)^{-1} (v (x) v)"};
    ++delta.checked;
    Elem2 vv;
    for (const auto& [i, ci] : v)
        for (const auto& [j, cj] : v) add_term(vv, i, j, ci * cj);
    if (D.mul(D.mul(flip(R), R), D.coproduct(v)) != vv) delta.fail("R21 R Delta(v) != v (x) v");
    rep.checks.push_back(delta);
    return rep;
}

}  // namespace nd
