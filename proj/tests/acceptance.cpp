// Acceptance run: one PASS/FAIL line per criterion, with elapsed time against a fixed budget.

#include "nd/catalog.hpp"
#include "nd/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace nd;

namespace {

class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (!ok) failures_.push_back(what);
    }
    bool passed() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }
    int checked() const { return checked_; }

private:
    std::vector<std::string> failures_;
    int checked_ = 0;
};

std::string str(const LatticeVec& v) { return format_vec(v); }

std::string str(const Character& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.values().size(); ++i) os << (i ? " " : "") << c.values()[i];
    os << "]";
    return os.str();
}

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

std::string first_failure(const HopfReport& r) {
    for (const auto& c : r.checks)
        if (!c.passed) return c.name + ": " + c.failure;
    return "";
}

// element x = sum_m x_1 delta_m of H
Elem x_generator(const SmashAlgebra& H) {
    Elem x;
    const int x1 = H.nichols().find(Word{0});
    for (std::int64_t m = 0; m < H.ambient().group_size(); ++m) add_term(x, H.index(x1, m), CycNumber::one(H.conductor()));
    return x;
}

// Taft parity of KR pairs
void criterion1(Criterion& c) {
    for (int n : {3, 4, 5, 6}) {
        const auto t0 = std::chrono::steady_clock::now();
        auto s = setup(preset_taft(n).bichar);
        auto kr = enumerate_kr_pairs(*s.H, s.d);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        if (n % 2 == 0) {
            c.expect(kr.empty(), tag + "expected 0 pairs, got " + std::to_string(kr.size()));
        } else {
            const int m = (n + 1) / 2;
            const auto& G = s.D->group();
            c.expect(kr.size() == 1, tag + "expected 1 pair, got " + std::to_string(kr.size()));
            if (kr.size() == 1) {
                c.expect(kr[0].zeta_point == G.scale(s.d.alpha_point, m), tag + "zeta != alpha^m");
                c.expect(kr[0].a == s.d.g_H.pow(m), tag + "a != g^m");
            }
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(sec < 5.0, tag + "took " + std::to_string(sec) + " s (budget 5 s)");
    }
}

// Taft distinguished data; g is the grouplike with Delta(x) = g^{-1} (x) x + x (x) 1, i.e. gamma_1^{-1}
void criterion2(Criterion& c) {
    for (int n : {3, 5}) {
        const std::string tag = "n=" + std::to_string(n) + ": ";
        auto s = setup(preset_taft(n).bichar);
        const auto& H = *s.H;
        const Character g = s.D->bichar().gamma(LatticeVec{1}).inv();
        const Elem ge = grouplike(H, g);
        const Elem x = x_generator(H);
        const RootOfUnity q_m2(-2, 2 * n);
        c.expect(H.mul(ge, x) == scaled(H.mul(x, ge), q_m2.value()), tag + "g x != q^-2 x g");
        c.expect(s.d.g_H == g, tag + "g_H = " + str(s.d.g_H) + ", g = " + str(g));
        c.expect(g.eval(s.d.alpha_point) == q_m2, tag + "alpha_H(g) != q^-2");
        // alpha_H(x) = 0 is Lambda x = alpha_H(x) Lambda = 0
        c.expect(H.mul(basis_elem(s.d.left_integral, H.conductor()), x).empty(), tag + "alpha_H(x) != 0");
        c.expect(check_distinguished_data(H, s.d).passed(), tag + "integral characterization fails");
        c.expect(!spherical_verdict(s.d, spiv(H, s.d)), tag + "spherical verdict true");
    }
}

// Super A(1|1) at one n
void criterion3(Criterion& c, int n, double budget) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const auto bc = preset_super_a11(n).bichar;
    auto s = setup(bc);
    const auto& B = s.D->x_algebra();
    c.expect(B.total_dim() == 8 * n, tag + "total dim " + std::to_string(B.total_dim()));
    c.expect(s.D->group().is_zero(B.i_ell()), tag + "i_ell = " + str(B.i_ell()));
    c.expect(bc.is_nondegenerate(), tag + "b degenerate");
    auto mr = modularity_check(B);
    using PairSet = std::set<std::pair<LatticeVec, LatticeVec>>;
    const PairSet expected{{{0, 0}, {n, n}}, {{n, 0}, {n, 0}}, {{0, n}, {0, 0}}, {{n, n}, {0, n}}};
    const PairSet got(mr.witnesses.begin(), mr.witnesses.end());
    if (got != expected) {
        std::string w;
        for (const auto& [j, a] : got) w += " (" + str(j) + "," + str(a) + ")";
        c.expect(false, tag + "witnesses are" + w);
    }
    c.expect(mr.verdict == Verdict::Yes, tag + "verdict " + to_string(mr.verdict));
    const Character k1n = bc.k_elem(LatticeVec{1, 0}).pow(n);
    const Character k2n = bc.k_elem(LatticeVec{0, 1}).pow(n);
    auto sp = spiv(*s.H, s.d);
    c.expect(sp.size() == 1 && sp[0].a == k1n * k2n, tag + "spiv != {k_1^n k_2^n}");
    c.expect(spherical_verdict(s.d, sp), tag + "spherical verdict false");
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream b;
    b << tag << "took " << sec << " s (budget " << budget << " s)";
    c.expect(sec < budget, b.str());
}

// u_q(sl2) n = 3
void criterion4(Criterion& c) {
    BraidedDouble D(preset_uqsl2(3).bichar);
    c.expect(D.dim() == 27, "double dim " + std::to_string(D.dim()));
    auto rep = verify_hopf(D, full_scope(D, 27 * 27 * 27));
    c.expect(rep.passed(), "hopf: " + first_failure(rep));
    std::vector<Elem> all;
    for (std::int64_t a = 0; a < D.dim(); ++a) all.push_back(basis_elem(a, D.conductor()));
    const auto R = D.r_matrix();
    auto qt = verify_quasitriangular(D, R, all);
    c.expect(qt.passed(), "quasitriangular: " + first_failure(qt));
    const auto rank = drinfeld_map_rank(D, R);
    c.expect(rank == 27, "drinfeld map rank " + std::to_string(rank));
    c.expect(modularity_check(D.x_algebra()).verdict == Verdict::Yes, "modularity verdict not modular");
}

// ribbon element of Drin(T_3)
void criterion5(Criterion& c) {
    auto s = setup(preset_taft(3).bichar);
    auto kr = enumerate_kr_pairs(*s.H, s.d);
    c.expect(kr.size() == 1, "KR pairs: " + std::to_string(kr.size()));
    if (kr.size() != 1) return;
    GenericDouble DD(*s.H);
    c.expect(DD.dim() == 81 && DD.dim() == 3 * 27, "dim Drin(T_3) = " + std::to_string(DD.dim()));
    const Elem2 R = DD.r_matrix();
    auto rep = verify_ribbon(DD, R, ribbon_element(DD, *s.H, kr[0]));
    c.expect(rep.checks.size() == 5, "expected five ribbon properties");
    for (const auto& chk : rep.checks) {
        c.expect(chk.passed, chk.name + ": " + chk.failure);
        if (chk.name == "central") c.expect(chk.checked == 81, "centrality checked on " + std::to_string(chk.checked) + " elements");
    }
}

// Cartan A2 at l = 5
void criterion6(Criterion& c) {
    const auto p = preset_cartan("A2", 5);
    auto B = NicholsAlgebra::build(p.bichar);
    c.expect(B.finite() && B.total_dim() == 125, "total dim " + std::to_string(B.total_dim()));
    c.expect(p.roots.has_value() && p.roots->positive.size() == 3, "three positive roots");
    c.expect(p.roots && B.check_root_formula(*p.roots), "root formula for i_ell");
    auto mr = modularity_check(B);
    c.expect(mr.b_nondegenerate, "(i) fails");
    c.expect(!mr.witnesses.empty(), "(ii) has no witness");
    c.expect(mr.verdict == Verdict::Yes, "verdict " + to_string(mr.verdict));
}

// Property suites on every preset
void criterion7(Criterion& c) {
    const std::vector<Preset> presets{preset_taft(3),       preset_taft(4),         preset_taft(5),
                                      preset_taft(6),       preset_uqsl2(3),        preset_uqsl2(5),
                                      preset_super_a11(1),  preset_super_a11(3),    preset_cartan("A2", 3),
                                      preset_cartan("A2", 5), preset_cartan("B2", 3)};
    for (const auto& p : presets) {
        const auto& bc = p.bichar;
        const auto& G = bc.group();
        const std::string tag = p.name + " " + str(LatticeVec(G.orders().begin(), G.orders().end())) + ": ";
        bool laws = true, sym = true;
        for (std::int64_t a = 0; a < G.size() && laws; ++a) {
            const auto g = G.element(a);
            for (std::int64_t b = 0; b < G.size() && laws; ++b) {
                const auto h = G.element(b);
                sym = sym && bc.b(g, h) == bc.b(h, g);
                for (std::int64_t e = 0; e < G.size() && laws; ++e) {
                    const auto k = G.element(e);
                    laws = bc.r(G.add(g, h), k) == bc.r(g, k) * bc.r(h, k) && bc.r(g, G.add(h, k)) == bc.r(g, h) * bc.r(g, k);
                }
            }
        }
        c.expect(laws, tag + "r is not a bicharacter");
        c.expect(sym, tag + "b not symmetric");

        auto s = setup(bc);
        const auto& D = *s.D;
        const std::int64_t bdim = D.x_algebra().total_dim();
        c.expect(D.dim() == bdim * bdim * G.size(), tag + "dim(double) != dim(B)^2 |G|");

        // the elementwise identities run on the whole basis up to dim 512, else on x^A delta_m y^B of degree <= 1 in x and y
        AxiomScope scope = sampled_scope(D, D.dim() <= 512 ? D.dim() : 0, 200, 400, 11);
        if (D.dim() > 512) {
            scope.basis.clear();
            const int low = D.x_algebra().degree_end(1);
            for (int a = 0; a < low; ++a)
                for (int b = 0; b < low; ++b)
                    for (std::int64_t m = 0; m < G.size(); m += std::max<std::int64_t>(1, G.size() / 3)) scope.basis.push_back(D.index(a, m, b));
        }
        auto rep = verify_hopf(D, scope);
        c.expect(rep.passed(), tag + first_failure(rep));

        auto kr = enumerate_kr_pairs(*s.H, s.d);
        if (!kr.empty()) c.expect(radford_consistency(bc, s.d.i_ell), tag + "radford consistency fails");
        if (G.is_zero(s.d.alpha_point)) {
            std::vector<Character> from_kr;
            for (const auto& pr : kr)
                if (G.is_zero(pr.zeta_point)) from_kr.push_back(pr.a);
            auto sp = spiv(*s.H, s.d);
            bool same = sp.size() == from_kr.size();
            for (std::size_t i = 0; same && i < sp.size(); ++i) same = sp[i].a == from_kr[i];
            c.expect(same, tag + "spiv differs from KR pairs with zeta = eps");
        }
        auto mr = modularity_check(D.x_algebra());
        for (const auto& [j, a] : mr.witnesses) {
            const Character ka = bc.k_elem(a);
            bool found = false;
            for (const auto& pr : kr) found = found || (pr.zeta_point == G.neg(j) && pr.a == ka);
            c.expect(found, tag + "witness (" + str(j) + "," + str(a) + ") is not a KR pair");
        }
    }
}

}  // namespace

int main() {
    struct Entry {
        int id;
        std::string title;
        double budget;
        std::function<void(Criterion&)> run;
    };
    const std::vector<Entry> entries{
        {1, "Taft parity of Kauffman-Radford pairs (n = 3, 4, 5, 6)", 20, criterion1},
        {2, "Taft distinguished grouplikes (n = 3, 5)", 5, criterion2},
        {3, "super A(1|1) n = 1, 3: dims, i_ell, witnesses, spiv, spherical", 610,
         [](Criterion& c) {
             criterion3(c, 1, 10);
             criterion3(c, 3, 600);
         }},
        {4, "u_q(sl2) n = 3: exhaustive axioms, QT, QYBE, Drinfeld rank, modular", 120, criterion4},
        {5, "Drin(T_3): ribbon element from the KR pair", 300, criterion5},
        {6, "Cartan A2 l = 5: dim 125, root formula, modular", 600, criterion6},
        {7, "property suites on every preset", 900, criterion7},
    };
    int failed = 0;
    for (const auto& e : entries) {
        Criterion c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(sec < e.budget, "over budget");
        char line[256];
        std::snprintf(line, sizeof line, "criterion %d: %s  %.2f s (budget %.0f s, %d checks)  %s", e.id,
                      c.passed() ? "PASS" : "FAIL", sec, e.budget, c.checked(), e.title.c_str());
        std::cout << line << "\n";
        for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
        std::cout.flush();
        if (!c.passed()) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
    return failed == 0 ? 0 : 1;
}
