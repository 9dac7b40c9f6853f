#include "nd/hopf.hpp"

#include <random>
#include <sstream>

namespace nd {

void add_term(Elem& e, std::int64_t k, const CycNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

void add_term(Elem2& e, std::int64_t a, std::int64_t b, const CycNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.emplace(std::make_pair(a, b), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

void add_term(Elem3& e, const std::array<std::int64_t, 3>& k, const CycNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

void axpy(Elem& acc, const CycNumber& c, const Elem& x) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : x) add_term(acc, k, c * v);
}

void axpy(Elem2& acc, const CycNumber& c, const Elem2& x) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : x) add_term(acc, k.first, k.second, c * v);
}

Elem scaled(const Elem& x, const CycNumber& c) {
    Elem out;
    axpy(out, c, x);
    return out;
}

Elem basis_elem(std::int64_t k, int conductor) { return Elem{{k, CycNumber::one(conductor)}}; }

bool is_zero(const Elem& e) { return e.empty(); }
bool is_zero(const Elem2& e) { return e.empty(); }

Elem2 flip(const Elem2& x) {
    Elem2 out;
    for (const auto& [k, v] : x) out.emplace(std::make_pair(k.second, k.first), v);
    return out;
}

Elem FiniteHopfAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : b) axpy(out, ci * cj, mul_basis(i, j));
    }
    return out;
}

Elem2 FiniteHopfAlgebra::mul(const Elem2& a, const Elem2& b) const {
    Elem2 out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            const Elem& l = mul_basis(ka.first, kb.first);
            if (l.empty()) continue;
            const Elem& r = mul_basis(ka.second, kb.second);
            if (r.empty()) continue;
            CycNumber c = ca * cb;
            for (const auto& [i, ci] : l) {
                CycNumber cl = c * ci;
                for (const auto& [j, cj] : r) add_term(out, i, j, cl * cj);
            }
        }
    }
    return out;
}

Elem3 FiniteHopfAlgebra::mul(const Elem3& a, const Elem3& b) const {
    Elem3 out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            const Elem& e0 = mul_basis(ka[0], kb[0]);
            if (e0.empty()) continue;
            const Elem& e1 = mul_basis(ka[1], kb[1]);
            if (e1.empty()) continue;
            const Elem& e2 = mul_basis(ka[2], kb[2]);
            if (e2.empty()) continue;
            CycNumber c = ca * cb;
            for (const auto& [i, ci] : e0)
                for (const auto& [j, cj] : e1)
                    for (const auto& [k, ck] : e2) add_term(out, {i, j, k}, c * ci * cj * ck);
        }
    }
    return out;
}

Elem2 FiniteHopfAlgebra::coproduct(const Elem& a) const {
    Elem2 out;
    for (const auto& [i, c] : a) axpy(out, c, coproduct_basis(i));
    return out;
}

Elem FiniteHopfAlgebra::antipode(const Elem& a) const {
    Elem out;
    for (const auto& [i, c] : a) axpy(out, c, antipode_basis(i));
    return out;
}

CycNumber FiniteHopfAlgebra::counit(const Elem& a) const {
    CycNumber out = CycNumber::zero(conductor());
    for (const auto& [i, c] : a) {
        CycNumber e = counit_basis(i);
        if (!e.is_zero()) out += c * e;
    }
    return out;
}

std::string FiniteHopfAlgebra::label(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : a) {
        if (!first) os << " + ";
        os << "(" << c << ")" << basis_label(i);
        first = false;
        if (os.tellp() > 400) {
            os << " + ...";
            break;
        }
    }
    if (first) os << "0";
    return os.str();
}

bool HopfReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

AxiomScope full_scope(const FiniteHopfAlgebra& H, std::int64_t max_triples, unsigned seed) {
    AxiomScope s;
    const std::int64_t d = H.dim();
    for (std::int64_t i = 0; i < d; ++i) s.basis.push_back(i);
    const std::size_t g = H.generators().size();
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) s.generator_pairs.emplace_back(i, j);
    if (d * d * d <= max_triples) {
        for (std::int64_t a = 0; a < d; ++a)
            for (std::int64_t b = 0; b < d; ++b)
                for (std::int64_t c = 0; c < d; ++c) s.triples.push_back({a, b, c});
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> pick(0, d - 1);
        for (std::int64_t t = 0; t < max_triples; ++t) s.triples.push_back({pick(rng), pick(rng), pick(rng)});
    }
    return s;
}

AxiomScope sampled_scope(const FiniteHopfAlgebra& H, std::int64_t basis_samples, std::int64_t triple_samples,
                         std::int64_t pair_samples, unsigned seed) {
    AxiomScope s;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, H.dim() - 1);
    if (basis_samples >= H.dim()) {
        for (std::int64_t i = 0; i < H.dim(); ++i) s.basis.push_back(i);
    } else {
        for (std::int64_t i = 0; i < basis_samples; ++i) s.basis.push_back(pick(rng));
    }
    for (std::int64_t t = 0; t < triple_samples; ++t) s.triples.push_back({pick(rng), pick(rng), pick(rng)});
    const auto g = static_cast<std::int64_t>(H.generators().size());
    if (g * g <= pair_samples) {
        for (std::int64_t i = 0; i < g; ++i)
            for (std::int64_t j = 0; j < g; ++j) s.generator_pairs.emplace_back(i, j);
    } else {
        std::uniform_int_distribution<std::int64_t> gp(0, g - 1);
        for (std::int64_t t = 0; t < pair_samples; ++t) s.generator_pairs.emplace_back(gp(rng), gp(rng));
    }
    return s;
}

namespace {

Elem3 delta_left(const FiniteHopfAlgebra& H, const Elem2& x) {
    Elem3 out;
    for (const auto& [k, c] : x) {
        for (const auto& [k2, c2] : H.coproduct_basis(k.first)) add_term(out, {k2.first, k2.second, k.second}, c * c2);
    }
    return out;
}

Elem3 delta_right(const FiniteHopfAlgebra& H, const Elem2& x) {
    Elem3 out;
    for (const auto& [k, c] : x) {
        for (const auto& [k2, c2] : H.coproduct_basis(k.second)) add_term(out, {k.first, k2.first, k2.second}, c * c2);
    }
    return out;
}

}  // namespace

HopfReport verify_hopf(const FiniteHopfAlgebra& H, const AxiomScope& scope) {
    HopfReport rep;
    const int N = H.conductor();
    const Elem one = H.unit();
    const auto gens = H.generators();

    CheckResult unit{"unit"};
    for (auto a : scope.basis) {
        Elem e = basis_elem(a, N);
        ++unit.checked;
        if (H.mul(one, e) != e || H.mul(e, one) != e) unit.fail("1 * " + H.basis_label(a) + " != " + H.basis_label(a));
    }
    rep.checks.push_back(unit);

    CheckResult assoc{"associativity"};
    for (const auto& t : scope.triples) {
        ++assoc.checked;
        Elem a = basis_elem(t[0], N), c = basis_elem(t[2], N);
        if (H.mul(H.mul_basis(t[0], t[1]), c) != H.mul(a, H.mul_basis(t[1], t[2]))) {
            assoc.fail("(ab)c != a(bc) for " + H.basis_label(t[0]) + ", " + H.basis_label(t[1]) + ", " + H.basis_label(t[2]));
        }
    }
    rep.checks.push_back(assoc);

    CheckResult unit_coalg{"unit is grouplike"};
    ++unit_coalg.checked;
    {
        Elem2 oo;
        for (const auto& [i, ci] : one)
            for (const auto& [j, cj] : one) add_term(oo, i, j, ci * cj);
        if (H.coproduct(one) != oo) unit_coalg.fail("Delta(1) != 1 (x) 1");
        if (!H.counit(one).is_one()) unit_coalg.fail("eps(1) != 1");
    }
    rep.checks.push_back(unit_coalg);

    CheckResult coassoc{"coassociativity"}, counit{"counit"}, anti{"antipode"};
    for (auto a : scope.basis) {
        const Elem2& d = H.coproduct_basis(a);
        Elem e = basis_elem(a, N);
        ++coassoc.checked;
        if (delta_left(H, d) != delta_right(H, d)) coassoc.fail("(D (x) id) D != (id (x) D) D on " + H.basis_label(a));
        ++counit.checked;
        Elem l, r;
        for (const auto& [k, c] : d) {
            add_term(l, k.second, c * H.counit_basis(k.first));
            add_term(r, k.first, c * H.counit_basis(k.second));
        }
        if (l != e || r != e) counit.fail("counit axiom fails on " + H.basis_label(a));
        ++anti.checked;
        Elem sl, sr;
        for (const auto& [k, c] : d) {
            axpy(sl, c, H.mul(H.antipode_basis(k.first), basis_elem(k.second, N)));
            axpy(sr, c, H.mul(basis_elem(k.first, N), H.antipode_basis(k.second)));
        }
        Elem expect = scaled(one, H.counit_basis(a));
        if (sl != expect || sr != expect) anti.fail("m(S (x) id) D != eps 1 on " + H.basis_label(a));
    }
    rep.checks.push_back(coassoc);
    rep.checks.push_back(counit);
    rep.checks.push_back(anti);

    CheckResult dmul{"coproduct is multiplicative"}, emul{"counit is multiplicative"}, smul{"antipode is anti-multiplicative"};
    for (const auto& [i, j] : scope.generator_pairs) {
        const Elem& g = gens[i];
        const Elem& h = gens[j];
        Elem gh = H.mul(g, h);
        ++dmul.checked;
        if (H.coproduct(gh) != H.mul(H.coproduct(g), H.coproduct(h))) {
            dmul.fail("Delta(gh) != Delta(g)Delta(h) for g=" + H.label(g) + ", h=" + H.label(h));
        }
        ++emul.checked;
        if (H.counit(gh) != H.counit(g) * H.counit(h)) emul.fail("eps(gh) != eps(g)eps(h) for g=" + H.label(g));
        ++smul.checked;
        if (H.antipode(gh) != H.mul(H.antipode(h), H.antipode(g))) {
            smul.fail("S(gh) != S(h)S(g) for g=" + H.label(g) + ", h=" + H.label(h));
        }
    }
    rep.checks.push_back(dmul);
    rep.checks.push_back(emul);
    rep.checks.push_back(smul);
    return rep;
}

HopfReport verify_quasitriangular(const FiniteHopfAlgebra& H, const Elem2& R, const std::vector<Elem>& test_elements) {
    HopfReport rep;
    const int N = H.conductor();

    CheckResult left{"(Delta (x) id) R = R13 R23"};
    {
        ++left.checked;
        Elem3 lhs = delta_left(H, R);
        Elem3 rhs;
        for (const auto& [k1, c1] : R) {
            for (const auto& [k2, c2] : R) {
                const Elem& bd = H.mul_basis(k1.second, k2.second);
                for (const auto& [j, cj] : bd) add_term(rhs, {k1.first, k2.first, j}, c1 * c2 * cj);
            }
        }
        if (lhs != rhs) left.fail("coproduct in the first leg does not match R13 R23");
    }
    rep.checks.push_back(left);

    CheckResult right{"(id (x) Delta) R = R13 R12"};
    {
        ++right.checked;
        Elem3 lhs = delta_right(H, R);
        Elem3 rhs;
        for (const auto& [k1, c1] : R) {
            for (const auto& [k2, c2] : R) {
                const Elem& ac = H.mul_basis(k1.first, k2.first);
                for (const auto& [i, ci] : ac) add_term(rhs, {i, k2.second, k1.second}, c1 * c2 * ci);
            }
        }
        if (lhs != rhs) right.fail("coproduct in the second leg does not match R13 R12");
    }
    rep.checks.push_back(right);

    CheckResult braid{"Delta^op(h) R = R Delta(h)"};
    for (const auto& h : test_elements) {
        ++braid.checked;
        Elem2 d = H.coproduct(h);
        if (H.mul(flip(d), R) != H.mul(R, d)) braid.fail("fails for h=" + H.label(h));
    }
    rep.checks.push_back(braid);

    CheckResult inv{"R invertible with inverse (S (x) id) R"};
    {
        ++inv.checked;
        Elem2 Rinv;
        for (const auto& [k, c] : R) {
            for (const auto& [i, ci] : H.antipode_basis(k.first)) add_term(Rinv, i, k.second, c * ci);
        }
        Elem one = H.unit();
        Elem2 oo;
        for (const auto& [i, ci] : one)
            for (const auto& [j, cj] : one) add_term(oo, i, j, ci * cj);
        if (H.mul(R, Rinv) != oo || H.mul(Rinv, R) != oo) inv.fail("R (S (x) id)(R) != 1 (x) 1");
    }
    rep.checks.push_back(inv);

    CheckResult ybe{"R12 R13 R23 = R23 R13 R12"};
    {
        ++ybe.checked;
        Elem3 r12, r13, r23;
        Elem one = H.unit();
        for (const auto& [k, c] : R) {
            for (const auto& [u, cu] : one) {
                add_term(r12, {k.first, k.second, u}, c * cu);
                add_term(r13, {k.first, u, k.second}, c * cu);
                add_term(r23, {u, k.first, k.second}, c * cu);
            }
        }
        Elem3 lhs = H.mul(H.mul(r12, r13), r23);
        Elem3 rhs = H.mul(H.mul(r23, r13), r12);
        if (lhs != rhs) ybe.fail("quantum Yang-Baxter equation fails");
    }
    rep.checks.push_back(ybe);
    (void)N;
    return rep;
}

std::size_t drinfeld_map_rank(const FiniteHopfAlgebra& H, const Elem2& R) {
    Elem2 q = H.mul(flip(R), R);
    const auto d = static_cast<std::size_t>(H.dim());
    Matrix m = zero_matrix(d, d, H.conductor());
    for (const auto& [k, c] : q) m[static_cast<std::size_t>(k.first)][static_cast<std::size_t>(k.second)] = c;
    return rank(std::move(m));
}

TabulatedHopfAlgebra::TabulatedHopfAlgebra(const FiniteHopfAlgebra& src)
    : dim_(src.dim()), conductor_(src.conductor()), unit_(src.unit()), gens_(src.generators()) {
    const auto d = static_cast<std::size_t>(dim_);
    mul_.resize(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            mul_[a * d + b] = src.mul_basis(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
        }
        delta_.push_back(src.coproduct_basis(static_cast<std::int64_t>(a)));
        s_.push_back(src.antipode_basis(static_cast<std::int64_t>(a)));
        eps_.push_back(src.counit_basis(static_cast<std::int64_t>(a)));
        labels_.push_back(src.basis_label(static_cast<std::int64_t>(a)));
    }
}

const Elem& TabulatedHopfAlgebra::mul_basis(std::int64_t a, std::int64_t b) const {
    return mul_[static_cast<std::size_t>(a * dim_ + b)];
}

}  // namespace nd
