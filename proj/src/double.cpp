#include "nd/double.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace nd {

namespace {

CycNumber coeff_of(const SVec& v, int idx) {
    for (const auto& [k, c] : v) {
        if (k == idx) return c;
    }
    return CycNumber();
}

CycNumber coeff_of(const Elem& v, std::int64_t idx) {
    auto it = v.find(idx);
    return it == v.end() ? CycNumber() : it->second;
}

std::string word_label(const char* sym, const Word& w) {
    std::string s;
    for (int l : w) s += sym + std::to_string(l + 1);
    return s;
}

}  // namespace

BraidedDouble::BraidedDouble(const Bicharacter& bc, int cutoff, PairingConvention pairing)
    : BraidedDouble(NicholsAlgebra::build(bc, cutoff), NicholsAlgebra::build(dual_braiding(bc), cutoff), pairing) {}

BraidedDouble::BraidedDouble(NicholsAlgebra x, NicholsAlgebra y, PairingConvention pairing)
    : bx_(std::move(x)), by_(std::move(y)), pairing_(pairing) {
    if (!bx_.finite() || !by_.finite()) {
        throw CutoffExceeded("Nichols algebra did not close below the cutoff; the double is undetermined");
    }
    nx_ = bx_.size();
    ny_ = by_.size();
    const GroupData& G = group();
    gsize_ = G.size();
    r_exp_.resize(static_cast<std::size_t>(gsize_ * gsize_));
    for (std::int64_t g = 0; g < gsize_; ++g) {
        LatticeVec gv = G.element(g);
        for (std::int64_t h = 0; h < gsize_; ++h) {
            r_exp_[static_cast<std::size_t>(g * gsize_ + h)] = bichar().r_exponent(gv, G.element(h));
        }
    }
    for (int i = 0; i < bichar().rank(); ++i) unit_idx_.push_back(G.index(G.unit(i)));
    x_prefix_.assign(static_cast<std::size_t>(nx_), -1);
    y_prefix_.assign(static_cast<std::size_t>(ny_), -1);
    for (int a = 1; a < nx_; ++a) {
        Word w = bx_.word(a);
        w.pop_back();
        x_prefix_[static_cast<std::size_t>(a)] = bx_.find(w);
    }
    for (int b = 1; b < ny_; ++b) {
        Word w = by_.word(b);
        w.pop_back();
        y_prefix_[static_cast<std::size_t>(b)] = by_.find(w);
    }
}

BraidedDouble::Index BraidedDouble::decode(std::int64_t k) const {
    Index out{};
    out.y = static_cast<int>(k % ny_);
    std::int64_t t = k / ny_;
    out.m = t % gsize_;
    out.x = static_cast<int>(t / gsize_);
    return out;
}

const Elem& BraidedDouble::mul_basis(std::int64_t a, std::int64_t b) const {
    const auto key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(dim()) + static_cast<std::uint64_t>(b);
    auto it = mul_cache_.find(key);
    if (it != mul_cache_.end()) return it->second;
    return mul_cache_.emplace(key, compute_mul(a, b)).first->second;
}

Elem BraidedDouble::compute_mul(std::int64_t a, std::int64_t b) const {
    const GroupData& G = group();
    const Index u = decode(a);
    const Index v = decode(b);
    Elem out;
    // delta_m y^B x^C delta_p vanishes unless m + deg B - deg C = p
    const std::int64_t lhs = G.add_index(G.add_index(u.m, by_.gdeg_index(u.y)), G.neg_index(bx_.gdeg_index(v.x)));
    if (lhs != v.m) return out;

    const int N = conductor();
    using State = std::tuple<int, std::int64_t, Word>;
    std::map<State, CycNumber> states;
    states.emplace(State{v.x, v.m, Word{}}, CycNumber::one(N));
    const Word& yb = by_.word(u.y);
    for (auto lt = yb.rbegin(); lt != yb.rend(); ++lt) {
        const int j = *lt;
        const std::int64_t ej = unit_idx_[static_cast<std::size_t>(j)];
        const RootOfUnity qjj_inv = bichar().q(j, j).inv();
        std::map<State, CycNumber> next;
        auto add = [&next](State s, const CycNumber& c) {
            if (c.is_zero()) return;
            auto [it, ins] = next.emplace(std::move(s), c);
            if (!ins) {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        for (const auto& [st, c] : states) {
            const auto& [E, pp, F] = st;
            const RootOfUnity chi = r_idx(ej, bx_.gdeg_index(E));
            Word F2;
            F2.reserve(F.size() + 1);
            F2.push_back(j);
            F2.insert(F2.end(), F.begin(), F.end());
            add(State{E, G.add_index(pp, G.neg_index(ej)), std::move(F2)}, c * chi.value());
            if (E == 0) continue;
            for (const auto& [e, ce] : bx_.left_derivation(E, j)) add(State{e, pp, F}, c * ce);
            const RootOfUnity coef = chi * qjj_inv * r_idx(pp, ej) * r_idx(ej, pp);
            const CycNumber mc = -(c * coef.value());
            for (const auto& [e, ce] : bx_.right_derivation(E, j)) add(State{e, pp, F}, mc * ce);
        }
        states = std::move(next);
    }

    const Word& yd = by_.word(v.y);
    for (const auto& [st, c] : states) {
        const auto& [E, pp, F] = st;
        if (G.add_index(u.m, G.neg_index(bx_.gdeg_index(E))) != pp) continue;
        const SVec& xs = bx_.mul(u.x, E);
        if (xs.empty()) continue;
        Word w = F;
        w.insert(w.end(), yd.begin(), yd.end());
        const SVec ys = by_.project(w);
        for (const auto& [xa, cx] : xs) {
            const CycNumber cc = c * cx;
            for (const auto& [ya, cy] : ys) add_term(out, index(xa, pp, ya), cc * cy);
        }
    }
    return out;
}

const Elem2& BraidedDouble::coproduct_basis(std::int64_t a) const {
    auto it = delta_cache_.find(a);
    if (it != delta_cache_.end()) return it->second;
    Elem2 d = compute_coproduct(a);
    return delta_cache_.emplace(a, std::move(d)).first->second;
}

Elem2 BraidedDouble::compute_coproduct(std::int64_t a) const {
    const GroupData& G = group();
    const int N = conductor();
    const Index u = decode(a);
    Elem2 out;
    if (u.x != 0 && u.y != 0) {
        return mul(coproduct_basis(index(u.x, u.m, 0)), coproduct_basis(index(0, u.m, u.y)));
    }
    if (u.x != 0 && bx_.degree(u.x) > 1) {
        const int letter = bx_.word(u.x).back();
        const std::int64_t shifted = G.add_index(u.m, unit_idx_[static_cast<std::size_t>(letter)]);
        const int single = bx_.find({letter});
        return mul(coproduct_basis(index(x_prefix_[static_cast<std::size_t>(u.x)], shifted, 0)),
                   coproduct_basis(index(single, u.m, 0)));
    }
    if (u.y != 0 && by_.degree(u.y) > 1) {
        const int letter = by_.word(u.y).back();
        const int prefix = y_prefix_[static_cast<std::size_t>(u.y)];
        const std::int64_t shifted = G.add_index(u.m, by_.gdeg_index(prefix));
        const int single = by_.find({letter});
        return mul(coproduct_basis(index(0, u.m, prefix)), coproduct_basis(index(0, shifted, single)));
    }
    for (std::int64_t s = 0; s < gsize_; ++s) {
        const std::int64_t t = G.add_index(u.m, G.neg_index(s));
        if (u.x == 0 && u.y == 0) {
            add_term(out, index(0, s, 0), index(0, t, 0), CycNumber::one(N));
        } else if (u.x != 0) {
            const std::int64_t gi = unit_idx_[static_cast<std::size_t>(bx_.word(u.x)[0])];
            add_term(out, index(u.x, s, 0), index(0, t, 0), CycNumber::one(N));
            add_term(out, index(0, s, 0), index(u.x, t, 0), r_idx(s, gi).value());
        } else {
            const std::int64_t gi = unit_idx_[static_cast<std::size_t>(by_.word(u.y)[0])];
            add_term(out, index(0, s, u.y), index(0, t, 0), CycNumber::one(N));
            add_term(out, index(0, s, 0), index(0, t, u.y), r_idx(gi, s).value());
        }
    }
    return out;
}

const Elem& BraidedDouble::antipode_basis(std::int64_t a) const {
    auto it = s_cache_.find(a);
    if (it != s_cache_.end()) return it->second;
    Elem s = compute_antipode(a);
    return s_cache_.emplace(a, std::move(s)).first->second;
}

Elem BraidedDouble::compute_antipode(std::int64_t a) const {
    const GroupData& G = group();
    const Index u = decode(a);
    if (u.x != 0 && u.y != 0) {
        return mul(antipode_basis(index(0, u.m, u.y)), antipode_basis(index(u.x, u.m, 0)));
    }
    if (u.x != 0 && bx_.degree(u.x) > 1) {
        const int letter = bx_.word(u.x).back();
        const std::int64_t shifted = G.add_index(u.m, unit_idx_[static_cast<std::size_t>(letter)]);
        return mul(antipode_basis(index(bx_.find({letter}), u.m, 0)),
                   antipode_basis(index(x_prefix_[static_cast<std::size_t>(u.x)], shifted, 0)));
    }
    if (u.y != 0 && by_.degree(u.y) > 1) {
        const int letter = by_.word(u.y).back();
        const int prefix = y_prefix_[static_cast<std::size_t>(u.y)];
        const std::int64_t shifted = G.add_index(u.m, by_.gdeg_index(prefix));
        return mul(antipode_basis(index(0, shifted, by_.find({letter}))), antipode_basis(index(0, u.m, prefix)));
    }
    const Elem dm = delta(G.neg_index(u.m));
    if (u.x == 0 && u.y == 0) return dm;
    Elem gen;
    if (u.x != 0) {
        // S(x_i) = -gamma_i^{-1} x_i, and delta_k x_i = x_i delta_{k - e_i}
        const std::int64_t gi = unit_idx_[static_cast<std::size_t>(bx_.word(u.x)[0])];
        for (std::int64_t k = 0; k < gsize_; ++k) {
            add_term(gen, index(u.x, G.add_index(k, G.neg_index(gi)), 0), -r_idx(k, gi).inv().value());
        }
        return mul(dm, gen);
    }
    const std::int64_t gi = unit_idx_[static_cast<std::size_t>(by_.word(u.y)[0])];
    for (std::int64_t k = 0; k < gsize_; ++k) add_term(gen, index(0, k, u.y), -r_idx(gi, k).inv().value());
    return mul(gen, dm);
}

CycNumber BraidedDouble::counit_basis(std::int64_t a) const {
    const Index u = decode(a);
    if (u.x == 0 && u.y == 0 && u.m == 0) return CycNumber::one(conductor());
    return CycNumber::zero(conductor());
}

Elem BraidedDouble::unit() const {
    Elem out;
    for (std::int64_t m = 0; m < gsize_; ++m) out.emplace(index(0, m, 0), CycNumber::one(conductor()));
    return out;
}

std::vector<Elem> BraidedDouble::generators() const {
    std::vector<Elem> out;
    const int n = bichar().rank();
    for (std::int64_t m = 0; m < gsize_; ++m) {
        out.push_back(delta(m));
        for (int i = 0; i < n; ++i) {
            out.push_back(basis_elem(index(bx_.find({i}), m, 0), conductor()));
            out.push_back(basis_elem(index(0, m, by_.find({i})), conductor()));
        }
    }
    return out;
}

std::string BraidedDouble::basis_label(std::int64_t a) const {
    const Index u = decode(a);
    std::string s = word_label("x", bx_.word(u.x));
    s += "d" + format_vec(group().element(u.m));
    s += word_label("y", by_.word(u.y));
    return s;
}

Elem BraidedDouble::delta(std::int64_t m) const { return basis_elem(index(0, m, 0), conductor()); }

Elem BraidedDouble::x(int i) const {
    Elem out;
    const int xi = bx_.find({i});
    for (std::int64_t m = 0; m < gsize_; ++m) out.emplace(index(xi, m, 0), CycNumber::one(conductor()));
    return out;
}

Elem BraidedDouble::y(int i) const {
    Elem out;
    const int yi = by_.find({i});
    for (std::int64_t m = 0; m < gsize_; ++m) out.emplace(index(0, m, yi), CycNumber::one(conductor()));
    return out;
}

Elem BraidedDouble::character_elem(const Character& chi) const {
    Elem out;
    for (std::int64_t m = 0; m < gsize_; ++m) add_term(out, index(0, m, 0), chi.eval(group().element(m)).value());
    return out;
}

Elem BraidedDouble::gamma(int i) const { return character_elem(bichar().gamma(group().unit(i))); }
Elem BraidedDouble::gamma_bar(int i) const { return character_elem(bichar().gamma_bar(group().unit(i))); }
Elem BraidedDouble::k(int i) const { return character_elem(bichar().k_elem(group().unit(i))); }

CycNumber BraidedDouble::pair_word(const Word& w, const SVec& x) const {
    SVec cur = x;
    Word rest = w;
    while (!rest.empty() && !cur.empty()) {
        const bool first = pairing_ == PairingConvention::FirstLeft || pairing_ == PairingConvention::FirstRight;
        const bool left = pairing_ == PairingConvention::FirstLeft || pairing_ == PairingConvention::LastLeft;
        int j;
        if (first) {
            j = rest.front();
            rest.erase(rest.begin());
        } else {
            j = rest.back();
            rest.pop_back();
        }
        SVec next;
        for (const auto& [e, c] : cur) {
            if (e == 0) continue;
            svec_axpy(next, c, left ? bx_.left_derivation(e, j) : bx_.right_derivation(e, j));
        }
        cur = std::move(next);
    }
    if (!rest.empty()) return CycNumber::zero(conductor());
    return coeff_of(cur, 0);
}

CycNumber BraidedDouble::pairing(int y_idx, int x_idx) const {
    if (by_.multidegree(y_idx) != bx_.multidegree(x_idx)) return CycNumber::zero(conductor());
    return pair_word(by_.word(y_idx), SVec{{x_idx, CycNumber::one(conductor())}});
}

const std::vector<SVec>& BraidedDouble::dual_basis() const {
    if (dual_ready_) return dual_;
    std::map<std::vector<int>, std::vector<int>> xblocks, yblocks;
    for (int a = 0; a < nx_; ++a) xblocks[bx_.multidegree(a)].push_back(a);
    for (int b = 0; b < ny_; ++b) yblocks[by_.multidegree(b)].push_back(b);
    dual_.assign(static_cast<std::size_t>(nx_), SVec{});
    for (const auto& [md, xs] : xblocks) {
        const auto& ys = yblocks[md];
        if (ys.size() != xs.size()) throw std::logic_error("x and y blocks of different size in multidegree");
        const std::size_t s = xs.size();
        Matrix gram = zero_matrix(s, s, conductor());
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t c = 0; c < s; ++c) gram[r][c] = pairing(ys[r], xs[c]);
        auto inv = inverse(gram);
        if (!inv) throw std::logic_error("pairing between the Nichols algebras is degenerate");
        for (std::size_t a = 0; a < s; ++a) {
            SVec row;
            for (std::size_t b = 0; b < s; ++b) {
                if (!(*inv)[a][b].is_zero()) row.emplace_back(ys[b], (*inv)[a][b]);
            }
            std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
            dual_[static_cast<std::size_t>(xs[a])] = std::move(row);
        }
    }
    dual_ready_ = true;
    return dual_;
}

Elem2 BraidedDouble::r_matrix() const {
    const auto& dual = dual_basis();
    Elem2 R;
    for (int a = 0; a < nx_; ++a) {
        for (const auto& [b, c] : dual[static_cast<std::size_t>(a)]) {
            for (std::int64_t m = 0; m < gsize_; ++m) {
                for (std::int64_t k = 0; k < gsize_; ++k) add_term(R, index(0, m, b), index(a, k, 0), c * r_idx(k, m).value());
            }
        }
    }
    return R;
}

SmashAlgebra::SmashAlgebra(std::shared_ptr<const BraidedDouble> d) : d_(std::move(d)) {}

Elem SmashAlgebra::to_ambient(const Elem& e) const {
    Elem out;
    for (const auto& [k, c] : e) out.emplace(to_ambient(k), c);
    return out;
}

Elem SmashAlgebra::from_ambient(const Elem& e) const {
    const std::int64_t ny = d_->y_algebra().size();
    Elem out;
    for (const auto& [k, c] : e) {
        if (k % ny != 0) throw std::logic_error("element leaves the smash product");
        out.emplace(k / ny, c);
    }
    return out;
}

const Elem& SmashAlgebra::mul_basis(std::int64_t a, std::int64_t b) const {
    const auto key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(dim()) + static_cast<std::uint64_t>(b);
    auto it = mul_cache_.find(key);
    if (it != mul_cache_.end()) return it->second;
    return mul_cache_.emplace(key, from_ambient(d_->mul_basis(to_ambient(a), to_ambient(b)))).first->second;
}

const Elem2& SmashAlgebra::coproduct_basis(std::int64_t a) const {
    auto it = delta_cache_.find(a);
    if (it != delta_cache_.end()) return it->second;
    const std::int64_t ny = d_->y_algebra().size();
    Elem2 out;
    for (const auto& [k, c] : d_->coproduct_basis(to_ambient(a))) {
        if (k.first % ny != 0 || k.second % ny != 0) throw std::logic_error("coproduct leaves the smash product");
        out.emplace(std::make_pair(k.first / ny, k.second / ny), c);
    }
    return delta_cache_.emplace(a, std::move(out)).first->second;
}

const Elem& SmashAlgebra::antipode_basis(std::int64_t a) const {
    auto it = s_cache_.find(a);
    if (it != s_cache_.end()) return it->second;
    return s_cache_.emplace(a, from_ambient(d_->antipode_basis(to_ambient(a)))).first->second;
}

Elem SmashAlgebra::unit() const { return from_ambient(d_->unit()); }

std::vector<Elem> SmashAlgebra::generators() const {
    std::vector<Elem> out;
    const auto& bx = d_->x_algebra();
    for (std::int64_t m = 0; m < d_->group_size(); ++m) {
        out.push_back(basis_elem(index(0, m), conductor()));
        for (int i = 0; i < bx.rank(); ++i) out.push_back(basis_elem(index(bx.find({i}), m), conductor()));
    }
    return out;
}

GenericDouble::GenericDouble(const FiniteHopfAlgebra& h, std::int64_t max_base_dim) : d_(h.dim()) {
    if (d_ > max_base_dim) {
        throw BoundExceeded("Drinfeld double needs dim H <= " + std::to_string(max_base_dim) + ", got " +
                            std::to_string(d_));
    }
    h_ = std::make_unique<TabulatedHopfAlgebra>(h);
    const int N = conductor();
    const auto d = static_cast<std::size_t>(d_);

    Matrix s = zero_matrix(d, d, N);
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto& [j, c] : h_->antipode_basis(static_cast<std::int64_t>(i))) s[static_cast<std::size_t>(j)][i] = c;
    }
    auto sinv = inverse(s);
    if (!sinv) throw std::logic_error("antipode is not invertible");
    s_inv_.resize(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) add_term(s_inv_[i], static_cast<std::int64_t>(j), (*sinv)[j][i]);

    for (std::int64_t a = 0; a < d_; ++a) {
        Elem3 t;
        for (const auto& [k, c] : h_->coproduct_basis(a)) {
            for (const auto& [k2, c2] : h_->coproduct_basis(k.first)) add_term(t, {k2.first, k2.second, k.second}, c * c2);
        }
        delta2_.push_back(std::move(t));
    }

    // Delta(e^i (x) a) = sum_{p,q} <e^i, e_p e_q> (e^q (x) a_1) (x) (e^p (x) a_2)
    delta_.resize(d * d);
    for (std::int64_t p = 0; p < d_; ++p) {
        for (std::int64_t q = 0; q < d_; ++q) {
            for (const auto& [i, c] : h_->mul_basis(p, q)) {
                for (std::int64_t a = 0; a < d_; ++a) {
                    for (const auto& [k, ck] : h_->coproduct_basis(a)) {
                        add_term(delta_[static_cast<std::size_t>(index(i, a))], index(q, k.first), index(p, k.second), c * ck);
                    }
                }
            }
        }
    }
}

const Elem& GenericDouble::mul_basis(std::int64_t a, std::int64_t b) const {
    const auto key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(dim()) + static_cast<std::uint64_t>(b);
    auto it = mul_cache_.find(key);
    if (it != mul_cache_.end()) return it->second;

    const std::int64_t i = a / d_, s = a % d_;
    const std::int64_t j = b / d_, t = b % d_;
    const int N = conductor();
    Elem out;
    for (const auto& [k, c] : delta2_[static_cast<std::size_t>(s)]) {
        const std::int64_t a1 = k[0], a2 = k[1], a3 = k[2];
        // g'(e_q) = <e^j, S^{-1}(a_3) e_q a_1>
        std::vector<CycNumber> g(static_cast<std::size_t>(d_), CycNumber::zero(N));
        for (std::int64_t q = 0; q < d_; ++q) {
            g[static_cast<std::size_t>(q)] =
                coeff_of(h_->mul(h_->mul(s_inv_[static_cast<std::size_t>(a3)], basis_elem(q, N)), basis_elem(a1, N)), j);
        }
        const Elem& right = h_->mul_basis(a2, t);
        if (right.empty()) continue;
        for (std::int64_t u = 0; u < d_; ++u) {
            CycNumber val = CycNumber::zero(N);
            for (const auto& [kk, cu] : h_->coproduct_basis(u)) {
                if (kk.first == i) val += cu * g[static_cast<std::size_t>(kk.second)];
            }
            if (val.is_zero()) continue;
            const CycNumber cv = c * val;
            for (const auto& [v, cr] : right) add_term(out, index(u, v), cv * cr);
        }
    }
    return mul_cache_.emplace(key, std::move(out)).first->second;
}

const Elem& GenericDouble::antipode_basis(std::int64_t a) const {
    auto it = s_cache_.find(a);
    if (it != s_cache_.end()) return it->second;
    const std::int64_t i = a / d_, s = a % d_;
    // S(f (x) a) = (eps (x) S(a)) (f o S^{-1} (x) 1)
    Elem f;
    for (std::int64_t j = 0; j < d_; ++j) add_term(f, j, coeff_of(s_inv_[static_cast<std::size_t>(j)], i));
    Elem out = mul(embed(h_->antipode_basis(s)), embed_dual(f));
    return s_cache_.emplace(a, std::move(out)).first->second;
}

CycNumber GenericDouble::counit_basis(std::int64_t a) const {
    const std::int64_t i = a / d_, s = a % d_;
    const CycNumber e = h_->counit_basis(s);
    if (e.is_zero()) return e;
    return coeff_of(h_->unit(), i) * e;
}

Elem GenericDouble::unit() const { return embed(h_->unit()); }

std::vector<Elem> GenericDouble::generators() const {
    std::vector<Elem> out;
    for (const auto& g : h_->generators()) out.push_back(embed(g));
    for (std::int64_t i = 0; i < d_; ++i) out.push_back(embed_dual(basis_elem(i, conductor())));
    return out;
}

std::string GenericDouble::basis_label(std::int64_t a) const {
    return "(" + h_->basis_label(a / d_) + ")^*|" + h_->basis_label(a % d_);
}

Elem GenericDouble::counit_functional() const {
    Elem f;
    for (std::int64_t k = 0; k < d_; ++k) add_term(f, k, h_->counit_basis(k));
    return f;
}

Elem GenericDouble::embed(const Elem& a) const {
    Elem out;
    for (const auto& [k, ck] : counit_functional())
        for (const auto& [t, c] : a) add_term(out, index(k, t), ck * c);
    return out;
}

Elem GenericDouble::embed_dual(const Elem& f) const {
    Elem out;
    const Elem one = h_->unit();
    for (const auto& [j, cj] : f)
        for (const auto& [l, cl] : one) add_term(out, index(j, l), cj * cl);
    return out;
}

Elem2 GenericDouble::r_matrix() const {
    Elem2 R;
    for (std::int64_t i = 0; i < d_; ++i) {
        const Elem l = embed(basis_elem(i, conductor()));
        const Elem r = embed_dual(basis_elem(i, conductor()));
        for (const auto& [a, ca] : l)
            for (const auto& [b, cb] : r) add_term(R, a, b, ca * cb);
    }
    return R;
}

}  // namespace nd
