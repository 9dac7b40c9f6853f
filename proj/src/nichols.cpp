#include "nd/nichols.hpp"

#include <algorithm>
#include <cmath>

namespace nd {

SVec svec_add(const SVec& a, const SVec& b) {
    SVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            CycNumber v = a[i].second + b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SVec svec_scale(const SVec& a, const CycNumber& c) {
    SVec out;
    if (c.is_zero()) return out;
    out.reserve(a.size());
    for (const auto& [k, v] : a) out.emplace_back(k, v * c);
    return out;
}

void svec_axpy(SVec& acc, const CycNumber& c, const SVec& x) {
    if (c.is_zero() || x.empty()) return;
    acc = svec_add(acc, svec_scale(x, c));
}

bool GroupRingElem::is_zero() const {
    return std::all_of(mult.begin(), mult.end(), [](std::int64_t v) { return v == 0; });
}

CycNumber GroupRingElem::value(int conductor) const { return CycNumber::from_powers(mult, conductor); }

namespace {

void add_scaled(GroupRingElem& acc, const GroupRingElem& x, std::int64_t rot, int n) {
    if (acc.mult.empty()) acc.mult.assign(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        std::int64_t v = x.mult[static_cast<std::size_t>(k)];
        if (v == 0) continue;
        auto& slot = acc.mult[static_cast<std::size_t>(mod_floor(k + rot, n))];
        if (__builtin_add_overflow(slot, v, &slot)) throw std::overflow_error("symmetrizer coefficient overflow");
    }
}

// T_d (v (x) x_j): insert x_j at every position k, picking up prod_{t>=k} q_{w_t j}.
std::map<Word, GroupRingElem> apply_shuffle(const std::map<Word, GroupRingElem>& v, int j, const Bicharacter& bc) {
    const int n = bc.conductor();
    std::map<Word, GroupRingElem> out;
    for (const auto& [w, c] : v) {
        const int len = static_cast<int>(w.size());
        std::int64_t rot = 0;
        for (int k = len; k >= 0; --k) {
            if (k < len) rot += bc.q(w[static_cast<std::size_t>(k)], j).exponent();
            Word nw;
            nw.reserve(w.size() + 1);
            nw.insert(nw.end(), w.begin(), w.begin() + k);
            nw.push_back(j);
            nw.insert(nw.end(), w.begin() + k, w.end());
            add_scaled(out[nw], c, rot, n);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

Bicharacter dual_braiding(const Bicharacter& bc) {
    const auto n = static_cast<std::size_t>(bc.rank());
    std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i][j] = mod_floor(-bc.q(static_cast<int>(j), static_cast<int>(i)).exponent(), bc.conductor());
        }
    }
    return Bicharacter(bc.group(), bc.conductor(), e);
}

NicholsAlgebra NicholsAlgebra::build(const Bicharacter& bc, int cutoff) {
    if (cutoff < 1) throw InputError("cutoff must be >= 1");
    NicholsAlgebra B;
    B.bc_ = bc;
    B.cutoff_ = cutoff;
    const int n = bc.rank();
    const int N = bc.conductor();
    const GroupData& G = bc.group();

    auto add_section = [&](Word w, std::vector<int> md, LatticeVec g) {
        int idx = static_cast<int>(B.words_.size());
        B.index_.emplace(w, idx);
        B.words_.push_back(std::move(w));
        B.gdeg_idx_.push_back(G.index(g));
        B.gdeg_.push_back(std::move(g));
        B.multideg_.push_back(std::move(md));
        B.rmul_.emplace_back(static_cast<std::size_t>(n));
        return idx;
    };

    GroupRingElem one;
    one.mult.assign(static_cast<std::size_t>(N), 0);
    one.mult[0] = 1;
    B.offsets_ = {0};
    add_section({}, std::vector<int>(static_cast<std::size_t>(n), 0), G.zero());
    B.sym_.push_back({{Word{}, one}});
    B.offsets_.push_back(1);
    B.dims_.push_back(1);

    for (int d = 1; d <= cutoff; ++d) {
        if (static_cast<double>(d) * std::log2(std::max(n, 2)) > 63.0) {
            throw CutoffExceeded("degree " + std::to_string(d) + " exceeds the packed word key range");
        }
        const int prev_begin = B.offsets_[static_cast<std::size_t>(d) - 1];
        const int prev_end = B.offsets_[static_cast<std::size_t>(d)];
        struct Block {
            SparseEchelon ech;
            std::vector<int> accepted;  // basis indices in input order
        };
        std::map<std::vector<int>, Block> blocks;
        for (int s = prev_begin; s < prev_end; ++s) {
            for (int i = 0; i < n; ++i) {
                std::vector<int> md = B.multideg_[static_cast<std::size_t>(s)];
                md[static_cast<std::size_t>(i)] += 1;
                auto image = apply_shuffle(B.sym_[static_cast<std::size_t>(s)], i, bc);
                SparseRow row;
                row.reserve(image.size());
                for (const auto& [w, c] : image) {
                    // base-n packing: numeric order is lexicographic order
                    std::uint64_t key = 0;
                    for (int letter : w) key = key * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(letter);
                    row.emplace_back(key, c.value(N));
                }
                auto it = blocks.find(md);
                if (it == blocks.end()) it = blocks.emplace(md, Block{SparseEchelon(N), {}}).first;
                Block& blk = it->second;
                auto dep = blk.ech.insert(std::move(row));
                Word w = B.words_[static_cast<std::size_t>(s)];
                w.push_back(i);
                if (!dep) {
                    LatticeVec g = G.add(B.gdeg_[static_cast<std::size_t>(s)], G.unit(i));
                    int idx = add_section(w, md, g);
                    B.sym_.push_back(std::move(image));
                    blk.accepted.push_back(idx);
                    B.rmul_[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] = {{idx, CycNumber::one(N)}};
                } else {
                    SVec coords;
                    for (std::size_t k = 0; k < dep->size(); ++k) {
                        if (!(*dep)[k].is_zero()) coords.emplace_back(blk.accepted[k], (*dep)[k]);
                    }
                    std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                    B.rmul_[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] = std::move(coords);
                }
            }
        }
        const int end = static_cast<int>(B.words_.size());
        B.offsets_.push_back(end);
        B.dims_.push_back(end - prev_end);
        if (end == prev_end) {
            B.dims_.pop_back();
            B.offsets_.pop_back();
            B.finite_ = true;
            break;
        }
    }
    if (B.finite_) {
        int top = B.top_index();
        B.i_ell_ = B.gdeg_[static_cast<std::size_t>(top)];
    }
    return B;
}

int NicholsAlgebra::ell() const {
    if (!finite_) throw CutoffExceeded("cutoff exceeded: top degree not reached");
    return static_cast<int>(dims_.size()) - 1;
}

const LatticeVec& NicholsAlgebra::i_ell() const {
    if (!finite_) throw CutoffExceeded("cutoff exceeded: top degree not reached");
    return i_ell_;
}

int NicholsAlgebra::top_index() const {
    int l = ell();
    if (dims_[static_cast<std::size_t>(l)] != 1) throw std::logic_error("top degree component is not one-dimensional");
    return degree_begin(l);
}

int NicholsAlgebra::find(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

const SVec& NicholsAlgebra::rmul(int idx, int letter) const {
    const int d = degree(idx);
    if (!finite_ && d >= max_degree()) throw CutoffExceeded("cutoff exceeded: product leaves the computed degrees");
    return rmul_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(letter)];
}

SVec NicholsAlgebra::right_multiply(const SVec& v, int letter) const {
    SVec out;
    for (const auto& [idx, c] : v) svec_axpy(out, c, rmul(idx, letter));
    return out;
}

SVec NicholsAlgebra::project(const Word& w) const {
    SVec v{{0, CycNumber::one(conductor())}};
    for (int letter : w) {
        v = right_multiply(v, letter);
        if (v.empty()) break;
    }
    return v;
}

const SVec& NicholsAlgebra::mul(int a, int b) const {
    std::uint64_t key = pair_key(a, b);
    auto it = mul_cache_.find(key);
    if (it != mul_cache_.end()) return it->second;
    SVec v{{a, CycNumber::one(conductor())}};
    for (int letter : word(b)) {
        v = right_multiply(v, letter);
        if (v.empty()) break;
    }
    return mul_cache_.emplace(key, std::move(v)).first->second;
}

SVec NicholsAlgebra::mul(const SVec& a, const SVec& b) const {
    SVec out;
    for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : b) svec_axpy(out, ci * cj, mul(i, j));
    }
    return out;
}

std::map<Word, CycNumber> NicholsAlgebra::symmetrizer_image(int idx) const {
    std::map<Word, CycNumber> out;
    for (const auto& [w, c] : sym_[static_cast<std::size_t>(idx)]) out.emplace(w, c.value(conductor()));
    return out;
}

const SVec& NicholsAlgebra::left_derivation(int idx, int j) const {
    std::uint64_t key = pair_key(idx, j);
    auto it = dl_cache_.find(key);
    if (it != dl_cache_.end()) return it->second;
    const Word& w = word(idx);
    SVec out;
    std::int64_t e = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (w[t] == j) {
            Word rest = w;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
            svec_axpy(out, RootOfUnity(e, conductor()).value(), project(rest));
        }
        e += q(w[t], j).exponent();
    }
    return dl_cache_.emplace(key, std::move(out)).first->second;
}

const SVec& NicholsAlgebra::right_derivation(int idx, int j) const {
    std::uint64_t key = pair_key(idx, j);
    auto it = dr_cache_.find(key);
    if (it != dr_cache_.end()) return it->second;
    const Word& w = word(idx);
    SVec out;
    std::int64_t e = 0;
    for (std::size_t t = w.size(); t-- > 0;) {
        if (w[t] == j) {
            Word rest = w;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
            svec_axpy(out, RootOfUnity(e, conductor()).value(), project(rest));
        }
        e += q(j, w[t]).exponent();
    }
    return dr_cache_.emplace(key, std::move(out)).first->second;
}

bool NicholsAlgebra::check_root_formula(const RootDatum& roots) const {
    const GroupData& G = bc_.group();
    if (roots.positive.size() != roots.orders.size()) throw InputError("roots: positive and orders differ in length");
    LatticeVec sum = G.zero();
    for (std::size_t b = 0; b < roots.positive.size(); ++b) {
        sum = G.add(sum, G.scale(G.reduce(roots.positive[b]), roots.orders[b] - 1));
    }
    return sum == i_ell();
}

Matrix symmetrizer_matrix(const Bicharacter& bc, int d) {
    const int n = bc.rank();
    const int N = bc.conductor();
    std::int64_t total = 1;
    for (int k = 0; k < d; ++k) total *= n;
    if (total > 4096) throw CutoffExceeded("symmetrizer_matrix: word space too large");
    // column c = S_d(word c); build column images via the same shuffle recursion on single words
    auto word_of = [&](std::int64_t idx, int len) {
        Word w(static_cast<std::size_t>(len));
        for (int k = len; k-- > 0;) {
            w[static_cast<std::size_t>(k)] = static_cast<int>(idx % n);
            idx /= n;
        }
        return w;
    };
    auto index_of = [&](const Word& w) {
        std::int64_t idx = 0;
        for (int l : w) idx = idx * n + l;
        return idx;
    };
    GroupRingElem one;
    one.mult.assign(static_cast<std::size_t>(N), 0);
    one.mult[0] = 1;
    Matrix m = zero_matrix(static_cast<std::size_t>(total), static_cast<std::size_t>(total), N);
    for (std::int64_t c = 0; c < total; ++c) {
        Word w = word_of(c, d);
        std::map<Word, GroupRingElem> v{{Word{}, one}};
        for (int letter : w) v = apply_shuffle(v, letter, bc);
        for (const auto& [u, coef] : v) m[static_cast<std::size_t>(index_of(u))][static_cast<std::size_t>(c)] = coef.value(N);
    }
    return m;
}

}  // namespace nd
