#include "nd/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace nd {

GroupData::GroupData(std::vector<int> orders) : orders_(std::move(orders)) {
    strides_.assign(orders_.size(), 1);
    for (std::size_t s = orders_.size(); s-- > 0;) {
        if (orders_[s] < 1) throw InputError("group.orders: every order must be >= 1");
        strides_[s] = size_;
        size_ *= orders_[s];
        exponent_ = static_cast<int>(lcm64(exponent_, orders_[s]));
    }
}

LatticeVec GroupData::unit(int i) const {
    LatticeVec v = zero();
    v[static_cast<std::size_t>(i)] = 1 % orders_[static_cast<std::size_t>(i)];
    return v;
}

LatticeVec GroupData::reduce(LatticeVec v) const {
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = static_cast<int>(mod_floor(v[s], orders_[s]));
    return v;
}

LatticeVec GroupData::add(const LatticeVec& a, const LatticeVec& b) const {
    LatticeVec v(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) v[s] = static_cast<int>(mod_floor(a[s] + b[s], orders_[s]));
    return v;
}

LatticeVec GroupData::sub(const LatticeVec& a, const LatticeVec& b) const {
    LatticeVec v(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) v[s] = static_cast<int>(mod_floor(a[s] - b[s], orders_[s]));
    return v;
}

LatticeVec GroupData::neg(const LatticeVec& a) const { return sub(zero(), a); }

LatticeVec GroupData::scale(const LatticeVec& a, std::int64_t k) const {
    LatticeVec v(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) v[s] = static_cast<int>(mod_floor(a[s] * mod_floor(k, orders_[s]), orders_[s]));
    return v;
}

bool GroupData::is_zero(const LatticeVec& a) const {
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (mod_floor(a[s], orders_[s]) != 0) return false;
    }
    return true;
}

std::int64_t GroupData::index(const LatticeVec& v) const {
    std::int64_t idx = 0;
    for (std::size_t s = 0; s < orders_.size(); ++s) idx += mod_floor(v[s], orders_[s]) * strides_[s];
    return idx;
}

LatticeVec GroupData::element(std::int64_t idx) const {
    LatticeVec v(orders_.size());
    for (std::size_t s = 0; s < orders_.size(); ++s) {
        v[s] = static_cast<int>(idx / strides_[s]);
        idx %= strides_[s];
    }
    return v;
}

std::int64_t GroupData::add_index(std::int64_t a, std::int64_t b) const {
    std::int64_t out = 0;
    for (std::size_t s = 0; s < orders_.size(); ++s) {
        std::int64_t x = a / strides_[s], y = b / strides_[s];
        a %= strides_[s];
        b %= strides_[s];
        out += ((x + y) % orders_[s]) * strides_[s];
    }
    return out;
}

std::int64_t GroupData::neg_index(std::int64_t a) const {
    std::int64_t out = 0;
    for (std::size_t s = 0; s < orders_.size(); ++s) {
        std::int64_t x = a / strides_[s];
        a %= strides_[s];
        out += ((orders_[s] - x) % orders_[s]) * strides_[s];
    }
    return out;
}

RootOfUnity Character::eval(const LatticeVec& g) const {
    RootOfUnity out(0, values_.empty() ? 1 : values_[0].conductor());
    for (std::size_t s = 0; s < values_.size(); ++s) out = out * values_[s].pow(g[s]);
    return out;
}

Character Character::operator*(const Character& o) const {
    std::vector<RootOfUnity> v(values_.size());
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = values_[s] * o.values_[s];
    return Character(std::move(v));
}

Character Character::inv() const {
    std::vector<RootOfUnity> v(values_.size());
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = values_[s].inv();
    return Character(std::move(v));
}

Character Character::pow(std::int64_t e) const {
    std::vector<RootOfUnity> v(values_.size());
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = values_[s].pow(e);
    return Character(std::move(v));
}

bool Character::is_trivial() const {
    for (const auto& v : values_) {
        if (!v.is_one()) return false;
    }
    return true;
}

bool Character::operator==(const Character& o) const {
    if (values_.size() != o.values_.size()) return false;
    for (std::size_t s = 0; s < values_.size(); ++s) {
        if (values_[s] != o.values_[s]) return false;
    }
    return true;
}

Bicharacter::Bicharacter(GroupData group, int conductor, std::vector<std::vector<std::int64_t>> exponents)
    : group_(std::move(group)), declared_(conductor), declared_exps_(std::move(exponents)) {
    const auto n = static_cast<std::size_t>(group_.rank());
    if (conductor < 1) throw InputError("braiding.conductor: must be >= 1");
    if (declared_exps_.size() != n) throw InputError("braiding.exponents: expected " + std::to_string(n) + " rows");
    for (const auto& row : declared_exps_) {
        if (row.size() != n) throw InputError("braiding.exponents: expected " + std::to_string(n) + " columns per row");
    }
    conductor_ = static_cast<int>(lcm64(conductor, group_.exponent()));
    const std::int64_t scale = conductor_ / conductor;
    exps_.assign(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) exps_[i][j] = mod_floor(declared_exps_[i][j] * scale, conductor_);
    }
    // r(g_i, g_j) = q_ji must be killed by the orders of both slots.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RootOfUnity qji(exps_[j][i], conductor_);
            for (std::size_t s : {i, j}) {
                if (!qji.pow(group_.orders()[s]).is_one()) {
                    std::ostringstream os;
                    os << "braiding.exponents: q_" << j + 1 << i + 1 << "^m_" << s + 1
                       << " != 1, so r is not a bicharacter of G";
                    throw InputError(os.str());
                }
            }
        }
    }
}

std::int64_t Bicharacter::r_exponent(const LatticeVec& g, const LatticeVec& h) const {
    // r(g, h) = prod_{s,t} q_ts^{g_s h_t}
    std::int64_t e = 0;
    const auto n = exps_.size();
    for (std::size_t s = 0; s < n; ++s) {
        if (g[s] == 0) continue;
        for (std::size_t t = 0; t < n; ++t) {
            if (h[t] == 0) continue;
            e = mod_floor(e + exps_[t][s] * g[s] % conductor_ * h[t], conductor_);
        }
    }
    return e;
}

RootOfUnity Bicharacter::r(const LatticeVec& g, const LatticeVec& h) const { return {r_exponent(g, h), conductor_}; }

RootOfUnity Bicharacter::b(const LatticeVec& g, const LatticeVec& h) const {
    return {r_exponent(g, h) + r_exponent(h, g), conductor_};
}

Character Bicharacter::gamma(const LatticeVec& i) const {
    std::vector<RootOfUnity> v;
    for (int s = 0; s < rank(); ++s) v.push_back(r(group_.unit(s), i));
    return Character(std::move(v));
}

Character Bicharacter::gamma_bar(const LatticeVec& i) const {
    std::vector<RootOfUnity> v;
    for (int s = 0; s < rank(); ++s) v.push_back(r(i, group_.unit(s)));
    return Character(std::move(v));
}

Character Bicharacter::k_elem(const LatticeVec& i) const { return gamma(i) * gamma_bar(i); }

std::vector<LatticeVec> Bicharacter::b_radical() const {
    std::vector<LatticeVec> out;
    std::vector<LatticeVec> gens;
    for (int s = 0; s < rank(); ++s) gens.push_back(group_.unit(s));
    for (std::int64_t idx = 0; idx < group_.size(); ++idx) {
        LatticeVec g = group_.element(idx);
        bool in = true;
        for (const auto& h : gens) {
            if (!b(g, h).is_one()) {
                in = false;
                break;
            }
        }
        if (in) out.push_back(std::move(g));
    }
    return out;
}

std::int64_t Bicharacter::b_radical_size_hnf() const {
    // Image of G -> (Z_N)^n, g -> b(g, -) has order N^n / [Z^n : L], L = rowspan(B) + N Z^n.
    const auto n = exps_.size();
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> rows;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<__int128> row(n);
        for (std::size_t t = 0; t < n; ++t) row[t] = mod_floor(exps_[s][t] + exps_[t][s], conductor_);
        rows.push_back(row);
    }
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<__int128> row(n, 0);
        row[s] = conductor_;
        rows.push_back(row);
    }
    __int128 index = 1;
    std::size_t top = 0;
    for (std::size_t c = 0; c < n; ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r) {
                if (rows[r][c] != 0 && (best == rows.size() || (rows[r][c] < 0 ? -rows[r][c] : rows[r][c]) <
                                                                    (rows[best][c] < 0 ? -rows[best][c] : rows[best][c]))) {
                    best = r;
                }
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                __int128 f = rows[r][c] / rows[top][c];
                for (std::size_t t = c; t < n; ++t) rows[r][t] -= f * rows[top][t];
                if (rows[r][c] != 0) clean = false;
            }
            if (clean) break;
        }
        __int128 p = rows[top][c];
        index *= (p < 0 ? -p : p);
        ++top;
    }
    __int128 nn = 1;
    for (std::size_t s = 0; s < n; ++s) nn *= conductor_;
    __int128 image = nn / index;
    return static_cast<std::int64_t>(static_cast<__int128>(group_.size()) / image);
}

bool Bicharacter::operator==(const Bicharacter& o) const {
    return group_.orders() == o.group_.orders() && conductor_ == o.conductor_ && exps_ == o.exps_;
}

std::vector<Character> characters(const GroupData& group, int conductor) {
    const int n = static_cast<int>(lcm64(conductor, group.exponent()));
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>(group.size()));
    for (std::int64_t idx = 0; idx < group.size(); ++idx) {
        LatticeVec t = group.element(idx);
        std::vector<RootOfUnity> v;
        for (std::size_t s = 0; s < t.size(); ++s) v.emplace_back(static_cast<std::int64_t>(t[s]) * (n / group.orders()[s]), n);
        out.emplace_back(std::move(v));
    }
    return out;
}

std::string format_vec(const LatticeVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t s = 0; s < v.size(); ++s) os << (s ? "," : "") << v[s];
    os << ")";
    return os.str();
}

}  // namespace nd
