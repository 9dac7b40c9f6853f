#include "nd/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nd {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {0};
    Poly q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::map<int, Poly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

CycField::CycField(int n) : n_(n), phi_(euler_phi(n)), poly_(cyclotomic_polynomial(n)) {
    powers_.resize(static_cast<std::size_t>(n));
    const auto phi = static_cast<std::size_t>(phi_);
    for (std::size_t k = 0; k < powers_.size(); ++k) {
        if (k < phi) {
            powers_[k].assign(phi, 0);
            powers_[k][k] = 1;
            continue;
        }
        // z^k = z * z^(k-1), then use z^phi = -sum poly_i z^i.
        const auto& prev = powers_[k - 1];
        std::vector<std::int64_t> cur(phi, 0);
        std::int64_t top = prev[phi - 1];
        for (std::size_t i = phi - 1; i > 0; --i) cur[i] = prev[i - 1];
        for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * poly_[i];
        powers_[k] = std::move(cur);
    }
    for (int k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) units_.push_back(k % n);
    }
}

const CycField& CycField::get(int conductor) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    static std::map<int, std::unique_ptr<CycField>> fields;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fields.find(conductor);
    if (it == fields.end()) {
        it = fields.emplace(conductor, std::unique_ptr<CycField>(new CycField(conductor))).first;
    }
    return *it->second;
}

namespace {

std::vector<Rational> reduce_powers(const std::vector<Rational>& by_power, const CycField& f) {
    const auto phi = static_cast<std::size_t>(f.degree());
    std::vector<Rational> out(phi);
    for (std::size_t k = 0; k < by_power.size(); ++k) {
        const Rational& c = by_power[k];
        if (sgn(c) == 0) continue;
        if (k < phi) {
            out[k] += c;
            continue;
        }
        const auto& p = f.power(static_cast<int>(k));
        for (std::size_t i = 0; i < phi; ++i) {
            if (p[i] != 0) out[i] += c * Rational(static_cast<long>(p[i]));
        }
    }
    return out;
}

}  // namespace

CycNumber CycNumber::zero(int conductor) {
    return CycNumber(conductor, std::vector<Rational>(static_cast<std::size_t>(CycField::get(conductor).degree())));
}

CycNumber CycNumber::one(int conductor) {
    CycNumber r = zero(conductor);
    r.coeffs_[0] = 1;
    return r;
}

CycNumber CycNumber::root_of_unity(std::int64_t k, int conductor) {
    const CycField& f = CycField::get(conductor);
    const auto& p = f.power(static_cast<int>(mod_floor(k, conductor)));
    std::vector<Rational> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rational(static_cast<long>(p[i]));
    return CycNumber(conductor, std::move(c));
}

CycNumber CycNumber::from_powers(const std::vector<std::int64_t>& by_power, int conductor) {
    const CycField& f = CycField::get(conductor);
    std::vector<Rational> folded(static_cast<std::size_t>(conductor));
    for (std::size_t k = 0; k < by_power.size(); ++k) {
        folded[k % static_cast<std::size_t>(conductor)] += Rational(static_cast<long>(by_power[k]));
    }
    return CycNumber(conductor, reduce_powers(folded, f));
}

CycNumber CycNumber::from_coeffs(std::vector<Rational> reduced, int conductor) {
    const CycField& f = CycField::get(conductor);
    if (reduced.size() != static_cast<std::size_t>(f.degree())) {
        throw std::invalid_argument("from_coeffs: expected phi(N) coefficients");
    }
    return CycNumber(conductor, std::move(reduced));
}

bool CycNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool CycNumber::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return false;
    }
    return true;
}

std::optional<Rational> CycNumber::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return std::nullopt;
    }
    return coeffs_[0];
}

CycNumber CycNumber::embed(int conductor) const {
    if (conductor == conductor_) return *this;
    if (conductor % conductor_ != 0) throw std::invalid_argument("embed: target conductor is not a multiple");
    const CycField& f = CycField::get(conductor);
    const std::size_t step = static_cast<std::size_t>(conductor / conductor_);
    std::vector<Rational> by_power(static_cast<std::size_t>(conductor));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) by_power[i * step] = coeffs_[i];
    return CycNumber(conductor, reduce_powers(by_power, f));
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    if (o.conductor_ != conductor_) {
        int m = static_cast<int>(lcm64(conductor_, o.conductor_));
        *this = embed(m);
        return *this += o.embed(m);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) {
        int m = static_cast<int>(lcm64(a.conductor_, b.conductor_));
        return a.embed(m) * b.embed(m);
    }
    const int n = a.conductor_;
    const CycField& f = CycField::get(n);
    std::vector<Rational> conv(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            conv[(i + j) % static_cast<std::size_t>(n)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CycNumber(n, reduce_powers(conv, f));
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) {
        int m = static_cast<int>(lcm64(a.conductor_, b.conductor_));
        return a.embed(m) == b.embed(m);
    }
    return a.coeffs_ == b.coeffs_;
}

CycNumber CycNumber::galois(int k) const {
    if (std::gcd(k, conductor_) != 1) throw std::invalid_argument("galois: exponent is not a unit");
    const CycField& f = CycField::get(conductor_);
    std::vector<Rational> by_power(static_cast<std::size_t>(conductor_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        by_power[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) * k, conductor_))] += coeffs_[i];
    }
    return CycNumber(conductor_, reduce_powers(by_power, f));
}

CycNumber CycNumber::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (auto r = as_rational()) {
        CycNumber out = zero(conductor_);
        out.coeffs_[0] = 1 / *r;
        return out;
    }
    // x * prod_{k != 1} sigma_k(x) is the field norm, a nonzero rational.
    CycNumber conj = one(conductor_);
    for (int k : CycField::get(conductor_).units()) {
        if (k == 1 % conductor_) continue;
        conj *= galois(k);
    }
    CycNumber norm = *this * conj;
    auto r = norm.as_rational();
    if (!r) throw std::logic_error("inv: norm is not rational");
    for (auto& c : conj.coeffs_) c /= *r;
    return conj;
}

CycNumber CycNumber::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    CycNumber result = one(conductor_);
    CycNumber base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

CycNumber CycNumber::times_root(std::int64_t k) const { return *this * root_of_unity(k, conductor_); }

std::optional<std::int64_t> CycNumber::multiplicative_order() const {
    if (is_zero()) return std::nullopt;
    const std::int64_t m = lcm64(2, conductor_);
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d == 0 && pow(d).is_one()) return d;
    }
    return std::nullopt;
}

std::optional<std::int64_t> CycNumber::root_exponent() const {
    auto ord = multiplicative_order();
    if (!ord || conductor_ % *ord != 0) return std::nullopt;
    const std::int64_t step = conductor_ / *ord;
    for (std::int64_t k = 0; k < conductor_; k += step) {
        if (root_of_unity(k, conductor_) == *this) return k;
    }
    return std::nullopt;
}

std::string CycNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rational a = abs(c);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << conductor_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.to_string(); }

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    if (n_ == o.n_) return {exp_ + o.exp_, n_};
    const std::int64_t m = lcm64(n_, o.n_);
    return {exp_ * (m / n_) + o.exp_ * (m / o.n_), static_cast<int>(m)};
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
    // exponent stays < n, so the product fits comfortably
    return {mod_floor(exp_ * mod_floor(e, n_), n_), n_};
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
    if (n_ == o.n_) return exp_ == o.exp_;
    return exp_ * o.n_ == o.exp_ * n_;
}

std::ostream& operator<<(std::ostream& os, const RootOfUnity& z) {
    return os << "z" << z.conductor() << "^" << z.exponent();
}

}  // namespace nd
