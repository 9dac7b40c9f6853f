#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nd {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Non-negative representative of a mod m.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Per-conductor tables shared by every CycNumber of that conductor.
class CycField {
public:
    static const CycField& get(int conductor);

    int conductor() const { return n_; }
    int degree() const { return phi_; }
    const std::vector<std::int64_t>& modulus() const { return poly_; }
    /// Power-basis coordinates of zeta^k, 0 <= k < conductor.
    const std::vector<std::int64_t>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& units() const { return units_; }

private:
    explicit CycField(int n);

    int n_;
    int phi_;
    std::vector<std::int64_t> poly_;
    std::vector<std::vector<std::int64_t>> powers_;
    std::vector<int> units_;
};

/// Exact element of Q(zeta_N), stored in the reduced power basis 1, z, ..., z^(phi(N)-1).
/// Operands with different conductors are embedded into the lcm conductor.
class CycNumber {
public:
    CycNumber() : conductor_(1), coeffs_(1) {}
    CycNumber(long value) : conductor_(1), coeffs_{Rational(value)} {}  // NOLINT implicit
    CycNumber(const Rational& value) : conductor_(1), coeffs_{value} {} // NOLINT implicit

    static CycNumber zero(int conductor);
    static CycNumber one(int conductor);
    static CycNumber root_of_unity(std::int64_t k, int conductor);
    /// Build from coordinates of an unreduced polynomial in zeta (indices taken mod N).
    static CycNumber from_powers(const std::vector<std::int64_t>& by_power, int conductor);
    static CycNumber from_coeffs(std::vector<Rational> reduced, int conductor);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<Rational> as_rational() const;

    /// Same value viewed in Q(zeta_M); M must be a multiple of the current conductor.
    CycNumber embed(int conductor) const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber& operator/=(const CycNumber& o) { return *this *= o.inv(); }

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inv(); }
    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    /// Throws DivisionByZero on zero.
    CycNumber inv() const;
    CycNumber pow(std::int64_t e) const;
    /// this * zeta_N^k for N = conductor().
    CycNumber times_root(std::int64_t k) const;
    /// Galois conjugate zeta -> zeta^k, k a unit mod N.
    CycNumber galois(int k) const;

    /// Smallest d >= 1 with x^d = 1, or nullopt when x is not a root of unity.
    std::optional<std::int64_t> multiplicative_order() const;
    /// k with x = zeta_N^k, if x is an N-th root of unity.
    std::optional<std::int64_t> root_exponent() const;

    std::string to_string() const;

private:
    CycNumber(int conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    int conductor_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNumber& x);

inline CycNumber root_of_unity(std::int64_t k, int conductor) { return CycNumber::root_of_unity(k, conductor); }

/// zeta_N^exp, kept symbolically. Cheap to multiply; used for every bicharacter value.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(std::int64_t exp, int conductor) : exp_(mod_floor(exp, conductor)), n_(conductor) {}

    std::int64_t exponent() const { return exp_; }
    int conductor() const { return n_; }
    bool is_one() const { return exp_ == 0; }
    std::int64_t order() const { return n_ / gcd64(exp_, n_); }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inv() const { return {-exp_, n_}; }
    RootOfUnity pow(std::int64_t e) const;
    bool operator==(const RootOfUnity& o) const;
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

    CycNumber value() const { return CycNumber::root_of_unity(exp_, n_); }

private:
    std::int64_t exp_ = 0;
    int n_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RootOfUnity& z);

}  // namespace nd
