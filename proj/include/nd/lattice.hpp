#pragma once

#include "nd/cyclo.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nd {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using LatticeVec = std::vector<int>;

/// Z_{m1} x ... x Z_{mn}. Elements are indexed lexicographically, first component most significant.
class GroupData {
public:
    GroupData() = default;
    explicit GroupData(std::vector<int> orders);

    int rank() const { return static_cast<int>(orders_.size()); }
    const std::vector<int>& orders() const { return orders_; }
    std::int64_t size() const { return size_; }
    /// lcm of all m_i
    int exponent() const { return exponent_; }

    LatticeVec zero() const { return LatticeVec(orders_.size(), 0); }
    LatticeVec unit(int i) const;
    LatticeVec reduce(LatticeVec v) const;
    LatticeVec add(const LatticeVec& a, const LatticeVec& b) const;
    LatticeVec sub(const LatticeVec& a, const LatticeVec& b) const;
    LatticeVec neg(const LatticeVec& a) const;
    LatticeVec scale(const LatticeVec& a, std::int64_t k) const;
    bool is_zero(const LatticeVec& a) const;

    std::int64_t index(const LatticeVec& v) const;
    LatticeVec element(std::int64_t idx) const;
    /// idx(a + b) without materializing vectors
    std::int64_t add_index(std::int64_t a, std::int64_t b) const;
    std::int64_t neg_index(std::int64_t a) const;

private:
    std::vector<int> orders_;
    std::vector<std::int64_t> strides_;
    std::int64_t size_ = 1;
    int exponent_ = 1;
};

/// A function G -> roots of unity, stored by its values on the generators g_1..g_n.
class Character {
public:
    Character() = default;
    explicit Character(std::vector<RootOfUnity> values) : values_(std::move(values)) {}

    const std::vector<RootOfUnity>& values() const { return values_; }
    RootOfUnity eval(const LatticeVec& g) const;
    Character operator*(const Character& o) const;
    Character inv() const;
    Character pow(std::int64_t e) const;
    bool is_trivial() const;
    bool operator==(const Character& o) const;
    bool operator!=(const Character& o) const { return !(*this == o); }

private:
    std::vector<RootOfUnity> values_;
};

/// Braiding matrix q_ij = zeta_N^{e_ij} over G, with r(g_i, g_j) = q_ji and b(g, h) = r(g, h) r(h, g).
class Bicharacter {
public:
    Bicharacter() = default;
    /// Throws InputError unless every q_ij is killed by both m_i and m_j.
    Bicharacter(GroupData group, int conductor, std::vector<std::vector<std::int64_t>> exponents);

    const GroupData& group() const { return group_; }
    int rank() const { return group_.rank(); }
    /// Session conductor: lcm of the declared conductor and the group exponent.
    int conductor() const { return conductor_; }
    int declared_conductor() const { return declared_; }
    const std::vector<std::vector<std::int64_t>>& declared_exponents() const { return declared_exps_; }

    RootOfUnity q(int i, int j) const { return {exps_[idx(i)][idx(j)], conductor_}; }
    RootOfUnity r(const LatticeVec& g, const LatticeVec& h) const;
    RootOfUnity b(const LatticeVec& g, const LatticeVec& h) const;
    std::int64_t r_exponent(const LatticeVec& g, const LatticeVec& h) const;

    Character gamma(const LatticeVec& i) const;
    Character gamma_bar(const LatticeVec& i) const;
    Character k_elem(const LatticeVec& i) const;

    /// Radical of b by scanning all of G.
    std::vector<LatticeVec> b_radical() const;
    bool is_nondegenerate() const { return b_radical().size() == 1; }
    /// |radical of b| from the Hermite form of the exponent lattice, independent of the scan.
    std::int64_t b_radical_size_hnf() const;

    bool operator==(const Bicharacter& o) const;

private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    GroupData group_;
    int conductor_ = 1;
    int declared_ = 1;
    std::vector<std::vector<std::int64_t>> exps_;
    std::vector<std::vector<std::int64_t>> declared_exps_;
};

/// All characters of G, lexicographic in the exponent vector t with chi_t(g_s) = zeta_{m_s}^{t_s}.
std::vector<Character> characters(const GroupData& group, int conductor);

std::string format_vec(const LatticeVec& v);

}  // namespace nd
