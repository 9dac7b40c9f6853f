#pragma once

#include "nd/double.hpp"

#include <optional>

namespace nd {

/// alpha_H is evaluation at alpha_point on delta's and eps on x's; g_H = gamma_{i_ell}.
struct DistinguishedData {
    LatticeVec i_ell;
    LatticeVec alpha_point;
    Character g_H;
    /// left integral delta_0 x_ell = x_ell delta_{-i_ell}, as an index in H
    std::int64_t left_integral = 0;
    /// right integral of H*: lambda(x^A delta_m) = [A = top]
    Elem right_integral;
};

/// Closed forms, checked against the defining characterizations; throws std::logic_error on mismatch.
DistinguishedData distinguished_data(const SmashAlgebra& H, std::int64_t max_basis_checks = 1024);
/// h Lambda = eps(h) Lambda, Lambda h = alpha(h) Lambda on generators; (lambda (x) id) Delta = lambda 1 and
/// (id (x) lambda) Delta = lambda g_H on basis elements (all of them when dim H <= max_basis_checks).
HopfReport check_distinguished_data(const SmashAlgebra& H, const DistinguishedData& d, std::int64_t max_basis_checks = 1024);

/// zeta is evaluation at zeta_point (eps on x's); a is a character of G viewed as a grouplike of K*.
struct RibbonPair {
    LatticeVec zeta_point;
    Character a;
    /// exponent vector t with a(g_s) = zeta_{m_s}^{t_s}
    LatticeVec a_exponents;
};

/// sum_m chi(g_m) delta_m in H
Elem grouplike(const SmashAlgebra& H, const Character& chi);
/// values of the algebra character zeta_p on the basis of H
Elem point_functional(const SmashAlgebra& H, const LatticeVec& p);

/// S^2(h) = zeta^{-1}(h_1) a h_2 a^{-1} zeta(h_3) on the generators of H
bool satisfies_s2(const SmashAlgebra& H, const LatticeVec& zeta_point, const Character& a);

/// Every (zeta, a) with zeta^2 = alpha_H, a^2 = g_H and the S^2 conjugation formula; lexicographic order.
std::vector<RibbonPair> enumerate_kr_pairs(const SmashAlgebra& H, const DistinguishedData& d);

struct SphericalWitness {
    Character a;
    LatticeVec a_exponents;
};

/// {a : a^2 = g_H, S^2(h) = a h a^{-1}}
std::vector<SphericalWitness> spiv(const SmashAlgebra& H, const DistinguishedData& d);
bool spherical_verdict(const DistinguishedData& d, const std::vector<SphericalWitness>& spiv);

struct RemarkWitness {
    LatticeVec b;
    LatticeVec c;
    /// gamma_b gamma_bar_c
    Character a;
};

/// (b, c) in G^2 with i_ell = 0, a = gamma_b gamma_bar_c, a^2 = 1 and r(g_i, g_b) r(g_c, g_i) = q_ii^{-1} for all i.
std::vector<RemarkWitness> spherical_check_remark(const Bicharacter& bc, const LatticeVec& i_ell);

enum class Verdict { Yes, No, Undetermined };
std::string to_string(Verdict v);

struct ModularityReport {
    bool finite = false;
    bool b_nondegenerate = false;
    /// (j, a) with 2j = i_ell, b(g_i, g_a)^2 = r(g_i, g_{i_ell}), r(g_j, g_i) b(g_i, g_a) = q_ii^{-1}:
    /// exactly what makes zeta = [. = -j] and a = k_a a KR pair
    std::vector<std::pair<LatticeVec, LatticeVec>> witnesses;
    /// the subset that also has 2a = i_ell
    std::vector<std::pair<LatticeVec, LatticeVec>> strict_witnesses;
    bool radford_consistent = false;
    Verdict verdict = Verdict::Undetermined;
};

ModularityReport modularity_check(const NicholsAlgebra& B);
/// r(g_{i_ell}, g_i) r(g_i, g_{i_ell}) = q_ii^{-2} for all i
bool radford_consistency(const Bicharacter& bc, const LatticeVec& i_ell);
/// S^4(h) = alpha^{-1}(h_1) g_H h_2 g_H^{-1} alpha(h_3) on the generators of H
bool radford_s4_check(const SmashAlgebra& H, const DistinguishedData& d);

/// u = sum S(R2) R1
Elem drinfeld_element(const FiniteHopfAlgebra& D, const Elem2& R);
/// u (zeta^{-1} (x) a^{-1}) in D(H) for a grouplike zeta of H* (dual coordinates) and grouplike a of H
Elem ribbon_element(const GenericDouble& DD, const Elem& zeta_inv, const Elem& a_inv);
Elem ribbon_element(const GenericDouble& DD, const SmashAlgebra& H, const RibbonPair& pair);

/// central, invertible, eps(v) = 1, S(v) = v, Delta(v) = (R21 R)^{-1} (v (x) v); centrality on every basis element
HopfReport verify_ribbon(const FiniteHopfAlgebra& D, const Elem2& R, const Elem& v);

/// Left multiplication matrix inverse applied to 1; nullopt when not invertible.
std::optional<Elem> inverse_element(const FiniteHopfAlgebra& D, const Elem& v);

}  // namespace nd
