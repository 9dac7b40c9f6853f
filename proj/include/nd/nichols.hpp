#pragma once

#include "nd/catalog.hpp"
#include "nd/linalg.hpp"
#include "nd/lattice.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace nd {

class CutoffExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Word = std::vector<int>;
/// Sparse vector over basis indices, sorted, no zero entries.
using SVec = std::vector<std::pair<int, CycNumber>>;

SVec svec_add(const SVec& a, const SVec& b);
SVec svec_scale(const SVec& a, const CycNumber& c);
void svec_axpy(SVec& acc, const CycNumber& c, const SVec& x);

/// Element of Z[C_N]: multiplicities of zeta^0 .. zeta^(N-1). Used for symmetrizer entries.
struct GroupRingElem {
    std::vector<std::int64_t> mult;
    bool is_zero() const;
    CycNumber value(int conductor) const;
};

/// Nichols algebra of the diagonal braiding c(x_i (x) x_j) = q_ij x_j (x) x_i.
/// Basis: lexicographically earliest words whose symmetrizer images are independent.
class NicholsAlgebra {
public:
    static constexpr int kDefaultCutoff = 24;

    NicholsAlgebra() = default;
    /// Builds degrees 0..cutoff. finite() reports whether the top degree was found.
    static NicholsAlgebra build(const Bicharacter& bc, int cutoff = kDefaultCutoff);

    const Bicharacter& bichar() const { return bc_; }
    int rank() const { return bc_.rank(); }
    int conductor() const { return bc_.conductor(); }
    RootOfUnity q(int i, int j) const { return bc_.q(i, j); }

    bool finite() const { return finite_; }
    int cutoff() const { return cutoff_; }
    const std::vector<std::int64_t>& dims() const { return dims_; }
    std::int64_t total_dim() const { return static_cast<std::int64_t>(words_.size()); }
    /// top degree; requires finite()
    int ell() const;
    const LatticeVec& i_ell() const;
    int top_index() const;

    int size() const { return static_cast<int>(words_.size()); }
    const Word& word(int idx) const { return words_[static_cast<std::size_t>(idx)]; }
    int degree(int idx) const { return static_cast<int>(words_[static_cast<std::size_t>(idx)].size()); }
    const LatticeVec& gdeg(int idx) const { return gdeg_[static_cast<std::size_t>(idx)]; }
    std::int64_t gdeg_index(int idx) const { return gdeg_idx_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& multidegree(int idx) const { return multideg_[static_cast<std::size_t>(idx)]; }
    int degree_begin(int d) const { return offsets_[static_cast<std::size_t>(d)]; }
    int degree_end(int d) const { return offsets_[static_cast<std::size_t>(d) + 1]; }
    int max_degree() const { return static_cast<int>(offsets_.size()) - 2; }
    /// basis index of a section word, -1 if the word is not a section
    int find(const Word& w) const;

    /// basis element idx times x_letter
    const SVec& rmul(int idx, int letter) const;
    SVec right_multiply(const SVec& v, int letter) const;
    SVec project(const Word& w) const;
    /// product of basis elements
    const SVec& mul(int a, int b) const;
    SVec mul(const SVec& a, const SVec& b) const;

    /// Symmetrizer image of basis element idx, over words of its degree (packed keys).
    std::map<Word, CycNumber> symmetrizer_image(int idx) const;

    /// d^L_j(x_a) = sum_{t : a_t = j} (prod_{s<t} q_{a_s j}) x_{a without t}
    const SVec& left_derivation(int idx, int j) const;
    /// d^R_j(x_a) = sum_{t : a_t = j} (prod_{s>t} q_{j a_s}) x_{a without t}
    const SVec& right_derivation(int idx, int j) const;

    /// sum_beta (m_beta - 1) beta reproduces i_ell in G
    bool check_root_formula(const RootDatum& roots) const;

private:
    Bicharacter bc_;
    int cutoff_ = 0;
    bool finite_ = false;
    std::vector<std::int64_t> dims_;
    std::vector<Word> words_;
    std::vector<LatticeVec> gdeg_;
    std::vector<std::int64_t> gdeg_idx_;
    std::vector<std::vector<int>> multideg_;
    std::vector<int> offsets_;
    std::map<Word, int> index_;
    std::vector<std::vector<SVec>> rmul_;
    std::vector<std::map<Word, GroupRingElem>> sym_;
    LatticeVec i_ell_;

    mutable std::unordered_map<std::uint64_t, SVec> mul_cache_;
    mutable std::unordered_map<std::uint64_t, SVec> dl_cache_;
    mutable std::unordered_map<std::uint64_t, SVec> dr_cache_;
};

/// Braiding of the dual generators: p_ij = q_ji^{-1}.
Bicharacter dual_braiding(const Bicharacter& bc);

/// Full symmetrizer on the n^d word space by the factorized recursion S_d = T_d (S_{d-1} (x) id),
/// T_d = sum_k s_k s_{k+1} ... s_{d-1}. Rows and columns indexed lexicographically.
Matrix symmetrizer_matrix(const Bicharacter& bc, int d);

}  // namespace nd
