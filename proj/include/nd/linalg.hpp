#pragma once

#include "nd/cyclo.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nd {

using Matrix = std::vector<std::vector<CycNumber>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols, int conductor);
Matrix identity_matrix(std::size_t n, int conductor);
Matrix matmul(const Matrix& a, const Matrix& b);
std::size_t rank(Matrix m);
/// nullopt when singular
std::optional<Matrix> inverse(const Matrix& m);

using SparseRow = std::vector<std::pair<std::uint64_t, CycNumber>>;

/// Incremental row echelon form over sparse rows keyed by column id.
/// Every accepted row is stored together with its expression in terms of the accepted inputs,
/// so a dependent input comes back as a combination of earlier accepted inputs.
class SparseEchelon {
public:
    explicit SparseEchelon(int conductor) : conductor_(conductor) {}

    /// Returns nullopt if independent (and stores it), else coefficients c_k with v = sum c_k input_k.
    std::optional<std::vector<CycNumber>> insert(SparseRow v);
    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        SparseRow entries;  // sorted by column, leading entry normalized to 1
        std::vector<CycNumber> combo;
    };
    int conductor_;
    std::vector<Row> rows_;
};

/// Sort by key and merge duplicates, dropping zeros.
void normalize(SparseRow& row);

}  // namespace nd
