#include "nd/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nd {

Matrix zero_matrix(std::size_t rows, std::size_t cols, int conductor) {
    return Matrix(rows, std::vector<CycNumber>(cols, CycNumber::zero(conductor)));
}

Matrix identity_matrix(std::size_t n, int conductor) {
    Matrix m = zero_matrix(n, n, conductor);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = CycNumber::one(conductor);
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    Matrix out(a.size(), std::vector<CycNumber>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

std::size_t rank(Matrix m) {
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        CycNumber inv = m[r][c].inv();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            CycNumber f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) {
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
            }
        }
        ++r;
    }
    return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Matrix{};
    const int cond = m[0][0].conductor();
    Matrix a = m;
    Matrix inv = identity_matrix(n, cond);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        CycNumber p = a[c][c].inv();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a[c][j].is_zero()) a[c][j] *= p;
            if (!inv[c][j].is_zero()) inv[c][j] *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            CycNumber f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
                if (!inv[c][j].is_zero()) inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

void normalize(SparseRow& row) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow out;
    out.reserve(row.size());
    for (auto& e : row) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
        } else {
            out.push_back(std::move(e));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }), out.end());
    row = std::move(out);
}

namespace {

// a - f * b over sorted sparse rows
SparseRow axpy(const SparseRow& a, const CycNumber& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(f * b[j].second));
            ++j;
        } else {
            CycNumber v = a[i].second - f * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::optional<std::vector<CycNumber>> SparseEchelon::insert(SparseRow v) {
    normalize(v);
    const std::size_t k = rows_.size();
    std::vector<CycNumber> combo(k + 1, CycNumber::zero(conductor_));
    combo[k] = CycNumber::one(conductor_);
    std::unordered_map<std::uint64_t, std::size_t> pivots;
    pivots.reserve(k);
    for (std::size_t r = 0; r < k; ++r) pivots.emplace(rows_[r].entries.front().first, r);
    while (!v.empty()) {
        auto it = pivots.find(v.front().first);
        if (it == pivots.end()) break;
        const Row& row = rows_[it->second];
        CycNumber f = v.front().second;
        v = axpy(v, f, row.entries);
        for (std::size_t j = 0; j < row.combo.size(); ++j) {
            if (!row.combo[j].is_zero()) combo[j] -= f * row.combo[j];
        }
    }
    if (v.empty()) {
        // 0 = input_new + sum_{j<k} combo_j input_j
        std::vector<CycNumber> out(k);
        for (std::size_t j = 0; j < k; ++j) out[j] = -combo[j];
        return out;
    }
    CycNumber lead_inv = v.front().second.inv();
    for (auto& e : v) e.second *= lead_inv;
    for (auto& c : combo) c *= lead_inv;
    for (auto& r : rows_) r.combo.push_back(CycNumber::zero(conductor_));
    rows_.push_back(Row{std::move(v), std::move(combo)});
    return std::nullopt;
}

}  // namespace nd
