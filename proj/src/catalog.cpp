#include "nd/catalog.hpp"

#include <algorithm>
#include <set>

namespace nd {

namespace {

// Bareiss elimination; exact for small integer matrices
std::int64_t int_det(std::vector<std::vector<std::int64_t>> m) {
    const std::size_t n = m.size();
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

std::vector<int> root_orders(const Bicharacter& bc, const std::vector<LatticeVec>& roots) {
    std::vector<int> out;
    for (const auto& beta : roots) {
        // q_beta,beta = r(beta, beta) since r(g_s, g_t) = q_ts
        out.push_back(static_cast<int>(bc.r(bc.group().reduce(beta), bc.group().reduce(beta)).order()));
    }
    return out;
}

int checked_positive(int v, const char* what) {
    if (v < 1) throw InputError(std::string(what) + " must be >= 1");
    return v;
}

}  // namespace

Preset preset_taft(int n, int k) {
    checked_positive(n, "n");
    if (n < 2) throw InputError("taft: n must be >= 2");
    if (gcd64(k, n) != 1) throw InputError("taft: q^2 must have order n, so k must be coprime to n");
    Bicharacter bc(GroupData({n}), 2 * n, {{2 * static_cast<std::int64_t>(k)}});
    Preset p{"taft", bc, std::nullopt, {}};
    RootDatum rd{{{1}}, {}};
    rd.orders = root_orders(bc, rd.positive);
    p.roots = rd;
    p.expected.dims = std::vector<std::int64_t>(static_cast<std::size_t>(n), 1);
    p.expected.total_dim = n;
    p.expected.i_ell = LatticeVec{n - 1};
    p.expected.kr_pairs = (n % 2 == 1) ? 1 : 0;
    p.expected.spherical = false;
    p.expected.modular = (n % 2 == 1);
    return p;
}

Preset preset_uqsl2(int n, int k) {
    if (n < 3 || n % 2 == 0) throw InputError("uqsl2: n must be odd and >= 3");
    Preset p = preset_taft(n, k);
    p.name = "uqsl2";
    p.expected.modular = true;
    return p;
}

std::vector<LatticeVec> cartan_positive_roots(const std::vector<std::vector<int>>& a) {
    const std::size_t r = a.size();
    std::vector<LatticeVec> roots;
    std::set<LatticeVec> seen;
    for (std::size_t i = 0; i < r; ++i) {
        LatticeVec e(r, 0);
        e[i] = 1;
        roots.push_back(e);
        seen.insert(e);
    }
    for (std::size_t pos = 0; pos < roots.size(); ++pos) {
        const LatticeVec beta = roots[pos];
        for (std::size_t i = 0; i < r; ++i) {
            // p = length of the alpha_i string below beta
            int p = 0;
            LatticeVec down = beta;
            while (true) {
                down[i] -= 1;
                if (!seen.count(down)) break;
                ++p;
            }
            int pairing = 0;
            for (std::size_t j = 0; j < r; ++j) pairing += beta[j] * a[i][j];
            if (p - pairing > 0) {
                LatticeVec up = beta;
                up[i] += 1;
                if (seen.insert(up).second) roots.push_back(up);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const LatticeVec& x, const LatticeVec& y) {
        int hx = 0, hy = 0;
        for (int v : x) hx += v;
        for (int v : y) hy += v;
        if (hx != hy) return hx < hy;
        return x > y;
    });
    return roots;
}

Preset preset_cartan(const std::vector<std::vector<int>>& a, const std::vector<int>& d, int l, int k) {
    const std::size_t r = a.size();
    if (r == 0 || d.size() != r) throw InputError("cartan: matrix and symmetrizer sizes differ");
    if (l < 3 || l % 2 == 0) throw InputError("cartan: l must be odd and >= 3");
    if (gcd64(k, l) != 1) throw InputError("cartan: q must be a primitive l-th root, k coprime to l");
    std::vector<std::vector<std::int64_t>> e(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i].size() != r) throw InputError("cartan: matrix must be square");
        if (a[i][i] != 2) throw InputError("cartan: diagonal entries must be 2");
        for (std::size_t j = 0; j < r; ++j) {
            if (d[i] * a[i][j] != d[j] * a[j][i]) throw InputError("cartan: d_i a_ij is not symmetric");
            if (i != j && a[i][j] > 0) throw InputError("cartan: off-diagonal entries must be <= 0");
            if (d[i] == 3 && l % 3 == 0) throw InputError("cartan: l must be coprime to 3 when some d_i = 3");
            e[i][j] = static_cast<std::int64_t>(k) * d[i] * a[i][j];
        }
    }
    Bicharacter bc(GroupData(std::vector<int>(r, l)), l, e);
    Preset p{"cartan", bc, std::nullopt, {}};
    RootDatum rd{cartan_positive_roots(a), {}};
    rd.orders = root_orders(bc, rd.positive);
    std::int64_t total = 1;
    LatticeVec top(r, 0);
    for (std::size_t b = 0; b < rd.positive.size(); ++b) {
        total *= rd.orders[b];
        for (std::size_t s = 0; s < r; ++s) top[s] += (rd.orders[b] - 1) * rd.positive[b][s];
    }
    p.roots = rd;
    p.expected.total_dim = total;
    p.expected.i_ell = bc.group().reduce(top);
    std::vector<std::vector<std::int64_t>> da(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) da[i][j] = d[i] * a[i][j];
    if (gcd64(int_det(da), l) == 1) p.expected.modular = true;
    return p;
}

Preset preset_cartan(const std::string& type, int l, int k) {
    if (type.size() < 2) throw InputError("cartan: unknown type '" + type + "'");
    const char family = type[0];
    int r = 0;
    try {
        r = std::stoi(type.substr(1));
    } catch (const std::exception&) {
        throw InputError("cartan: unknown type '" + type + "'");
    }
    if (r < 1) throw InputError("cartan: rank must be >= 1");
    std::vector<std::vector<int>> a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    std::vector<int> d(static_cast<std::size_t>(r), 1);
    auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    for (int i = 0; i < r; ++i) at(i, i) = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) at(i, i + 1) = at(i + 1, i) = -1;
    };
    switch (family) {
    case 'A':
        chain(r);
        break;
    case 'B':
        if (r < 2) throw InputError("cartan: B needs rank >= 2");
        chain(r);
        at(r - 1, r - 2) = -2;
        for (int i = 0; i + 1 < r; ++i) d[static_cast<std::size_t>(i)] = 2;
        break;
    case 'C':
        if (r < 2) throw InputError("cartan: C needs rank >= 2");
        chain(r);
        at(r - 2, r - 1) = -2;
        d[static_cast<std::size_t>(r - 1)] = 2;
        break;
    case 'D':
        if (r < 4) throw InputError("cartan: D needs rank >= 4");
        chain(r - 1);
        at(r - 3, r - 1) = at(r - 1, r - 3) = -1;
        break;
    case 'G':
        if (r != 2) throw InputError("cartan: G has rank 2");
        at(0, 1) = -1;
        at(1, 0) = -3;
        d = {3, 1};
        break;
    default:
        throw InputError("cartan: unknown type '" + type + "'");
    }
    Preset p = preset_cartan(a, d, l, k);
    p.name = "cartan-" + type;
    return p;
}

Preset preset_super_a11(int n, int k) {
    if (n < 1 || n % 2 == 0) throw InputError("super-a11: n must be odd and >= 1");
    if (gcd64(k, 2 * n) != 1) throw InputError("super-a11: q must be a primitive 2n-th root, k coprime to 2n");
    const std::int64_t N = 2 * n;
    Bicharacter bc(GroupData({2 * n, 2 * n}), 2 * n, {{n, 0}, {mod_floor(k, N), n}});
    Preset p{"super-a11", bc, std::nullopt, {}};
    RootDatum rd{{{1, 0}, {0, 1}, {1, 1}}, {}};
    rd.orders = root_orders(bc, rd.positive);
    p.roots = rd;
    p.expected.total_dim = 8 * static_cast<std::int64_t>(n);
    p.expected.i_ell = LatticeVec{0, 0};
    p.expected.modular = true;
    p.expected.spherical = true;
    return p;
}

std::vector<std::string> preset_names() { return {"taft", "uqsl2", "cartan", "super-a11"}; }

}  // namespace nd
