#pragma once

#include "nd/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nd {

struct RootDatum {
    std::vector<LatticeVec> positive;
    std::vector<int> orders;
};

struct ExpectedValues {
    std::optional<std::vector<std::int64_t>> dims;
    std::optional<std::int64_t> total_dim;
    std::optional<LatticeVec> i_ell;
    std::optional<std::size_t> kr_pairs;
    std::optional<bool> modular;
    std::optional<bool> spherical;
};

struct Preset {
    std::string name;
    Bicharacter bichar;
    std::optional<RootDatum> roots;
    ExpectedValues expected;
};

/// Rank one, G = Z_n, q = zeta_{2n}^k, q_11 = q^2.
Preset preset_taft(int n, int k = 1);
/// Same braiding as Taft; n must be odd and >= 3.
Preset preset_uqsl2(int n, int k = 1);
/// q_ij = q^{d_i a_ij} with q = zeta_l^k over (Z_l)^rank.
Preset preset_cartan(const std::vector<std::vector<int>>& cartan, const std::vector<int>& d, int l, int k = 1);
/// Named Cartan types "A2", "B2", "G2", "A3", ...
Preset preset_cartan(const std::string& type, int l, int k = 1);
/// G = Z_{2n} x Z_{2n}, q_11 = q_22 = -1, q_12 = 1, q_21 = q with q = zeta_{2n}^k.
Preset preset_super_a11(int n, int k = 1);

/// Positive roots of a Cartan type in simple-root coordinates.
std::vector<LatticeVec> cartan_positive_roots(const std::vector<std::vector<int>>& cartan);

std::vector<std::string> preset_names();

}  // namespace nd
