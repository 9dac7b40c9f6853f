#pragma once

#include "nd/catalog.hpp"
#include "nd/nichols.hpp"

#include <string>
#include <vector>

namespace nd {

/// Parsed input file: braiding data plus run options.
struct InputSpec {
    std::string name;
    Bicharacter bichar;
    std::optional<RootDatum> roots;
    int cutoff = NicholsAlgebra::kDefaultCutoff;
    /// empty means every check
    std::vector<std::string> checks;
    /// dimension bound for exhaustive axiom checks
    std::int64_t max_dim = 512;
    bool exhaustive = false;

    bool operator==(const InputSpec& o) const;
};

/// Check names accepted under `checks`.
const std::vector<std::string>& known_checks();

/// Keys: group.orders, braiding.conductor, braiding.exponents, roots.positive, roots.orders, checks,
/// and optionally name, options.cutoff, options.max_dim, options.exhaustive. Throws InputError naming the key.
InputSpec parse_config(const std::string& text);
InputSpec load_config(const std::string& path);
std::string write_config(const InputSpec& spec);

InputSpec spec_from_preset(const Preset& p);
/// "taft", "uqsl2", "super-a11" take n; "cartan-<type>" (e.g. cartan-A2) takes l.
Preset preset_by_name(const std::string& name, int n, int l);

}  // namespace nd
