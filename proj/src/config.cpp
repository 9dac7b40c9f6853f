#include "nd/config.hpp"

#include <toml++/toml.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nd {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) { throw InputError(key + ": " + what); }

std::int64_t as_int(const toml::node& n, const std::string& key) {
    auto v = n.value<std::int64_t>();
    if (!v || !n.is_integer()) fail(key, "expected an integer");
    return *v;
}

std::vector<std::int64_t> int_list(const toml::node& n, const std::string& key) {
    const auto* arr = n.as_array();
    if (arr == nullptr) fail(key, "expected an integer list");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < arr->size(); ++i) out.push_back(as_int(*arr->get(i), key + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::vector<std::int64_t>> int_matrix(const toml::node& n, const std::string& key) {
    const auto* arr = n.as_array();
    if (arr == nullptr) fail(key, "expected a list of integer lists");
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < arr->size(); ++i) out.push_back(int_list(*arr->get(i), key + "[" + std::to_string(i) + "]"));
    return out;
}

int small_int(std::int64_t v, const std::string& key) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(key, "out of range");
    return static_cast<int>(v);
}

const toml::node& require(const toml::table& t, std::string_view path) {
    auto view = t.at_path(path);
    if (!view) fail(std::string(path), "missing");
    return *view.node();
}

toml::array to_array(const std::vector<std::int64_t>& v) {
    toml::array a;
    for (auto x : v) a.push_back(x);
    return a;
}

toml::array to_array(const LatticeVec& v) {
    toml::array a;
    for (auto x : v) a.push_back(static_cast<std::int64_t>(x));
    return a;
}

}  // namespace

bool InputSpec::operator==(const InputSpec& o) const {
    auto same_roots = [](const std::optional<RootDatum>& a, const std::optional<RootDatum>& b) {
        if (a.has_value() != b.has_value()) return false;
        return !a || (a->positive == b->positive && a->orders == b->orders);
    };
    return name == o.name && bichar == o.bichar && same_roots(roots, o.roots) && cutoff == o.cutoff &&
           checks == o.checks && max_dim == o.max_dim && exhaustive == o.exhaustive;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{"dims",     "axioms",     "quasitriangular", "drinfeld-rank", "distinguished",
                                                "kr-pairs", "spherical",  "modularity",      "radford",       "ribbon"};
    return names;
}

InputSpec parse_config(const std::string& text) {
    toml::table t;
    try {
        t = toml::parse(text);
    } catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << "line " << e.source().begin.line << ": " << e.description();
        fail("config", os.str());
    }
    InputSpec spec;
    if (auto n = t["name"]) {
        auto s = n.value<std::string>();
        if (!s) fail("name", "expected a string");
        spec.name = *s;
    }

    std::vector<int> orders;
    for (auto v : int_list(require(t, "group.orders"), "group.orders")) orders.push_back(small_int(v, "group.orders"));
    const int conductor = small_int(as_int(require(t, "braiding.conductor"), "braiding.conductor"), "braiding.conductor");
    auto exps = int_matrix(require(t, "braiding.exponents"), "braiding.exponents");
    spec.bichar = Bicharacter(GroupData(orders), conductor, exps);

    const bool has_pos = static_cast<bool>(t.at_path("roots.positive"));
    const bool has_ord = static_cast<bool>(t.at_path("roots.orders"));
    if (has_pos != has_ord) fail(has_pos ? "roots.orders" : "roots.positive", "roots.positive and roots.orders go together");
    if (has_pos) {
        RootDatum rd;
        const std::size_t rank = orders.size();
        for (const auto& row : int_matrix(require(t, "roots.positive"), "roots.positive")) {
            if (row.size() != rank) fail("roots.positive", "every root needs " + std::to_string(rank) + " coordinates");
            LatticeVec v;
            for (auto x : row) v.push_back(small_int(x, "roots.positive"));
            rd.positive.push_back(v);
        }
        for (auto x : int_list(require(t, "roots.orders"), "roots.orders")) {
            if (x < 1) fail("roots.orders", "every order must be >= 1");
            rd.orders.push_back(small_int(x, "roots.orders"));
        }
        if (rd.orders.size() != rd.positive.size()) fail("roots.orders", "one order per positive root");
        spec.roots = rd;
    }

    if (auto c = t["checks"]) {
        const auto* arr = c.as_array();
        if (arr == nullptr) fail("checks", "expected a list of names");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            auto s = arr->get(i)->value<std::string>();
            const std::string key = "checks[" + std::to_string(i) + "]";
            if (!s) fail(key, "expected a string");
            const auto& known = known_checks();
            if (std::find(known.begin(), known.end(), *s) == known.end()) fail(key, "unknown check '" + *s + "'");
            spec.checks.push_back(*s);
        }
    }
    if (auto n = t.at_path("options.cutoff")) {
        spec.cutoff = small_int(as_int(*n.node(), "options.cutoff"), "options.cutoff");
        if (spec.cutoff < 1) fail("options.cutoff", "must be >= 1");
    }
    if (auto n = t.at_path("options.max_dim")) {
        spec.max_dim = as_int(*n.node(), "options.max_dim");
        if (spec.max_dim < 1) fail("options.max_dim", "must be >= 1");
    }
    if (auto n = t.at_path("options.exhaustive")) {
        auto b = n.value<bool>();
        if (!b || !n.is_boolean()) fail("options.exhaustive", "expected true or false");
        spec.exhaustive = *b;
    }
    return spec;
}

InputSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("input", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string write_config(const InputSpec& spec) {
    toml::table t;
    if (!spec.name.empty()) t.insert("name", spec.name);
    toml::array orders;
    for (int m : spec.bichar.group().orders()) orders.push_back(static_cast<std::int64_t>(m));
    t.insert("group", toml::table{{"orders", orders}});
    toml::array exps;
    for (const auto& row : spec.bichar.declared_exponents()) exps.push_back(to_array(row));
    t.insert("braiding", toml::table{{"conductor", static_cast<std::int64_t>(spec.bichar.declared_conductor())}, {"exponents", exps}});
    if (spec.roots) {
        toml::array pos;
        for (const auto& v : spec.roots->positive) pos.push_back(to_array(v));
        toml::array ord;
        for (int m : spec.roots->orders) ord.push_back(static_cast<std::int64_t>(m));
        t.insert("roots", toml::table{{"positive", pos}, {"orders", ord}});
    }
    if (!spec.checks.empty()) {
        toml::array c;
        for (const auto& s : spec.checks) c.push_back(s);
        t.insert("checks", c);
    }
    t.insert("options", toml::table{{"cutoff", static_cast<std::int64_t>(spec.cutoff)},
                                    {"max_dim", spec.max_dim},
                                    {"exhaustive", spec.exhaustive}});
    std::ostringstream os;
    os << t << "\n";
    return os.str();
}

InputSpec spec_from_preset(const Preset& p) {
    InputSpec s;
    s.name = p.name;
    s.bichar = p.bichar;
    s.roots = p.roots;
    return s;
}

Preset preset_by_name(const std::string& name, int n, int l) {
    if (name == "taft") return preset_taft(n);
    if (name == "uqsl2") return preset_uqsl2(n);
    if (name == "super-a11") return preset_super_a11(n);
    if (name.rfind("cartan-", 0) == 0) return preset_cartan(name.substr(7), l);
    throw InputError("preset: unknown preset '" + name + "' (taft, uqsl2, super-a11, cartan-<type>)");
}

}  // namespace nd
