#include "nd/report.hpp"

#include <chrono>
#include <sstream>

namespace nd {

namespace {

class Stopwatch {
public:
    explicit Stopwatch(Json& sink, bool enabled) : sink_(sink), enabled_(enabled) {}
    template <class F>
    auto time(const std::string& name, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(name, t0);
        } else {
            auto r = f();
            record(name, t0);
            return r;
        }
    }

private:
    void record(const std::string& name, std::chrono::steady_clock::time_point t0) {
        if (!enabled_) return;
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        sink_[name] = ms.count();
    }
    Json& sink_;
    bool enabled_;
};

Json vec_list(const std::vector<LatticeVec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(v);
    return out;
}

Json pair_list(const std::vector<std::pair<LatticeVec, LatticeVec>>& ps) {
    Json out = Json::array();
    for (const auto& [j, a] : ps) out.push_back({{"j", j}, {"a", a}});
    return out;
}

Json input_echo(const InputSpec& spec) {
    Json in;
    in["name"] = spec.name;
    in["group"]["orders"] = spec.bichar.group().orders();
    in["braiding"]["conductor"] = spec.bichar.declared_conductor();
    in["braiding"]["exponents"] = spec.bichar.declared_exponents();
    if (spec.roots) {
        in["roots"]["positive"] = vec_list(spec.roots->positive);
        in["roots"]["orders"] = spec.roots->orders;
    }
    in["cutoff"] = spec.cutoff;
    return in;
}

bool wants(const RunOptions& o, const std::string& c) { return o.checks.empty() || o.checks.count(c) > 0; }

}  // namespace

Json to_json(const RootOfUnity& z) { return {{"exp", z.exponent()}, {"conductor", z.conductor()}}; }

Json to_json(const Character& chi) {
    Json out = Json::array();
    for (const auto& v : chi.values()) out.push_back(to_json(v));
    return out;
}

Json to_json(const HopfReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}};
        if (!c.passed) j["failure"] = c.failure;
        checks.push_back(j);
    }
    return {{"passed", r.passed()}, {"checks", checks}};
}

RunOutcome run_pipeline(const InputSpec& spec, const RunOptions& opts) {
    RunOutcome out;
    Json& rep = out.report;
    Json timings = Json::object();
    Stopwatch sw(timings, opts.timings);
    rep["input"] = input_echo(spec);

    const NicholsAlgebra B = sw.time("nichols", [&] { return NicholsAlgebra::build(spec.bichar, spec.cutoff); });
    Json& nj = rep["nichols"];
    nj["finite"] = B.finite();
    nj["hilbert_series"] = B.dims();
    rep["b_nondegenerate"] = spec.bichar.is_nondegenerate();
    if (!B.finite()) {
        out.undetermined = true;
        nj["reason"] = "cutoff exceeded at degree " + std::to_string(spec.cutoff);
        if (wants(opts, "modularity")) {
            rep["modularity"] = {{"verdict", to_string(Verdict::Undetermined)}, {"reason", "cutoff exceeded"}};
        }
        if (opts.timings) rep["timings"] = timings;
        return out;
    }
    nj["total_dim"] = B.total_dim();
    nj["ell"] = B.ell();
    nj["i_ell"] = B.i_ell();
    if (spec.roots) nj["root_formula"] = B.check_root_formula(*spec.roots);

    if (wants(opts, "modularity") || wants(opts, "radford")) {
        ModularityReport mr = sw.time("modularity", [&] { return modularity_check(B); });
        rep["radford_consistent"] = mr.radford_consistent;
        if (wants(opts, "modularity")) {
            Json m;
            m["verdict"] = to_string(mr.verdict);
            m["b_nondegenerate"] = mr.b_nondegenerate;
            m["witnesses"] = pair_list(mr.witnesses);
            m["strict_witnesses"] = pair_list(mr.strict_witnesses);
            if (!mr.b_nondegenerate) {
                m["reason"] = "(i) fails";
            } else if (mr.witnesses.empty()) {
                m["reason"] = "(ii) fails";
            }
            rep["modularity"] = m;
        }
    }

    const bool need_double = wants(opts, "axioms") || wants(opts, "quasitriangular") || wants(opts, "drinfeld-rank") ||
                             wants(opts, "distinguished") || wants(opts, "kr-pairs") || wants(opts, "spherical") ||
                             wants(opts, "ribbon") || wants(opts, "radford");
    if (!need_double) {
        if (opts.timings) rep["timings"] = timings;
        return out;
    }
    auto D = sw.time("double", [&] { return std::make_shared<const BraidedDouble>(spec.bichar, spec.cutoff); });
    SmashAlgebra H(D);
    rep["double"] = {{"dim", D->dim()}, {"smash_dim", H.dim()}, {"group_size", D->group_size()}};

    if (wants(opts, "axioms")) {
        Json a;
        if (opts.exhaustive && D->dim() <= opts.max_dim) {
            a["mode"] = "exhaustive";
            a["report"] = to_json(sw.time("axioms", [&] { return verify_hopf(*D, full_scope(*D, 1 << 20)); }));
        } else if (D->dim() <= opts.sample_max_dim) {
            a["mode"] = "sampled";
            if (opts.exhaustive) a["note"] = "dimension exceeds max_dim";
            a["report"] = to_json(sw.time("axioms", [&] { return verify_hopf(*D, sampled_scope(*D, 128, 300, 400, 1)); }));
        } else {
            a["mode"] = "skipped";
            a["note"] = "dimension exceeds bound";
        }
        rep["axioms"] = a;
    }
    const bool small = D->dim() <= opts.max_dim;
    if (wants(opts, "quasitriangular")) {
        if (D->dim() <= opts.sample_max_dim) {
            rep["quasitriangular"] = to_json(sw.time("quasitriangular", [&] {
                return verify_quasitriangular(*D, D->r_matrix(), D->generators());
            }));
        } else {
            rep["quasitriangular"] = {{"skipped", "dimension exceeds bound"}};
        }
    }
    if (wants(opts, "drinfeld-rank")) {
        if (small) {
            rep["drinfeld_map_rank"] = sw.time("drinfeld_rank", [&] { return drinfeld_map_rank(*D, D->r_matrix()); });
        } else {
            rep["drinfeld_map_rank"] = nullptr;
        }
    }

    const bool need_h = wants(opts, "distinguished") || wants(opts, "kr-pairs") || wants(opts, "spherical") ||
                        wants(opts, "ribbon") || wants(opts, "radford");
    if (!need_h) {
        if (opts.timings) rep["timings"] = timings;
        return out;
    }
    const DistinguishedData d = sw.time("distinguished", [&] { return distinguished_data(H, 64); });
    if (wants(opts, "distinguished")) {
        rep["distinguished"] = {{"i_ell", d.i_ell},
                                {"alpha_point", d.alpha_point},
                                {"g_H", to_json(d.g_H)},
                                {"left_integral", d.left_integral},
                                {"unimodular", D->group().is_zero(d.alpha_point)}};
    }
    if (wants(opts, "radford")) rep["radford_s4"] = sw.time("radford_s4", [&] { return radford_s4_check(H, d); });

    std::vector<RibbonPair> kr;
    if (wants(opts, "kr-pairs") || wants(opts, "ribbon")) {
        kr = sw.time("kr_pairs", [&] { return enumerate_kr_pairs(H, d); });
        Json list = Json::array();
        for (const auto& p : kr) list.push_back({{"zeta_point", p.zeta_point}, {"a", p.a_exponents}});
        rep["kr_pairs"] = list;
    }
    if (wants(opts, "spherical")) {
        auto sp = sw.time("spiv", [&] { return spiv(H, d); });
        Json list = Json::array();
        for (const auto& w : sp) list.push_back(w.a_exponents);
        rep["spiv"] = list;
        rep["spherical"] = spherical_verdict(d, sp);
        Json rem = Json::array();
        for (const auto& w : spherical_check_remark(D->bichar(), d.i_ell)) rem.push_back({{"b", w.b}, {"c", w.c}});
        rep["spherical_remark_witnesses"] = rem;
    }
    if (wants(opts, "ribbon")) {
        Json r;
        if (H.dim() > opts.generic_double_max) {
            r["skipped"] = "dim H exceeds " + std::to_string(opts.generic_double_max);
        } else {
            sw.time("ribbon", [&] {
                GenericDouble DD(H, opts.generic_double_max);
                const Elem2 R = DD.r_matrix();
                r["double_dim"] = DD.dim();
                r["drinfeld_map_rank"] = drinfeld_map_rank(DD, R);
                Json list = Json::array();
                for (const auto& p : kr) {
                    Json item = to_json(verify_ribbon(DD, R, ribbon_element(DD, H, p)));
                    item["zeta_point"] = p.zeta_point;
                    item["a"] = p.a_exponents;
                    list.push_back(item);
                }
                r["elements"] = list;
            });
        }
        rep["ribbon"] = r;
    }
    if (opts.timings) rep["timings"] = timings;
    return out;
}

std::string human_summary(const Json& report) {
    std::ostringstream os;
    const Json& in = report.at("input");
    os << "input " << (in.value("name", std::string()).empty() ? "(unnamed)" : in.at("name").get<std::string>())
       << " orders " << in.at("group").at("orders").dump() << " conductor " << in.at("braiding").at("conductor") << "\n";
    const Json& nj = report.at("nichols");
    os << "hilbert_series " << nj.at("hilbert_series").dump() << "\n";
    if (!nj.at("finite").get<bool>()) {
        os << "nichols undetermined: " << nj.at("reason").get<std::string>() << "\n";
    } else {
        os << "total_dim " << nj.at("total_dim") << " ell " << nj.at("ell") << " i_ell " << nj.at("i_ell").dump() << "\n";
    }
    if (nj.contains("root_formula")) os << "root_formula " << (nj.at("root_formula").get<bool>() ? "ok" : "mismatch") << "\n";
    os << "b_nondegenerate " << report.at("b_nondegenerate") << "\n";
    if (report.contains("double")) os << "double dim " << report["double"]["dim"] << " smash dim " << report["double"]["smash_dim"] << "\n";
    auto checks_line = [&](const std::string& label, const Json& r) {
        if (!r.contains("checks")) return;
        for (const auto& c : r.at("checks")) {
            os << label << " " << c.at("name").get<std::string>() << " " << (c.at("passed").get<bool>() ? "pass" : "FAIL") << " ("
               << c.at("checked") << ")";
            if (c.contains("failure")) os << " " << c.at("failure").get<std::string>();
            os << "\n";
        }
    };
    if (report.contains("axioms")) {
        const Json& a = report.at("axioms");
        os << "axioms mode " << a.at("mode").get<std::string>() << "\n";
        if (a.contains("report")) checks_line("axiom", a.at("report"));
    }
    if (report.contains("quasitriangular")) checks_line("qt", report.at("quasitriangular"));
    if (report.contains("drinfeld_map_rank")) os << "drinfeld_map_rank " << report.at("drinfeld_map_rank").dump() << "\n";
    if (report.contains("distinguished")) {
        const Json& d = report.at("distinguished");
        os << "alpha_point " << d.at("alpha_point").dump() << " g_H " << d.at("g_H").dump() << "\n";
    }
    if (report.contains("kr_pairs")) os << "kr_pairs " << report.at("kr_pairs").dump() << "\n";
    if (report.contains("spiv")) os << "spiv " << report.at("spiv").dump() << " spherical " << report.at("spherical") << "\n";
    if (report.contains("radford_consistent")) os << "radford_consistent " << report.at("radford_consistent") << "\n";
    if (report.contains("radford_s4")) os << "radford_s4 " << report.at("radford_s4") << "\n";
    if (report.contains("modularity")) {
        const Json& m = report.at("modularity");
        os << "modularity " << m.at("verdict").get<std::string>();
        if (m.contains("reason")) os << " (" << m.at("reason").get<std::string>() << ")";
        os << "\n";
        if (m.contains("witnesses")) os << "witnesses " << m.at("witnesses").dump() << "\n";
    }
    if (report.contains("ribbon")) {
        const Json& r = report.at("ribbon");
        if (r.contains("skipped")) {
            os << "ribbon skipped: " << r.at("skipped").get<std::string>() << "\n";
        } else {
            os << "ribbon double dim " << r.at("double_dim") << " drinfeld_map_rank " << r.at("drinfeld_map_rank") << "\n";
            for (const auto& e : r.at("elements")) checks_line("ribbon", e);
        }
    }
    if (report.contains("timings")) {
        for (const auto& [k, v] : report.at("timings").items()) os << "time " << k << " " << v << " ms\n";
    }
    return os.str();
}

std::vector<std::string> compare_expectation(const Json& expected, const Json& actual, const std::string& path) {
    std::vector<std::string> diffs;
    if (expected.is_object()) {
        if (!actual.is_object()) return {path.empty() ? "/" : path};
        for (const auto& [k, v] : expected.items()) {
            const std::string p = path + "/" + k;
            if (!actual.contains(k)) {
                diffs.push_back(p + " missing");
                continue;
            }
            auto sub = compare_expectation(v, actual.at(k), p);
            diffs.insert(diffs.end(), sub.begin(), sub.end());
        }
        return diffs;
    }
    if (expected != actual) diffs.push_back((path.empty() ? "/" : path) + ": expected " + expected.dump() + ", got " + actual.dump());
    return diffs;
}

}  // namespace nd
