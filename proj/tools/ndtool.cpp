#include "nd/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum Exit { kOk = 0, kInvalid = 1, kAssertMismatch = 2, kUndetermined = 3 };

struct Args {
    std::string preset;
    int n = 3;
    int l = 5;
    std::string input;
    int cutoff = 0;
    std::string json_path;
    std::string assert_path;
    bool exhaustive = false;
    std::int64_t max_dim = 0;
    bool timings = false;
};

void add_common(CLI::App* sub, Args& a) {
    sub->add_option("--preset", a.preset, "taft, uqsl2, super-a11 or cartan-<type> (e.g. cartan-A2)");
    sub->add_option("--n", a.n, "preset parameter n")->check(CLI::PositiveNumber);
    sub->add_option("--l", a.l, "order of q for Cartan presets")->check(CLI::PositiveNumber);
    sub->add_option("--input", a.input, "config file")->check(CLI::ExistingFile);
    sub->add_option("--cutoff", a.cutoff, "largest Nichols degree to build")->check(CLI::PositiveNumber);
    sub->add_option("--json", a.json_path, "write the report as JSON ('-' for stdout)");
    sub->add_option("--assert", a.assert_path, "JSON file of expected report values")->check(CLI::ExistingFile);
    sub->add_flag("--exhaustive", a.exhaustive, "check the Hopf axioms on every basis element");
    sub->add_option("--max-dim", a.max_dim, "dimension bound for exhaustive checks")->check(CLI::PositiveNumber);
    sub->add_flag("--timings", a.timings, "include timings in the report");
}

nd::InputSpec resolve_input(const Args& a) {
    if (a.preset.empty() == a.input.empty()) throw nd::InputError("input: give exactly one of --preset and --input");
    nd::InputSpec spec = a.input.empty() ? nd::spec_from_preset(nd::preset_by_name(a.preset, a.n, a.l)) : nd::load_config(a.input);
    if (a.cutoff > 0) spec.cutoff = a.cutoff;
    if (a.max_dim > 0) spec.max_dim = a.max_dim;
    if (a.exhaustive) spec.exhaustive = true;
    return spec;
}

int run(const std::string& command, const Args& a) {
    const nd::InputSpec spec = resolve_input(a);
    nd::RunOptions opts;
    opts.exhaustive = spec.exhaustive;
    opts.max_dim = spec.max_dim;
    opts.timings = a.timings;
    if (command == "dims") {
        opts.checks = {"dims"};
    } else if (command == "axioms") {
        opts.checks = {"axioms", "quasitriangular", "drinfeld-rank"};
    } else if (command == "drinfeld-double") {
        opts.checks = {"drinfeld-rank", "ribbon"};
    } else if (command == "ribbon") {
        opts.checks = {"distinguished", "kr-pairs", "spherical", "ribbon"};
    } else if (command == "modularity") {
        opts.checks = {"modularity"};
    } else {
        opts.checks.insert(spec.checks.begin(), spec.checks.end());
    }

    const nd::RunOutcome outcome = nd::run_pipeline(spec, opts);
    std::cout << nd::human_summary(outcome.report);
    if (!a.json_path.empty()) {
        const std::string text = outcome.report.dump(2) + "\n";
        if (a.json_path == "-") {
            std::cout << text;
        } else {
            std::ofstream out(a.json_path);
            if (!out) throw nd::InputError("json: cannot write " + a.json_path);
            out << text;
        }
    }
    if (!a.assert_path.empty()) {
        std::ifstream in(a.assert_path);
        nd::Json expected;
        try {
            expected = nd::Json::parse(in);
        } catch (const nd::Json::parse_error& e) {
            throw nd::InputError("assert: " + std::string(e.what()));
        }
        const auto diffs = nd::compare_expectation(expected, outcome.report);
        for (const auto& d : diffs) std::cerr << "assert mismatch " << d << "\n";
        if (!diffs.empty()) return kAssertMismatch;
    }
    return outcome.undetermined ? kUndetermined : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nichols algebras of diagonal type, their braided Drinfeld doubles, and ribbon/modularity checks"};
    app.require_subcommand(1);
    Args args;
    std::string command;
    for (const char* name : {"check", "dims", "ribbon", "modularity", "axioms", "drinfeld-double"}) {
        auto* sub = app.add_subcommand(name);
        add_common(sub, args);
        sub->callback([&command, name] { command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }
    try {
        return run(command, args);
    } catch (const nd::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const nd::CutoffExceeded& e) {
        std::cerr << "undetermined: " << e.what() << "\n";
        return kUndetermined;
    }
}
