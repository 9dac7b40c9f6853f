#include "doctest.h"

#include "nd/report.hpp"

using namespace nd;

TEST_CASE("roots of unity are exponent-encoded") {
    CHECK(to_json(RootOfUnity(-1, 6)) == Json{{"exp", 5}, {"conductor", 6}});
    Character chi({RootOfUnity(1, 2), RootOfUnity(0, 3)});
    CHECK(to_json(chi).dump() == R"([{"conductor":2,"exp":1},{"conductor":3,"exp":0}])");
}

TEST_CASE("report round-trips through JSON text") {
    RunOptions opts;
    opts.checks = {"dims", "modularity", "distinguished", "kr-pairs", "spherical"};
    for (const auto& p : {preset_taft(3), preset_super_a11(1)}) {
        auto out = run_pipeline(spec_from_preset(p), opts);
        CHECK_FALSE(out.undetermined);
        const std::string text = out.report.dump(2);
        CHECK(Json::parse(text) == out.report);
        CHECK(run_pipeline(spec_from_preset(p), opts).report.dump(2) == text);
        CHECK_FALSE(out.report.contains("timings"));
    }
}

TEST_CASE("report contents for super A(1|1) n = 1") {
    RunOptions opts;
    opts.checks = {"dims", "modularity", "spherical"};
    auto rep = run_pipeline(spec_from_preset(preset_super_a11(1)), opts).report;
    CHECK(rep["nichols"]["total_dim"] == 8);
    CHECK(rep["nichols"]["hilbert_series"] == Json{1, 2, 2, 2, 1});
    CHECK(rep["modularity"]["verdict"] == "modular");
    CHECK(rep["modularity"]["witnesses"].size() == 4);
    CHECK(rep["spiv"] == Json::parse("[[1, 1]]"));
    CHECK(rep["spherical"] == true);
    CHECK_FALSE(rep.contains("axioms"));
}

TEST_CASE("degenerate b and cutoff verdicts") {
    InputSpec s;
    s.bichar = Bicharacter(GroupData({2, 2}), 2, {{1, 0}, {0, 1}});
    RunOptions opts;
    opts.checks = {"modularity"};
    auto rep = run_pipeline(s, opts).report;
    CHECK(rep["modularity"]["verdict"] == "not-modular-by-criterion");
    CHECK(rep["modularity"]["reason"] == "(i) fails");

    s.bichar = Bicharacter(GroupData({2}), 2, {{0}});
    s.cutoff = 5;
    auto out = run_pipeline(s, opts);
    CHECK(out.undetermined);
    CHECK(out.report["modularity"]["verdict"] == "undetermined");
    CHECK(out.report["nichols"]["hilbert_series"] == Json{1, 1, 1, 1, 1, 1});
}

TEST_CASE("expectation comparison") {
    Json actual = Json::parse(R"({"a": {"b": [1, 2], "c": true}, "d": "x"})");
    CHECK(compare_expectation(Json::parse(R"({"a": {"c": true}})"), actual).empty());
    CHECK(compare_expectation(Json::object(), actual).empty());
    auto diffs = compare_expectation(Json::parse(R"({"a": {"b": [2, 1]}, "e": 1})"), actual);
    REQUIRE(diffs.size() == 2);
    CHECK(diffs[0].rfind("/a/b", 0) == 0);
    CHECK(diffs[1] == "/e missing");
}
