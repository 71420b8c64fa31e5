#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "argforge/metrics.hpp"

using namespace argforge;

namespace {

RunRecord rec(bool expected, Actual actual, const std::string& prop = "ReachSafety") {
    return {"b", prop, expected, actual};
}

// the 4-record example used throughout: (T,T) (T,F) (F,F) (T,unknown)
std::vector<RunRecord> four_records() {
    return {rec(true, Actual::True), rec(true, Actual::False),
            rec(false, Actual::False), rec(true, Actual::Unknown)};
}

} // namespace

TEST_CASE("results csv parsing") {
    std::vector<std::string> diags;
    auto rs = parse_results(
        "benchmark,property,expected,actual\n"
        "b1,ReachSafety,true,unknown\n"
        "b2,ExceptionProperty,false,true\n"
        "b3,ReachSafety,maybe,true\n"
        "b4,ReachSafety,true,perhaps\n"
        "b5,BadProperty,true,true\n",
        &diags);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].benchmark == "b1");
    CHECK(rs[0].actual == Actual::Unknown);
    CHECK(rs[1].property == "ExceptionProperty");
    CHECK(diags.size() == 3);
}

TEST_CASE("empty body yields an empty list") {
    CHECK(parse_results("benchmark,property,expected,actual\n").empty());
}

TEST_CASE("tabulation of the 4-record fixture") {
    ConfusionCounts c = tabulate(four_records());
    CHECK(c.tp == 1);
    CHECK(c.fn == 1);
    CHECK(c.tn == 1);
    CHECK(c.fp == 0);
    CHECK(c.u_pos == 1);
    CHECK(c.u_neg == 0);
    CHECK(c.total() == 4);
}

TEST_CASE("tabulate with a property filter partitions exactly") {
    std::vector<RunRecord> rs = {
        rec(true, Actual::True, "ReachSafety"),
        rec(true, Actual::False, "ReachSafety"),
        rec(false, Actual::True, "ExceptionProperty"),
        rec(false, Actual::False, "ExceptionProperty"),
        rec(true, Actual::Timeout, "ReachSafety"),
        rec(false, Actual::Error, "ExceptionProperty"),
    };
    ConfusionCounts all = tabulate(rs);
    ConfusionCounts reach = tabulate(rs, std::string("ReachSafety"));
    ConfusionCounts exc = tabulate(rs, std::string("ExceptionProperty"));
    CHECK(reach.total() + exc.total() == all.total());
    CHECK(reach.tp == 1);
    CHECK(reach.fn == 1);
    CHECK(reach.u_pos == 1);
    CHECK(exc.fp == 1);
    CHECK(exc.tn == 1);
    CHECK(exc.u_neg == 1);
}

TEST_CASE("tabulate is permutation invariant") {
    auto rs = four_records();
    std::reverse(rs.begin(), rs.end());
    CHECK(tabulate(rs) == tabulate(four_records()));
}

TEST_CASE("exclusive metrics on the fixture") {
    MetricSet m = metrics_exclusive(tabulate(four_records()));
    CHECK(m.accuracy == Ratio{2, 3});
    CHECK(m.precision == Ratio{1, 1});
    CHECK(m.recall == Ratio{1, 2});
    CHECK(m.specificity == Ratio{1, 1});
}

TEST_CASE("ui metrics on the fixture") {
    MetricSet m = metrics_ui(tabulate(four_records()));
    CHECK(m.accuracy == Ratio{1, 2});
    CHECK(m.recall == Ratio{1, 3});
    CHECK(m.specificity == Ratio{1, 1});
    CHECK(m.percent_undecidable == Ratio{1, 4});
}

TEST_CASE("degenerate counts") {
    ConfusionCounts one_tp;
    one_tp.tp = 1;
    MetricSet m = metrics_exclusive(one_tp);
    CHECK(m.accuracy == Ratio{1, 1});
    CHECK(m.recall == Ratio{1, 1});
    CHECK(!m.specificity.defined());

    MetricSet zero = metrics_exclusive({});
    CHECK(!zero.accuracy.defined());
    CHECK(!zero.precision.defined());
    CHECK(!zero.recall.defined());
    CHECK(!zero.specificity.defined());

    ConfusionCounts undec;
    undec.u_pos = 2;
    undec.u_neg = 1;
    MetricSet ui = metrics_ui(undec);
    CHECK(ui.accuracy == Ratio{0, 3});
    CHECK(!ui.precision.defined());
    CHECK(ui.percent_undecidable == Ratio{3, 3});
}

TEST_CASE("no undecidables makes both modes agree") {
    ConfusionCounts c;
    c.tp = 3; c.tn = 2; c.fp = 1; c.fn = 1;
    MetricSet ex = metrics_exclusive(c);
    MetricSet ui = metrics_ui(c);
    CHECK(ex.accuracy == ui.accuracy);
    CHECK(ex.recall == ui.recall);
    CHECK(ex.specificity == ui.specificity);
    CHECK(ui.percent_undecidable == Ratio{0, 7});
}

TEST_CASE("rounding is half-up to two decimals") {
    CHECK(round2(Ratio{271, 1000}) == "0.27");
    CHECK(round2(Ratio{275, 1000}) == "0.28");   // half rounds up
    CHECK(round2(Ratio{1, 2}) == "0.50");
    CHECK(round2(Ratio{1, 1}) == "1.00");
    CHECK(round2(Ratio{1, 3}) == "0.33");
    CHECK(round2(Ratio{2, 3}) == "0.67");
    CHECK(round2(Ratio{0, 5}) == "0.00");
    CHECK(round2(Ratio{0, 0}) == "—");
}

TEST_CASE("percent rendering") {
    CHECK(percent(Ratio{53, 100}) == "53%");
    CHECK(percent(Ratio{1, 4}) == "25%");
    CHECK(percent(Ratio{1, 3}) == "33%");
    CHECK(percent(Ratio{1, 2}) == "50%");
    CHECK(percent(Ratio{0, 7}) == "0%");
    CHECK(percent(Ratio{0, 0}) == "—");
}

TEST_CASE("precision invariance and dominance over random counts") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> d(0, 50);
    for (int i = 0; i < 10000; i++) {
        ConfusionCounts c;
        c.tp = d(rng); c.tn = d(rng); c.fp = d(rng);
        c.fn = d(rng); c.u_pos = d(rng); c.u_neg = d(rng);
        MetricSet ex = metrics_exclusive(c);
        MetricSet ui = metrics_ui(c);
        CHECK(ex.precision == ui.precision);
        CHECK(ui.accuracy <= ex.accuracy);
        CHECK(ui.recall <= ex.recall);
        CHECK(ui.specificity <= ex.specificity);
    }
}

TEST_CASE("report table renders groups and the undecidable row") {
    std::vector<ReportGroup> groups = {
        {"ReachSafety", tabulate(four_records())},
        {"Cumulative", tabulate(four_records())},
    };
    Report r = render_report(groups);
    CHECK(r.text.find("Accuracy") != std::string::npos);
    CHECK(r.text.find("Specificity (UI)") != std::string::npos);
    CHECK(r.text.find("% Undecidable") != std::string::npos);
    CHECK(r.text.find("0.67") != std::string::npos);
    CHECK(r.text.find("25%") != std::string::npos);
    // csv keeps the raw rationals alongside the rounded rendering
    CHECK(r.csv.find("Accuracy,0.67,2/3,0.67,2/3") != std::string::npos);
    CHECK(r.csv.find("metric,ReachSafety,ReachSafety_raw,Cumulative,Cumulative_raw") !=
          std::string::npos);
}

TEST_CASE("undefined metrics render as an em dash in the table") {
    Report r = render_report({{"Empty", ConfusionCounts{}}});
    CHECK(r.text.find("—") != std::string::npos);
    CHECK(r.csv.find("undefined") != std::string::npos);
}
