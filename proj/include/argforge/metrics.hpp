#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argforge {

enum class Actual { True, False, Unknown, Error, Timeout };

inline bool is_undecidable(Actual a) { return a != Actual::True && a != Actual::False; }

struct RunRecord {
    std::string benchmark;
    std::string property;   // ReachSafety | ExceptionProperty
    bool expected = false;
    Actual actual = Actual::Unknown;
};

/// Header must be `benchmark,property,expected,actual`. Rows with an
/// unrecognized enum value are rejected with a diagnostic.
std::vector<RunRecord> parse_results(std::string_view csv_text,
                                     std::vector<std::string>* diags = nullptr);

struct ConfusionCounts {
    long long tp = 0, tn = 0, fp = 0, fn = 0;
    long long u_pos = 0;   // expected true, actual undecidable
    long long u_neg = 0;   // expected false, actual undecidable

    long long total() const { return tp + tn + fp + fn + u_pos + u_neg; }
    bool operator==(const ConfusionCounts&) const = default;
};

ConfusionCounts tabulate(const std::vector<RunRecord>& records,
                         const std::optional<std::string>& property_filter = std::nullopt);

/// Exact rational; 0/0 is "undefined" and renders as an em dash.
struct Ratio {
    long long num = 0;
    long long den = 0;

    bool defined() const { return den != 0; }
    bool operator==(const Ratio& o) const {
        if (den == 0 || o.den == 0) return den == 0 && o.den == 0;
        return num * o.den == o.num * den;
    }
    bool operator<=(const Ratio& o) const {
        if (den == 0 || o.den == 0) return true;   // vacuous when undefined
        return num * o.den <= o.num * den;
    }
};

/// Rounded half-up to 2 decimals, e.g. 271/1000 -> "0.27"; undefined -> "—".
std::string round2(const Ratio& r);

/// Integer percent, half-up, e.g. 53/100 -> "53%"; undefined -> "—".
std::string percent(const Ratio& r);

enum class MetricMode { Exclusive, UndecidableInclusive };

struct MetricSet {
    MetricMode mode = MetricMode::Exclusive;
    Ratio accuracy, precision, recall, specificity;
    Ratio percent_undecidable;   // inclusive mode only
};

/// Undecidable outcomes excluded from every denominator.
MetricSet metrics_exclusive(const ConfusionCounts& c);

/// Undecidable outcomes count as failed results; precision is unchanged.
MetricSet metrics_ui(const ConfusionCounts& c);

struct ReportGroup {
    std::string label;   // e.g. "ReachSafety", "Cumulative"
    ConfusionCounts counts;
};

struct Report {
    std::string text;   // aligned table
    std::string csv;    // machine form with raw rationals
};

Report render_report(const std::vector<ReportGroup>& groups);

} // namespace argforge
