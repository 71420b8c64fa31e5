#include "argforge/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace argforge {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cols;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cols.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cols.push_back(cur);
    for (auto& col : cols) {
        size_t b = col.find_first_not_of(" \t\r");
        size_t e = col.find_last_not_of(" \t\r");
        col = b == std::string::npos ? "" : col.substr(b, e - b + 1);
    }
    return cols;
}

std::optional<Actual> parse_actual(const std::string& s) {
    if (s == "true") return Actual::True;
    if (s == "false") return Actual::False;
    if (s == "unknown") return Actual::Unknown;
    if (s == "error") return Actual::Error;
    if (s == "timeout") return Actual::Timeout;
    return std::nullopt;
}

} // namespace

std::vector<RunRecord> parse_results(std::string_view csv_text,
                                     std::vector<std::string>* diags) {
    std::vector<RunRecord> out;
    std::istringstream in{std::string(csv_text)};
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            saw_header = true;
            if (line != "benchmark,property,expected,actual") {
                if (diags)
                    diags->push_back("results line " + std::to_string(lineno) +
                                     ": expected header benchmark,property,expected,actual");
            }
            continue;
        }
        auto cols = split_row(line);
        if (cols.size() != 4) {
            if (diags)
                diags->push_back("results line " + std::to_string(lineno) +
                                 ": expected 4 columns");
            continue;
        }
        RunRecord r;
        r.benchmark = cols[0];
        r.property = cols[1];
        if (cols[1] != "ReachSafety" && cols[1] != "ExceptionProperty") {
            if (diags)
                diags->push_back("results line " + std::to_string(lineno) +
                                 ": unknown property '" + cols[1] + "'");
            continue;
        }
        if (cols[2] == "true") {
            r.expected = true;
        } else if (cols[2] == "false") {
            r.expected = false;
        } else {
            if (diags)
                diags->push_back("results line " + std::to_string(lineno) +
                                 ": expected verdict must be true or false");
            continue;
        }
        auto a = parse_actual(cols[3]);
        if (!a) {
            if (diags)
                diags->push_back("results line " + std::to_string(lineno) +
                                 ": unknown actual outcome '" + cols[3] + "'");
            continue;
        }
        r.actual = *a;
        out.push_back(std::move(r));
    }
    return out;
}

ConfusionCounts tabulate(const std::vector<RunRecord>& records,
                         const std::optional<std::string>& property_filter) {
    ConfusionCounts c;
    for (const auto& r : records) {
        if (property_filter && r.property != *property_filter) continue;
        if (is_undecidable(r.actual)) {
            (r.expected ? c.u_pos : c.u_neg)++;
        } else if (r.expected) {
            (r.actual == Actual::True ? c.tp : c.fn)++;
        } else {
            (r.actual == Actual::False ? c.tn : c.fp)++;
        }
    }
    return c;
}

std::string round2(const Ratio& r) {
    if (!r.defined()) return "—";
    // value scaled to hundredths, rounded half-up
    long long h = (200 * r.num + r.den) / (2 * r.den);
    std::ostringstream out;
    out << h / 100 << "." << std::setw(2) << std::setfill('0') << h % 100;
    return out.str();
}

std::string percent(const Ratio& r) {
    if (!r.defined()) return "—";
    long long p = (200 * r.num + r.den) / (2 * r.den);
    return std::to_string(p) + "%";
}

MetricSet metrics_exclusive(const ConfusionCounts& c) {
    MetricSet m;
    m.mode = MetricMode::Exclusive;
    m.accuracy = {c.tp + c.tn, c.tp + c.tn + c.fp + c.fn};
    m.precision = {c.tp, c.tp + c.fp};
    m.recall = {c.tp, c.tp + c.fn};
    m.specificity = {c.tn, c.tn + c.fp};
    return m;
}

MetricSet metrics_ui(const ConfusionCounts& c) {
    MetricSet m;
    m.mode = MetricMode::UndecidableInclusive;
    m.accuracy = {c.tp + c.tn, c.total()};
    m.precision = {c.tp, c.tp + c.fp};
    m.recall = {c.tp, c.tp + c.fn + c.u_pos};
    m.specificity = {c.tn, c.tn + c.fp + c.u_neg};
    m.percent_undecidable = {c.u_pos + c.u_neg, c.total()};
    return m;
}

namespace {

std::string raw(const Ratio& r) {
    if (!r.defined()) return "undefined";
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

} // namespace

Report render_report(const std::vector<ReportGroup>& groups) {
    struct Row {
        std::string label;
        std::vector<Ratio> values;
        bool as_percent = false;
    };
    std::vector<Row> rows = {
        {"Accuracy", {}, false},        {"Precision", {}, false},
        {"Recall", {}, false},          {"Specificity", {}, false},
        {"Accuracy (UI)", {}, false},   {"Recall (UI)", {}, false},
        {"Specificity (UI)", {}, false},{"% Undecidable", {}, true},
    };
    for (const auto& g : groups) {
        MetricSet ex = metrics_exclusive(g.counts);
        MetricSet ui = metrics_ui(g.counts);
        rows[0].values.push_back(ex.accuracy);
        rows[1].values.push_back(ex.precision);
        rows[2].values.push_back(ex.recall);
        rows[3].values.push_back(ex.specificity);
        rows[4].values.push_back(ui.accuracy);
        rows[5].values.push_back(ui.recall);
        rows[6].values.push_back(ui.specificity);
        rows[7].values.push_back(ui.percent_undecidable);
    }

    size_t label_w = 0;
    for (const auto& r : rows) label_w = std::max(label_w, r.label.size());
    std::vector<int> col_w;
    for (const auto& g : groups) col_w.push_back(std::max<int>(12, (int)g.label.size()));
    std::ostringstream text;
    text << std::left << std::setw((int)label_w) << "Metric";
    for (size_t i = 0; i < groups.size(); i++)
        text << "  " << std::setw(col_w[i]) << groups[i].label;
    text << "\n";
    for (const auto& r : rows) {
        text << std::left << std::setw((int)label_w) << r.label;
        for (size_t i = 0; i < r.values.size(); i++) {
            std::string s = r.as_percent ? percent(r.values[i]) : round2(r.values[i]);
            // the em dash is 3 bytes; pad by display width, not byte count
            int pad = col_w[i] - (int)(s == "—" ? 1 : s.size());
            text << "  " << s << std::string(pad > 0 ? pad : 0, ' ');
        }
        text << "\n";
    }

    std::ostringstream csv;
    csv << "metric";
    for (const auto& g : groups) csv << "," << g.label << "," << g.label << "_raw";
    csv << "\n";
    for (const auto& r : rows) {
        csv << r.label;
        for (const auto& v : r.values) {
            std::string s = r.as_percent ? percent(v) : round2(v);
            if (s == "—") s = "undefined";
            csv << "," << s << "," << raw(v);
        }
        csv << "\n";
    }
    return {text.str(), csv.str()};
}

} // namespace argforge
