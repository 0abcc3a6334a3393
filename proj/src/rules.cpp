#include "warpmat/rules.hpp"

#include <map>
#include <sstream>

namespace warpmat {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::StepLaw: return "i";
        case Rule::ColumnCounts: return "ii";
        case Rule::ComplementPairs: return "iii";
        case Rule::Alternating: return "iv";
    }
    return "?";
}

Rule rule_from_name(const std::string& name) {
    if (name == "i" || name == "1") return Rule::StepLaw;
    if (name == "ii" || name == "2") return Rule::ColumnCounts;
    if (name == "iii" || name == "3") return Rule::ComplementPairs;
    if (name == "iv" || name == "4") return Rule::Alternating;
    throw ParseError("unknown rule \"" + name + "\"");
}

bool RuleReport::all_passed() const noexcept {
    return step_law.passed && column_counts.passed && complement_pairs.passed && alternating.passed;
}

const RuleVerdict& RuleReport::verdict(Rule r) const {
    switch (r) {
        case Rule::StepLaw: return step_law;
        case Rule::ColumnCounts: return column_counts;
        case Rule::ComplementPairs: return complement_pairs;
        case Rule::Alternating: return alternating;
    }
    return step_law;
}

int alternation(const LabeledSequence& row) {
    if (row.size() < 2) return 0;
    const int step = row[1].value - row[0].value;
    if (step != 1 && step != -1) return 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j].value != row[0].value + (j % 2 ? step : 0)) return 0;
    }
    return step;
}

namespace {

void fail(RuleVerdict& v, std::string witness) {
    v.passed = false;
    v.witness = std::move(witness);
}

RuleVerdict check_step_law(const WarpingMatrix& m) {
    RuleVerdict v;
    const int w = m.columns();
    for (int i = 0; i < m.row_count(); ++i) {
        for (int j = 0; j < w; ++j) {
            const int next = (j + 1) % w;
            const int step = m.at(i, next).value - m.at(i, j).value;
            if (step != 1 && step != -1) {
                std::ostringstream s;
                s << "row " << i + 1 << ": cells at columns " << j + 1 << " and " << next + 1 << " are "
                  << m.at(i, j).value << " and " << m.at(i, next).value;
                fail(v, s.str());
                v.cells = {{i, j}, {i, next}};
                return v;
            }
        }
    }
    return v;
}

RuleVerdict check_column_counts(const WarpingMatrix& m) {
    RuleVerdict v;
    const int c = m.crossings();
    const bool diagram = m.kind() == MatrixKind::Diagram;
    for (int j = 0; j < m.columns(); ++j) {
        std::vector<std::int64_t> hist(static_cast<std::size_t>(c) + 1, 0);
        bool out_of_range = false;
        for (int i = 0; i < m.row_count(); ++i) {
            const int value = m.at(i, j).value;
            if (value < 0 || value > c) {
                out_of_range = true;
            } else {
                ++hist[value];
            }
        }
        std::int64_t deficit = 0;
        bool ok = !out_of_range;
        for (int n = 0; n <= c && ok; ++n) {
            const auto d = binomial(c, n) - hist[n];
            if (d < 0) ok = false;
            deficit += d;
        }
        ok = ok && deficit == (diagram ? 1 : 0);
        if (!ok) {
            std::ostringstream s;
            s << "column " << j + 1 << " histogram";
            for (int n = 0; n <= c; ++n) s << ' ' << n << ':' << hist[n] << '/' << binomial(c, n);
            if (out_of_range) s << " (values outside 0.." << c << ")";
            fail(v, s.str());
            v.column = j;
            v.histogram = hist;
            return v;
        }
    }
    return v;
}

RuleVerdict check_complement_pairs(const WarpingMatrix& m, std::vector<std::pair<int, int>>& matching) {
    RuleVerdict v;
    const int c = m.crossings();
    std::map<std::vector<int>, std::vector<int>> by_values;
    for (int i = 0; i < m.row_count(); ++i) {
        std::vector<int> key;
        for (const auto& cell : m.row(i)) key.push_back(cell.value);
        by_values[key].push_back(i);
    }
    std::vector<int> partner(static_cast<std::size_t>(m.row_count()), -1);
    for (int i = 0; i < m.row_count(); ++i) {
        std::vector<int> complement;
        for (const auto& cell : m.row(i)) complement.push_back(c - cell.value);
        const auto it = by_values.find(complement);
        std::vector<int> candidates;
        if (it != by_values.end()) {
            for (int k : it->second) {
                if (k != i) candidates.push_back(k);
            }
        }
        if (candidates.empty()) {
            fail(v, "row " + std::to_string(i + 1) + " (" + to_string(m.row(i)) + ") has no complement row");
            v.rows = {i};
            return v;
        }
        if (candidates.size() > 1) {
            std::ostringstream s;
            s << "row " << i + 1 << " has " << candidates.size() << " complement rows; pairing is not unique";
            fail(v, s.str());
            v.rows = {i};
            v.rows.insert(v.rows.end(), candidates.begin(), candidates.end());
            return v;
        }
        partner[i] = candidates.front();
    }
    for (int i = 0; i < m.row_count(); ++i) {
        if (partner[partner[i]] != i) {
            fail(v, "row " + std::to_string(i + 1) + " is not in a disjoint complement pair");
            v.rows = {i, partner[i]};
            return v;
        }
        if (i < partner[i]) matching.emplace_back(i, partner[i]);
    }
    if (static_cast<std::int64_t>(matching.size()) != (std::int64_t{1} << (c - 1))) {
        fail(v, "found " + std::to_string(matching.size()) + " complement pairs, expected " +
                    std::to_string(std::int64_t{1} << (c - 1)));
        matching.clear();
    }
    return v;
}

RuleVerdict check_alternating(const WarpingMatrix& m, std::optional<std::pair<int, int>>& found) {
    RuleVerdict v;
    std::vector<int> up;
    std::vector<int> down;
    for (int i = 0; i < m.row_count(); ++i) {
        const int a = alternation(m.row(i));
        if (a > 0) up.push_back(i);
        if (a < 0) down.push_back(i);
    }
    v.rows = up;
    v.rows.insert(v.rows.end(), down.begin(), down.end());
    if (up.size() != 1 || down.size() != 1) {
        std::ostringstream s;
        s << "expected one (k k+1 ...) row and one (l l-1 ...) row, found " << up.size() << " and "
          << down.size();
        fail(v, s.str());
        return v;
    }
    const int k = m.at(up[0], 0).value;
    const int l = m.at(down[0], 0).value;
    if (k + l != m.crossings()) {
        fail(v, "alternating rows start at k=" + std::to_string(k) + " and l=" + std::to_string(l) +
                    " but k+l != " + std::to_string(m.crossings()));
        return v;
    }
    v.rows.clear();
    found = std::make_pair(up[0], down[0]);
    return v;
}

nlohmann::json verdict_json(const RuleVerdict& v) {
    nlohmann::json j{{"passed", v.passed}, {"skipped", v.skipped}};
    if (!v.witness.empty()) j["witness"] = v.witness;
    if (!v.cells.empty()) {
        auto cells = nlohmann::json::array();
        for (auto [r, c] : v.cells) cells.push_back({r, c});
        j["cells"] = cells;
    }
    if (!v.rows.empty()) j["rows"] = v.rows;
    if (v.column) j["column"] = *v.column;
    if (!v.histogram.empty()) j["histogram"] = v.histogram;
    return j;
}

}  // namespace

RuleReport verify_rules(const WarpingMatrix& m) {
    RuleReport report;
    report.step_law = check_step_law(m);
    report.column_counts = check_column_counts(m);
    if (m.kind() == MatrixKind::Diagram) {
        report.complement_pairs.skipped = true;
        report.alternating.skipped = true;
        return report;
    }
    report.complement_pairs = check_complement_pairs(m, report.complement_matching);
    report.alternating = check_alternating(m, report.alternating_rows);
    return report;
}

nlohmann::json to_json(const RuleReport& r) {
    nlohmann::json j;
    for (Rule rule : {Rule::StepLaw, Rule::ColumnCounts, Rule::ComplementPairs, Rule::Alternating}) {
        j["rules"][rule_name(rule)] = verdict_json(r.verdict(rule));
    }
    j["passed"] = r.all_passed();
    if (!r.complement_matching.empty()) j["complement_pairs"] = r.complement_matching;
    if (r.alternating_rows) j["alternating_rows"] = {r.alternating_rows->first, r.alternating_rows->second};
    return j;
}

std::string to_text(const RuleReport& r) {
    std::ostringstream out;
    for (Rule rule : {Rule::StepLaw, Rule::ColumnCounts, Rule::ComplementPairs, Rule::Alternating}) {
        const auto& v = r.verdict(rule);
        out << "rule (" << rule_name(rule) << "): ";
        if (v.skipped) {
            out << "skipped (diagram matrix shape)";
        } else if (v.passed) {
            out << "pass";
        } else {
            out << "FAIL: " << v.witness;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace warpmat
