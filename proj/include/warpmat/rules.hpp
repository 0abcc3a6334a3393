#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "warpmat/matrix.hpp"

namespace warpmat {

std::int64_t binomial(int n, int k);

enum class Rule : std::uint8_t { StepLaw = 0, ColumnCounts = 1, ComplementPairs = 2, Alternating = 3 };

/// Roman numeral used for the rule in reports ("i" .. "iv").
std::string rule_name(Rule r);
Rule rule_from_name(const std::string& name);

/// Outcome of one rule. `passed` is true exactly when `witness` is empty.
struct RuleVerdict {
    bool passed = true;
    bool skipped = false;
    std::string witness;

    // Offending coordinates when the witness is cell- or row-shaped (0-based).
    std::vector<std::pair<int, int>> cells;
    std::vector<int> rows;
    std::optional<int> column;
    std::vector<std::int64_t> histogram;
};

struct RuleReport {
    RuleVerdict step_law;
    RuleVerdict column_counts;
    RuleVerdict complement_pairs;
    RuleVerdict alternating;

    // Pairs (i, j) of rows with row_i + row_j = (c ... c), when rule (iii) passes.
    std::vector<std::pair<int, int>> complement_matching;
    // Rows (up-start, down-start) found by rule (iv).
    std::optional<std::pair<int, int>> alternating_rows;

    bool all_passed() const noexcept;
    const RuleVerdict& verdict(Rule r) const;
};

RuleReport verify_rules(const WarpingMatrix& m);

nlohmann::json to_json(const RuleReport& r);
std::string to_text(const RuleReport& r);

/// Direction of a row that alternates between two adjacent values:
/// +1 for (k, k+1, k, ...), -1 for (l, l-1, l, ...), 0 otherwise.
int alternation(const LabeledSequence& row);

}  // namespace warpmat
