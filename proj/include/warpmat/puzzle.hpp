#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "warpmat/knot.hpp"
#include "warpmat/matrix.hpp"
#include "warpmat/rules.hpp"

namespace warpmat {

/// Largest c the puzzle grid accepts (2^c x 2c cells).
inline constexpr int kMaxPuzzleCrossings = 8;

/// 2^c x 2c grid of digits 0..c, some cells empty.
class PuzzleGrid {
public:
    static constexpr int kEmpty = -1;

    PuzzleGrid() = default;
    explicit PuzzleGrid(int c);
    /// cells is row-major, kEmpty for blanks.
    PuzzleGrid(int c, std::vector<int> cells);
    static PuzzleGrid from_matrix(const WarpingMatrix& m);

    int crossings() const noexcept { return c_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return 2 * c_; }
    int size() const noexcept { return rows_ * cols(); }

    int at(int r, int col) const { return cells_.at(index(r, col)); }
    bool empty(int r, int col) const { return at(r, col) == kEmpty; }
    void set(int r, int col, int digit);
    void clear(int r, int col) { cells_.at(index(r, col)) = kEmpty; }

    int filled() const noexcept;
    bool full() const noexcept { return filled() == size(); }
    const std::vector<int>& cells() const noexcept { return cells_; }

    /// Requires a full grid.
    WarpingMatrix to_matrix() const;

    friend bool operator==(const PuzzleGrid&, const PuzzleGrid&) = default;

private:
    std::size_t index(int r, int col) const;

    int c_ = 0;
    int rows_ = 0;
    std::vector<int> cells_;
};

class RuleSet {
public:
    /// Defaults to {i, ii}.
    RuleSet() : RuleSet({Rule::StepLaw, Rule::ColumnCounts}) {}
    RuleSet(std::initializer_list<Rule> rules);
    static RuleSet all() { return {Rule::StepLaw, Rule::ColumnCounts, Rule::ComplementPairs, Rule::Alternating}; }
    /// Comma separated names, e.g. "i,ii" or "all".
    static RuleSet parse(const std::string& text);

    bool contains(Rule r) const noexcept { return (bits_ >> static_cast<int>(r)) & 1U; }
    std::string to_string() const;
    std::vector<std::string> names() const;

    friend bool operator==(const RuleSet&, const RuleSet&) = default;

private:
    std::uint8_t bits_ = 0;
};

struct Violation {
    Rule rule = Rule::StepLaw;
    std::vector<std::pair<int, int>> cells;  // (row, col), 0-based
    std::optional<int> column;
    std::optional<int> value;
    std::vector<int> rows;
    std::string message;
};

/// Checks only what the filled cells already decide: unit steps between
/// filled neighbours (i), column counts not above C(c,n) (ii), full rows
/// lacking a possible complement or duplicated (iii), too many or mismatched
/// full alternating rows (iv). A complete grid gets the full rule checks.
std::vector<Violation> validate(const PuzzleGrid& g, const RuleSet& rules);

struct SolveOptions {
    std::size_t limit = 1;
    // Only rows in non-decreasing order are produced; breaks the row-swap
    // symmetry when enumerating the empty grid.
    bool rows_ascending = false;
    // Search nodes before giving up (0 = unbounded).
    std::uint64_t max_nodes = 0;
};

struct SolveResult {
    std::vector<PuzzleGrid> solutions;
    bool exhausted = false;  // the whole search space was explored
    std::uint64_t nodes = 0;
};

SolveResult solve_detailed(const PuzzleGrid& g, const RuleSet& rules, const SolveOptions& options);

/// Up to `limit` completions in deterministic order.
std::vector<PuzzleGrid> solve(const PuzzleGrid& g, const RuleSet& rules, std::size_t limit);

struct GeneratedPuzzle {
    PuzzleGrid clues;
    PuzzleGrid solution;
    std::string notice;  // set when target_clues could not be reached
};

inline constexpr int kMaxGeneratorCrossings = 6;

/// Removes cells of M(P) (rows in mask order, built from `reference`) in a
/// seeded random order while the clue grid keeps exactly one completion.
GeneratedPuzzle generate(const OrientedKnotDiagram& reference, const RuleSet& rules, std::uint64_t seed,
                         int target_clues);

struct Enumeration {
    std::vector<WarpingMatrix> classes;  // canonical forms, sorted
    std::size_t completions = 0;         // row-sorted completions visited
};

/// All matrices obeying `rules` for 1 <= c <= 3, up to row swaps, column
/// rotation and (optionally) column reversal.
Enumeration enumerate_matrices(int c, const RuleSet& rules = RuleSet::all(), bool allow_reflection = true);

/// Empty cell with the fewest digits allowed by its filled row neighbours
/// and the column counts; ties broken row-major. nullopt on a full grid.
std::optional<std::pair<int, int>> most_constrained_empty_cell(const PuzzleGrid& g);

}  // namespace warpmat
