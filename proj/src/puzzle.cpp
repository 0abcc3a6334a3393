#include "warpmat/puzzle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "warpmat/canonical.hpp"

namespace warpmat {

// ---------------------------------------------------------------- PuzzleGrid

PuzzleGrid::PuzzleGrid(int c) : PuzzleGrid(c, {}) {}

PuzzleGrid::PuzzleGrid(int c, std::vector<int> cells) : c_(c), cells_(std::move(cells)) {
    if (c_ < 1 || c_ > kMaxPuzzleCrossings) {
        throw Error("puzzle grid needs 1 <= c <= " + std::to_string(kMaxPuzzleCrossings));
    }
    rows_ = 1 << c_;
    if (cells_.empty()) cells_.assign(static_cast<std::size_t>(size()), kEmpty);
    if (static_cast<int>(cells_.size()) != size()) {
        throw Error("puzzle grid for c=" + std::to_string(c_) + " needs " + std::to_string(size()) + " cells");
    }
    for (int v : cells_) {
        if (v != kEmpty && (v < 0 || v > c_)) {
            throw Error("puzzle digit " + std::to_string(v) + " outside 0.." + std::to_string(c_));
        }
    }
}

PuzzleGrid PuzzleGrid::from_matrix(const WarpingMatrix& m) {
    if (m.kind() == MatrixKind::Diagram) throw Error("puzzle grids need a full 2^c-row matrix");
    std::vector<int> cells;
    for (const auto& r : m.rows()) {
        for (const auto& cell : r) cells.push_back(cell.value);
    }
    return PuzzleGrid(m.crossings(), std::move(cells));
}

std::size_t PuzzleGrid::index(int r, int col) const {
    if (r < 0 || r >= rows_ || col < 0 || col >= cols()) {
        throw Error("cell (" + std::to_string(r) + "," + std::to_string(col) + ") outside the grid");
    }
    return static_cast<std::size_t>(r) * cols() + col;
}

void PuzzleGrid::set(int r, int col, int digit) {
    if (digit < 0 || digit > c_) throw Error("puzzle digit " + std::to_string(digit) + " outside 0.." + std::to_string(c_));
    cells_.at(index(r, col)) = digit;
}

int PuzzleGrid::filled() const noexcept {
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](int v) { return v != kEmpty; }));
}

WarpingMatrix PuzzleGrid::to_matrix() const {
    if (!full()) throw Error("grid is not complete");
    std::vector<LabeledSequence> rows;
    for (int r = 0; r < rows_; ++r) {
        LabeledSequence row;
        for (int j = 0; j < cols(); ++j) row.push_back(Cell{at(r, j), false});
        rows.push_back(std::move(row));
    }
    return WarpingMatrix(c_, MatrixKind::Projection, std::move(rows));
}

// ------------------------------------------------------------------- RuleSet

RuleSet::RuleSet(std::initializer_list<Rule> rules) {
    for (Rule r : rules) bits_ |= static_cast<std::uint8_t>(1U << static_cast<int>(r));
    if (!contains(Rule::StepLaw)) throw Error("rule set must contain rule (i)");
}

RuleSet RuleSet::parse(const std::string& text) {
    if (text == "all") return all();
    RuleSet out;
    out.bits_ = 0;
    std::istringstream in(text);
    std::string name;
    while (std::getline(in, name, ',')) {
        name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   name.end());
        if (name.empty()) continue;
        out.bits_ |= static_cast<std::uint8_t>(1U << static_cast<int>(rule_from_name(name)));
    }
    if (!out.contains(Rule::StepLaw)) throw ParseError("rule set must contain rule (i)");
    return out;
}

std::vector<std::string> RuleSet::names() const {
    std::vector<std::string> out;
    for (Rule r : {Rule::StepLaw, Rule::ColumnCounts, Rule::ComplementPairs, Rule::Alternating}) {
        if (contains(r)) out.push_back(rule_name(r));
    }
    return out;
}

std::string RuleSet::to_string() const {
    std::string out;
    for (const auto& n : names()) {
        if (!out.empty()) out += ',';
        out += n;
    }
    return out;
}

// ------------------------------------------------------------------ validate

namespace {

bool row_full(const PuzzleGrid& g, int r) {
    for (int j = 0; j < g.cols(); ++j) {
        if (g.empty(r, j)) return false;
    }
    return true;
}

LabeledSequence row_sequence(const PuzzleGrid& g, int r) {
    LabeledSequence s;
    for (int j = 0; j < g.cols(); ++j) s.push_back(Cell{g.at(r, j), false});
    return s;
}

std::string row_text(const PuzzleGrid& g, int r) {
    std::string s;
    for (int j = 0; j < g.cols(); ++j) {
        if (j) s += ' ';
        s += g.empty(r, j) ? std::string(".") : std::to_string(g.at(r, j));
    }
    return s;
}

void check_steps(const PuzzleGrid& g, std::vector<Violation>& out) {
    const int w = g.cols();
    for (int r = 0; r < g.rows(); ++r) {
        for (int j = 0; j < w; ++j) {
            const int next = (j + 1) % w;
            if (w == 2 && j == 1) break;  // the two cells of a 2-wide row are one adjacency
            if (g.empty(r, j) || g.empty(r, next)) continue;
            const int diff = g.at(r, next) - g.at(r, j);
            if (diff == 1 || diff == -1) continue;
            Violation v;
            v.rule = Rule::StepLaw;
            v.cells = {{r, j}, {r, next}};
            std::ostringstream s;
            s << "row " << r + 1 << ", columns " << j + 1 << " and " << next + 1 << ": " << g.at(r, j) << " and "
              << g.at(r, next) << " differ by " << std::abs(diff) << ", not 1";
            v.message = s.str();
            out.push_back(std::move(v));
        }
    }
}

void check_column_counts(const PuzzleGrid& g, std::vector<Violation>& out) {
    const int c = g.crossings();
    for (int j = 0; j < g.cols(); ++j) {
        std::vector<std::vector<int>> rows_with(static_cast<std::size_t>(c) + 1);
        for (int r = 0; r < g.rows(); ++r) {
            if (!g.empty(r, j)) rows_with[g.at(r, j)].push_back(r);
        }
        for (int n = 0; n <= c; ++n) {
            const auto quota = binomial(c, n);
            if (static_cast<std::int64_t>(rows_with[n].size()) <= quota) continue;
            Violation v;
            v.rule = Rule::ColumnCounts;
            v.column = j;
            v.value = n;
            v.rows = rows_with[n];
            for (int r : rows_with[n]) v.cells.emplace_back(r, j);
            std::ostringstream s;
            s << "column " << j + 1 << ": " << n << " appears " << rows_with[n].size() << " times, at most " << quota
              << " allowed";
            v.message = s.str();
            out.push_back(std::move(v));
        }
    }
}

void check_complements(const PuzzleGrid& g, std::vector<Violation>& out) {
    const int c = g.crossings();
    std::map<std::vector<int>, std::vector<int>> full_rows;
    for (int r = 0; r < g.rows(); ++r) {
        if (!row_full(g, r)) continue;
        std::vector<int> key;
        for (int j = 0; j < g.cols(); ++j) key.push_back(g.at(r, j));
        full_rows[key].push_back(r);
    }
    for (const auto& [key, rows] : full_rows) {
        if (rows.size() < 2) continue;
        Violation v;
        v.rule = Rule::ComplementPairs;
        v.rows = rows;
        v.message = "rows " + std::to_string(rows[0] + 1) + " and " + std::to_string(rows[1] + 1) +
                    " are identical, so complement pairs cannot be unique";
        out.push_back(std::move(v));
    }
    for (const auto& [key, rows] : full_rows) {
        const int r = rows.front();
        bool found = false;
        for (int q = 0; q < g.rows() && !found; ++q) {
            if (q == r) continue;
            bool fits = true;
            for (int j = 0; j < g.cols() && fits; ++j) {
                fits = g.empty(q, j) || g.at(q, j) == c - key[j];
            }
            found = fits;
        }
        if (found) continue;
        Violation v;
        v.rule = Rule::ComplementPairs;
        v.rows = {r};
        v.message = "row " + std::to_string(r + 1) + " (" + row_text(g, r) + ") has no row that can hold its complement";
        out.push_back(std::move(v));
    }
}

void check_alternating(const PuzzleGrid& g, std::vector<Violation>& out) {
    std::vector<int> up;
    std::vector<int> down;
    for (int r = 0; r < g.rows(); ++r) {
        if (!row_full(g, r)) continue;
        const int a = alternation(row_sequence(g, r));
        if (a > 0) up.push_back(r);
        if (a < 0) down.push_back(r);
    }
    auto emit = [&](std::vector<int> rows, std::string message) {
        Violation v;
        v.rule = Rule::Alternating;
        v.rows = std::move(rows);
        v.message = std::move(message);
        out.push_back(std::move(v));
    };
    if (up.size() > 1) emit(up, std::to_string(up.size()) + " rows of the form (k k+1 k ...), at most one allowed");
    if (down.size() > 1) {
        emit(down, std::to_string(down.size()) + " rows of the form (l l-1 l ...), at most one allowed");
    }
    if (up.size() == 1 && down.size() == 1) {
        const int k = g.at(up[0], 0);
        const int l = g.at(down[0], 0);
        if (k + l != g.crossings()) {
            emit({up[0], down[0]}, "alternating rows start at k=" + std::to_string(k) + " and l=" + std::to_string(l) +
                                       ", but k+l must be " + std::to_string(g.crossings()));
        }
    }
    if (g.full() && (up.empty() || down.empty())) {
        emit({}, "a complete grid needs one (k k+1 ...) row and one (l l-1 ...) row");
    }
}

}  // namespace

std::vector<Violation> validate(const PuzzleGrid& g, const RuleSet& rules) {
    std::vector<Violation> out;
    if (rules.contains(Rule::StepLaw)) check_steps(g, out);
    if (rules.contains(Rule::ColumnCounts)) check_column_counts(g, out);
    if (rules.contains(Rule::ComplementPairs)) check_complements(g, out);
    if (rules.contains(Rule::Alternating)) check_alternating(g, out);
    return out;
}

// --------------------------------------------------------------------- solve

namespace {

/// Every cyclic sequence of length 2c over 0..c with unit steps, in
/// lexicographic order.
std::vector<std::uint8_t> closed_walks(int c, int& count) {
    const int w = 2 * c;
    std::vector<std::uint8_t> out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(w));
    count = 0;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == w) {
            const int wrap = cur[w - 1] - cur[0];
            if (wrap == 1 || wrap == -1) {
                out.insert(out.end(), cur.begin(), cur.end());
                ++count;
            }
            return;
        }
        const int prev = cur[pos - 1];
        for (int v : {prev - 1, prev + 1}) {
            if (v < 0 || v > c) continue;
            // the walk must still be able to return next to cur[0]
            if (std::abs(v - cur[0]) > w - pos) continue;
            cur[pos] = static_cast<std::uint8_t>(v);
            self(self, pos + 1);
        }
    };
    for (int start = 0; start <= c; ++start) {
        cur[0] = static_cast<std::uint8_t>(start);
        rec(rec, 1);
    }
    return out;
}

class RowSolver {
public:
    RowSolver(const PuzzleGrid& grid, const RuleSet& rules, const SolveOptions& options)
        : grid_(grid), rules_(rules), options_(options), c_(grid.crossings()), rows_(grid.rows()), w_(grid.cols()) {
        walks_ = closed_walks(c_, k_);
        std::map<std::vector<std::uint8_t>, int> index;
        for (int x = 0; x < k_; ++x) index[walk(x)] = x;
        complement_.resize(static_cast<std::size_t>(k_));
        alternation_.resize(static_cast<std::size_t>(k_));
        for (int x = 0; x < k_; ++x) {
            auto comp = walk(x);
            for (auto& v : comp) v = static_cast<std::uint8_t>(c_ - v);
            complement_[x] = index.at(comp);
            LabeledSequence seq;
            for (int j = 0; j < w_; ++j) seq.push_back(Cell{value(x, j), false});
            alternation_[x] = alternation(seq);
        }
        for (int n = 0; n <= c_; ++n) quota_.push_back(binomial(c_, n));
        count_.assign(static_cast<std::size_t>(w_) * (c_ + 1), 0);
        assigned_.assign(static_cast<std::size_t>(rows_), -1);
        used_.assign(static_cast<std::size_t>(k_), 0);
    }

    SolveResult run() {
        std::vector<std::vector<int>> domains(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r) {
            for (int x = 0; x < k_; ++x) {
                bool fits = true;
                for (int j = 0; j < w_ && fits; ++j) {
                    fits = grid_.empty(r, j) || grid_.at(r, j) == value(x, j);
                }
                if (fits) domains[r].push_back(x);
            }
        }
        search(domains);
        result_.exhausted = !aborted_ && result_.solutions.size() < options_.limit;
        return std::move(result_);
    }

private:
    int value(int x, int j) const { return walks_[static_cast<std::size_t>(x) * w_ + j]; }
    std::vector<std::uint8_t> walk(int x) const {
        auto first = walks_.begin() + static_cast<std::ptrdiff_t>(x) * w_;
        return {first, first + w_};
    }
    int& count(int j, int n) { return count_[static_cast<std::size_t>(j) * (c_ + 1) + n]; }

    bool live(int x) {
        if (rules_.contains(Rule::ColumnCounts)) {
            for (int j = 0; j < w_; ++j) {
                const int n = value(x, j);
                if (count(j, n) >= quota_[n]) return false;
            }
        }
        if (rules_.contains(Rule::ComplementPairs) && used_[x] > 0) return false;
        if (rules_.contains(Rule::Alternating) && alternation_[x] != 0) {
            if (alternation_[x] > 0 && up_start_ >= 0) return false;
            if (alternation_[x] < 0 && down_start_ >= 0) return false;
            const int other = alternation_[x] > 0 ? down_start_ : up_start_;
            if (other >= 0 && other + value(x, 0) != c_) return false;
        }
        if (options_.rows_ascending && x < floor_) return false;
        return true;
    }

    void assign(int r, int x, int sign) {
        for (int j = 0; j < w_; ++j) count(j, value(x, j)) += sign;
        used_[x] += sign;
        assigned_[r] = sign > 0 ? x : -1;
        if (alternation_[x] > 0) up_start_ = sign > 0 ? value(x, 0) : -1;
        if (alternation_[x] < 0) down_start_ = sign > 0 ? value(x, 0) : -1;
    }

    bool feasible(const std::vector<std::vector<int>>& live_domains) {
        std::vector<int> open;
        for (int r = 0; r < rows_; ++r) {
            if (assigned_[r] < 0) open.push_back(r);
        }
        if (rules_.contains(Rule::ColumnCounts)) {
            std::vector<int> supply(count_.size(), 0);
            std::vector<char> cover(count_.size());
            for (int r : open) {
                std::fill(cover.begin(), cover.end(), 0);
                for (int x : live_domains[r]) {
                    for (int j = 0; j < w_; ++j) cover[static_cast<std::size_t>(j) * (c_ + 1) + value(x, j)] = 1;
                }
                for (std::size_t i = 0; i < cover.size(); ++i) supply[i] += cover[i];
            }
            for (int j = 0; j < w_; ++j) {
                for (int n = 0; n <= c_; ++n) {
                    if (supply[static_cast<std::size_t>(j) * (c_ + 1) + n] < quota_[n] - count(j, n)) return false;
                }
            }
        }
        const bool pairs = rules_.contains(Rule::ComplementPairs);
        const bool alternating = rules_.contains(Rule::Alternating);
        if (pairs || alternating) {
            std::vector<char> available(static_cast<std::size_t>(k_), 0);
            bool up = up_start_ >= 0;
            bool down = down_start_ >= 0;
            for (int r : open) {
                for (int x : live_domains[r]) {
                    available[x] = 1;
                    up = up || alternation_[x] > 0;
                    down = down || alternation_[x] < 0;
                }
            }
            if (alternating && (!up || !down)) return false;
            if (pairs) {
                for (int r = 0; r < rows_; ++r) {
                    const int x = assigned_[r];
                    if (x >= 0 && used_[complement_[x]] == 0 && !available[complement_[x]]) return false;
                }
                if (!distinct_rows_possible(open, live_domains)) return false;
            }
        }
        return true;
    }

    // Open rows need pairwise distinct unused walks, and every complement
    // still owed by an assigned row has to land in one of them.
    bool distinct_rows_possible(const std::vector<int>& open, const std::vector<std::vector<int>>& live_domains) {
        std::vector<int> row_of(static_cast<std::size_t>(k_), -1);
        std::vector<int> walk_of(static_cast<std::size_t>(rows_), -1);
        std::vector<char> seen;
        std::function<bool(int)> from_row = [&](int r) {
            for (int x : live_domains[r]) {
                if (seen[x]) continue;
                seen[x] = 1;
                if (row_of[x] < 0 || from_row(row_of[x])) {
                    row_of[x] = r;
                    walk_of[r] = x;
                    return true;
                }
            }
            return false;
        };
        // owed walk first: try every open row that can hold it
        std::function<bool(int)> from_walk = [&](int x) {
            for (int r : open) {
                if (walk_of[r] == x) continue;
                if (std::find(live_domains[r].begin(), live_domains[r].end(), x) == live_domains[r].end()) continue;
                if (walk_of[r] < 0) {
                    walk_of[r] = x;
                    row_of[x] = r;
                    return true;
                }
            }
            for (int r : open) {
                if (std::find(live_domains[r].begin(), live_domains[r].end(), x) == live_domains[r].end()) continue;
                const int displaced = walk_of[r];
                if (displaced < 0 || seen[displaced]) continue;
                seen[displaced] = 1;
                walk_of[r] = x;
                row_of[x] = r;
                row_of[displaced] = -1;
                if (from_walk(displaced)) return true;
                walk_of[r] = displaced;
                row_of[displaced] = r;
                row_of[x] = -1;
            }
            return false;
        };
        std::vector<char> owed(static_cast<std::size_t>(k_), 0);
        for (int r = 0; r < rows_; ++r) {
            const int x = assigned_[r];
            if (x >= 0 && used_[complement_[x]] == 0) owed[complement_[x]] = 1;
        }
        for (int x = 0; x < k_; ++x) {
            if (!owed[x]) continue;
            seen.assign(static_cast<std::size_t>(k_), 0);
            seen[x] = 1;
            if (!from_walk(x)) return false;
        }
        for (int r : open) {
            if (walk_of[r] >= 0) continue;
            seen.assign(static_cast<std::size_t>(k_), 0);
            if (!from_row(r)) return false;
        }
        return true;
    }

    void record() {
        std::vector<int> cells;
        cells.reserve(static_cast<std::size_t>(rows_) * w_);
        for (int r = 0; r < rows_; ++r) {
            for (int j = 0; j < w_; ++j) cells.push_back(value(assigned_[r], j));
        }
        PuzzleGrid done(c_, std::move(cells));
        if (validate(done, rules_).empty()) result_.solutions.push_back(std::move(done));
    }

    void search(const std::vector<std::vector<int>>& domains) {
        if (stop()) return;
        ++result_.nodes;
        if (options_.max_nodes && result_.nodes > options_.max_nodes) {
            aborted_ = true;
            return;
        }
        std::vector<std::vector<int>> next(static_cast<std::size_t>(rows_));
        int pick = -1;
        for (int r = 0; r < rows_; ++r) {
            if (assigned_[r] >= 0) continue;
            for (int x : domains[r]) {
                if (live(x)) next[r].push_back(x);
            }
            if (next[r].empty()) return;
            if (options_.rows_ascending) {
                if (pick < 0) pick = r;
            } else if (pick < 0 || next[r].size() < next[pick].size()) {
                pick = r;
            }
        }
        if (pick < 0) {
            record();
            return;
        }
        if (!feasible(next)) return;

        const auto choices = next[pick];
        const int saved_floor = floor_;
        const bool pair_up = rules_.contains(Rule::ComplementPairs) && !options_.rows_ascending;
        for (int x : choices) {
            if (!live(x)) continue;
            assign(pick, x, +1);
            if (options_.rows_ascending) floor_ = x;
            if (pair_up && used_[complement_[x]] == 0) {
                place_complement(pick, complement_[x], next);
            } else {
                search(next);
            }
            if (options_.rows_ascending) floor_ = saved_floor;
            assign(pick, x, -1);
            if (stop()) return;
        }
    }

    // Puts the complement of the row just assigned into each open row that
    // can take it, so rows always enter the search in complementary pairs.
    void place_complement(int pick, int y, const std::vector<std::vector<int>>& next) {
        if (!live(y)) return;
        for (int r = 0; r < rows_; ++r) {
            if (r == pick || assigned_[r] >= 0) continue;
            if (!std::binary_search(next[r].begin(), next[r].end(), y)) continue;
            assign(r, y, +1);
            search(next);
            assign(r, y, -1);
            if (stop()) return;
        }
    }

    bool stop() const { return aborted_ || result_.solutions.size() >= options_.limit; }

    const PuzzleGrid& grid_;
    RuleSet rules_;
    SolveOptions options_;
    int c_;
    int rows_;
    int w_;
    int k_ = 0;
    std::vector<std::uint8_t> walks_;
    std::vector<int> complement_;
    std::vector<int> alternation_;
    std::vector<std::int64_t> quota_;
    std::vector<int> count_;
    std::vector<int> assigned_;
    std::vector<int> used_;
    int up_start_ = -1;
    int down_start_ = -1;
    int floor_ = 0;
    bool aborted_ = false;
    SolveResult result_;
};

}  // namespace

SolveResult solve_detailed(const PuzzleGrid& g, const RuleSet& rules, const SolveOptions& options) {
    if (options.limit == 0) return SolveResult{{}, false, 0};
    return RowSolver(g, rules, options).run();
}

std::vector<PuzzleGrid> solve(const PuzzleGrid& g, const RuleSet& rules, std::size_t limit) {
    SolveOptions options;
    options.limit = limit;
    return solve_detailed(g, rules, options).solutions;
}

// ------------------------------------------------------------------ generate

GeneratedPuzzle generate(const OrientedKnotDiagram& reference, const RuleSet& rules, std::uint64_t seed,
                         int target_clues) {
    const int c = reference.crossings();
    if (c < 1 || c > kMaxGeneratorCrossings) {
        throw Error("puzzle generation supports 1 <= c <= " + std::to_string(kMaxGeneratorCrossings));
    }
    GeneratedPuzzle out;
    out.solution = PuzzleGrid::from_matrix(build_projection_matrix(reference));
    out.clues = out.solution;
    if (const auto broken = validate(out.solution, rules); !broken.empty()) {
        throw Error("the matrix of this projection breaks rule (" + rule_name(broken.front().rule) +
                    ")");
    }

    std::vector<int> order(static_cast<std::size_t>(out.clues.size()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    SolveOptions options;
    options.limit = 2;
    options.max_nodes = 2'000'000;
    const int w = out.clues.cols();
    for (int cell : order) {
        if (out.clues.filled() <= target_clues) break;
        const int r = cell / w;
        const int j = cell % w;
        const int digit = out.clues.at(r, j);
        out.clues.clear(r, j);
        const auto result = solve_detailed(out.clues, rules, options);
        if (!result.exhausted || result.solutions.size() != 1) out.clues.set(r, j, digit);
    }
    if (out.clues.filled() > target_clues) {
        out.notice = "could not reach " + std::to_string(target_clues) + " clues; stopped at " +
                     std::to_string(out.clues.filled()) + " with a unique solution";
    }
    return out;
}

// ----------------------------------------------------------------- enumerate

Enumeration enumerate_matrices(int c, const RuleSet& rules, bool allow_reflection) {
    if (c < 1 || c > 3) throw Error("matrix enumeration supports 1 <= c <= 3");
    SolveOptions options;
    options.limit = static_cast<std::size_t>(-1);
    options.rows_ascending = true;
    const auto result = solve_detailed(PuzzleGrid(c), rules, options);

    std::set<std::vector<LabeledSequence>> seen;
    Enumeration out;
    out.completions = result.solutions.size();
    for (const auto& g : result.solutions) {
        auto canon = canonical_form(g.to_matrix(), allow_reflection);
        if (seen.insert(canon.rows()).second) out.classes.push_back(std::move(canon));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const WarpingMatrix& a, const WarpingMatrix& b) { return a.rows() < b.rows(); });
    return out;
}

// ---------------------------------------------------------------------- hint

std::optional<std::pair<int, int>> most_constrained_empty_cell(const PuzzleGrid& g) {
    const int c = g.crossings();
    const int w = g.cols();
    std::optional<std::pair<int, int>> best;
    int best_options = c + 2;
    for (int r = 0; r < g.rows(); ++r) {
        for (int j = 0; j < w; ++j) {
            if (!g.empty(r, j)) continue;
            int options = 0;
            for (int d = 0; d <= c; ++d) {
                bool ok = true;
                for (int nb : {(j + w - 1) % w, (j + 1) % w}) {
                    if (nb != j && !g.empty(r, nb) && std::abs(g.at(r, nb) - d) != 1) ok = false;
                }
                if (ok) {
                    std::int64_t used = 0;
                    for (int q = 0; q < g.rows(); ++q) used += (g.at(q, j) == d);
                    ok = used < binomial(c, d);
                }
                options += ok;
            }
            if (options < best_options) {
                best_options = options;
                best = std::make_pair(r, j);
            }
        }
    }
    return best;
}

}  // namespace warpmat
