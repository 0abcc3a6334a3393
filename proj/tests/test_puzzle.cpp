#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "warpmat/canonical.hpp"
#include "warpmat/puzzle.hpp"
#include "warpmat/puzzle_io.hpp"

using namespace warpmat;
using namespace warpmat::testing;

namespace {

bool has_rule(const std::vector<Violation>& vs, Rule r) {
    return std::any_of(vs.begin(), vs.end(), [r](const Violation& v) { return v.rule == r; });
}

PuzzleGrid trefoil_grid() { return PuzzleGrid::from_matrix(matrix(kTrefoilMatrix)); }

}  // namespace

TEST(RuleSetParse, NamesAndErrors) {
    EXPECT_EQ(RuleSet::parse("i,ii"), RuleSet{});
    EXPECT_EQ(RuleSet::parse("all"), RuleSet::all());
    EXPECT_EQ(RuleSet::parse("iv,i,iii,ii"), RuleSet::all());
    EXPECT_EQ(RuleSet::all().to_string(), "i,ii,iii,iv");
    EXPECT_THROW(RuleSet::parse("ii"), Error);
    EXPECT_THROW(RuleSet::parse("i,v"), Error);
}

TEST(Grid, ShapeAndDigits) {
    PuzzleGrid g(2);
    EXPECT_EQ(g.rows(), 4);
    EXPECT_EQ(g.cols(), 4);
    EXPECT_EQ(g.filled(), 0);
    g.set(0, 0, 2);
    EXPECT_EQ(g.at(0, 0), 2);
    EXPECT_THROW(g.set(0, 1, 3), Error);
    EXPECT_THROW(g.to_matrix(), Error);
    EXPECT_THROW(PuzzleGrid(kMaxPuzzleCrossings + 1), Error);
    EXPECT_EQ(trefoil_grid().to_matrix(), matrix(kTrefoilMatrix));
}

TEST(Validate, PublishedMatricesPassAllRules) {
    for (auto text : {kCurlMatrix, kTwistMatrix, kTrefoilMatrix, kSecondC3Matrix, kThirdC3Matrix}) {
        EXPECT_TRUE(validate(PuzzleGrid::from_matrix(matrix(text)), RuleSet::all()).empty()) << text;
    }
}

TEST(Validate, NonUnitStepIsFlaggedWithBothCells) {
    PuzzleGrid g(3);
    g.set(0, 0, 0);
    g.set(0, 1, 2);
    const auto vs = validate(g, RuleSet{});
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].rule, Rule::StepLaw);
    EXPECT_EQ(vs[0].cells, (std::vector<std::pair<int, int>>{{0, 0}, {0, 1}}));
}

TEST(Validate, StepWrapsAroundTheRow) {
    PuzzleGrid g(2);
    g.set(1, 0, 1);
    g.set(1, 3, 1);
    EXPECT_TRUE(has_rule(validate(g, RuleSet{}), Rule::StepLaw));
}

TEST(Validate, ColumnOverQuota) {
    PuzzleGrid g(2);
    g.set(0, 1, 0);
    g.set(2, 1, 0);  // C(2,0) = 1
    const auto vs = validate(g, RuleSet{});
    ASSERT_TRUE(has_rule(vs, Rule::ColumnCounts));
    EXPECT_EQ(vs[0].column, 1);
    EXPECT_EQ(vs[0].value, 0);
}

TEST(Validate, ComplementAndAlternationOnlyWhenSelected) {
    // row 7 overwritten with a copy of row 0
    auto g = trefoil_grid();
    for (int j = 0; j < g.cols(); ++j) g.set(7, j, g.at(0, j));
    EXPECT_FALSE(has_rule(validate(g, RuleSet{}), Rule::ComplementPairs));
    EXPECT_TRUE(has_rule(validate(g, RuleSet::all()), Rule::ComplementPairs));
}

TEST(Validate, SecondAlternatingRowOfSameDirection) {
    PuzzleGrid g(3);
    const int a[] = {1, 2, 1, 2, 1, 2};
    const int b[] = {2, 3, 2, 3, 2, 3};
    for (int j = 0; j < 6; ++j) {
        g.set(0, j, a[j]);
        g.set(1, j, b[j]);
    }
    EXPECT_TRUE(has_rule(validate(g, RuleSet::all()), Rule::Alternating));
    EXPECT_FALSE(has_rule(validate(g, RuleSet{}), Rule::Alternating));
}

TEST(Validate, PublishedGridsHaveNoViolations) {
    for (auto name : {"trefoil", "figure8"}) {
        EXPECT_TRUE(validate(find_preset(name)->published_grid, RuleSet::all()).empty()) << name;
    }
}

TEST(Solve, FullValidGridIsItsOwnSolution) {
    const auto g = trefoil_grid();
    const auto s = solve(g, RuleSet::all(), 2);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], g);
}

TEST(Solve, ContradictionHasNoSolution) {
    PuzzleGrid g(2);
    g.set(0, 0, 0);
    g.set(1, 0, 0);
    EXPECT_TRUE(solve(g, RuleSet{}, 1).empty());
    const auto r = solve_detailed(g, RuleSet{}, {});
    EXPECT_TRUE(r.exhausted);
}

TEST(Solve, SolutionsKeepCluesAndPassValidation) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const int c = random_crossings(rng, 1, 4);
        auto g = PuzzleGrid::from_matrix(build_projection_matrix(random_planar_diagram(rng, c)));
        std::bernoulli_distribution keep(0.35);
        for (int r = 0; r < g.rows(); ++r) {
            for (int j = 0; j < g.cols(); ++j) {
                if (!keep(rng)) g.clear(r, j);
            }
        }
        for (const auto& rules : {RuleSet{}, RuleSet::all()}) {
            const auto solutions = solve(g, rules, 5);
            ASSERT_FALSE(solutions.empty());
            std::set<std::vector<int>> distinct;
            for (const auto& s : solutions) {
                EXPECT_TRUE(s.full());
                EXPECT_TRUE(validate(s, rules).empty());
                for (int i = 0; i < g.size(); ++i) {
                    if (g.cells()[i] != PuzzleGrid::kEmpty) EXPECT_EQ(s.cells()[i], g.cells()[i]);
                }
                distinct.insert(s.cells());
            }
            EXPECT_EQ(distinct.size(), solutions.size());
        }
    }
}

TEST(Solve, PublishedTrefoilIsUniqueAndMatchesTheProjection) {
    const auto preset = find_preset("trefoil");
    const auto s = solve(preset->published_grid, RuleSet{}, 2);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_TRUE(equivalent(s[0].to_matrix(), build_projection_matrix(preset->reference)));
    EXPECT_TRUE(validate(s[0], RuleSet::all()).empty());
}

TEST(Solve, PublishedFigureEightIsUniqueAndMatchesTheProjection) {
    const auto preset = find_preset("figure8");
    const auto s = solve(preset->published_grid, RuleSet{}, 2);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_TRUE(equivalent(s[0].to_matrix(), build_projection_matrix(preset->reference)));
    EXPECT_TRUE(validate(s[0], RuleSet::all()).empty());
}

TEST(Generate, UniqueAcrossSeeds) {
    const auto trefoil = parse_gauss_code(kTrefoilCode);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        for (const auto& rules : {RuleSet{}, RuleSet::all()}) {
            const auto p = generate(trefoil, rules, seed, 0);
            EXPECT_EQ(p.solution, PuzzleGrid::from_matrix(build_projection_matrix(trefoil)));
            const auto s = solve(p.clues, rules, 2);
            ASSERT_EQ(s.size(), 1u);
            EXPECT_EQ(s[0], p.solution);
            EXPECT_LT(p.clues.filled(), p.clues.size());
        }
    }
}

TEST(Generate, DeterministicForSeed) {
    const auto d = parse_gauss_code("O1+U2+O3+U1+O4+U3+O2+U4+");
    EXPECT_EQ(generate(d, RuleSet{}, 7, 0).clues, generate(d, RuleSet{}, 7, 0).clues);
}

TEST(Generate, TargetAtFullSizeKeepsEverything) {
    const auto d = parse_gauss_code(kTrefoilCode);
    const auto p = generate(d, RuleSet{}, 3, 48);
    EXPECT_TRUE(p.clues.full());
    EXPECT_TRUE(p.notice.empty());
}

TEST(Generate, UnreachableTargetSetsNotice) {
    const auto p = generate(parse_gauss_code(kTrefoilCode), RuleSet{}, 3, 1);
    EXPECT_GT(p.clues.filled(), 1);
    EXPECT_FALSE(p.notice.empty());
}

TEST(Generate, RejectsLargeKnots) {
    std::mt19937_64 rng(52);
    EXPECT_THROW(generate(random_diagram(rng, kMaxGeneratorCrossings + 1), RuleSet{}, 0, 0), Error);
}

TEST(Generate, RejectsProjectionBreakingTheRules) {
    const auto virtual_word = parse_gauss_code("O1+U2+U1+O2+");
    EXPECT_THROW(generate(virtual_word, RuleSet::all(), 0, 0), Error);
    EXPECT_NO_THROW(generate(virtual_word, RuleSet{}, 0, 0));
}

TEST(Enumerate, ClassCountsForSmallC) {
    EXPECT_EQ(enumerate_matrices(1).classes.size(), 1u);
    EXPECT_EQ(enumerate_matrices(2).classes.size(), 1u);
    const auto e3 = enumerate_matrices(3);
    ASSERT_EQ(e3.classes.size(), 3u);
    std::set<std::string> expected;
    for (auto text : {kTrefoilMatrix, kSecondC3Matrix, kThirdC3Matrix}) {
        expected.insert(format_matrix_text(canonical_form(matrix(text), true)));
    }
    std::set<std::string> found;
    for (const auto& m : e3.classes) found.insert(format_matrix_text(m));
    EXPECT_EQ(found, expected);
    EXPECT_EQ(enumerate_matrices(1).classes[0], canonical_form(matrix(kCurlMatrix), true));
    EXPECT_EQ(enumerate_matrices(2).classes[0], canonical_form(matrix(kTwistMatrix), true));
    EXPECT_THROW(enumerate_matrices(4), Error);
}

TEST(Hint, MostConstrainedCell) {
    PuzzleGrid g(1);
    EXPECT_TRUE(most_constrained_empty_cell(g).has_value());
    auto full = trefoil_grid();
    EXPECT_FALSE(most_constrained_empty_cell(full).has_value());
    full.clear(4, 2);
    EXPECT_EQ(most_constrained_empty_cell(full), (std::pair<int, int>{4, 2}));
}
