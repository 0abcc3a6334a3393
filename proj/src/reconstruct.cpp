#include "warpmat/reconstruct.hpp"

#include <map>

#include "warpmat/rules.hpp"

namespace warpmat {

std::vector<std::pair<int, int>> column_pairs(const DifferenceMatrix& u) {
    std::map<std::vector<int>, std::vector<int>> by_column;
    for (int j = 0; j < u.cols; ++j) by_column[u.column(j)].push_back(j);
    for (const auto& [col, js] : by_column) {
        if (js.size() > 1) {
            throw Error("columns " + std::to_string(js[0] + 1) + " and " + std::to_string(js[1] + 1) +
                        " of U are identical; the matrix lacks over/under information");
        }
    }
    std::vector<int> partner(static_cast<std::size_t>(u.cols), -1);
    for (int j = 0; j < u.cols; ++j) {
        auto negated = u.column(j);
        for (auto& x : negated) x = -x;
        const auto it = by_column.find(negated);
        if (it == by_column.end()) {
            throw Error("column " + std::to_string(j + 1) + " of U has no column summing with it to zero");
        }
        // Distinct columns make the partner unique; a self-negating column is impossible (entries are +-1).
        partner[j] = it->second.front();
    }
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < u.cols; ++j) {
        if (partner[partner[j]] != j) throw Error("column matching of U is not an involution");
        if (j < partner[j]) pairs.emplace_back(j, partner[j]);
    }
    return pairs;
}

namespace {

void require_full_shape(const WarpingMatrix& m) {
    if (m.kind() == MatrixKind::Diagram) {
        throw Error("projection reconstruction needs a full 2^c-row matrix; restore the missing row first");
    }
}

}  // namespace

KnotProjection reconstruct_projection(const WarpingMatrix& m) {
    require_full_shape(m);
    const auto plain = m.unsigned_copy();
    const auto u = difference_transform(plain);
    const auto counts = verify_rules(plain).column_counts;
    if (!counts.passed) throw Error("column histograms are not binomial: " + counts.witness);

    const auto pairs = column_pairs(u);
    if (static_cast<int>(pairs.size()) != m.crossings()) {
        throw Error("found " + std::to_string(pairs.size()) + " column pairs, expected " +
                    std::to_string(m.crossings()));
    }
    std::vector<int> word(static_cast<std::size_t>(m.columns()), 0);
    int id = 0;
    for (auto [a, b] : pairs) {
        ++id;
        word[a] = id;
        word[b] = id;
    }
    // pairs are sorted by first column, so ids already follow first appearance
    return KnotProjection(std::move(word));
}

RestoredRow restore_missing_row(const WarpingMatrix& diagram_matrix) {
    if (diagram_matrix.kind() != MatrixKind::Diagram) {
        throw Error("restore_missing_row expects a diagram matrix with 2^c - 1 rows");
    }
    const int c = diagram_matrix.crossings();
    const int w = diagram_matrix.columns();
    const std::int64_t half = std::int64_t{1} << (c - 1);

    RestoredRow out;
    out.row.resize(static_cast<std::size_t>(w));
    for (int j = 0; j < w; ++j) {
        std::vector<std::int64_t> hist(static_cast<std::size_t>(c) + 1, 0);
        std::int64_t bars = 0;
        for (const auto& r : diagram_matrix.rows()) {
            const int value = r[j].value;
            if (value < 0 || value > c) {
                throw Error("column " + std::to_string(j + 1) + " holds value " + std::to_string(value) +
                            " outside 0.." + std::to_string(c));
            }
            ++hist[value];
            if (r[j].bar) ++bars;
        }
        int missing = -1;
        for (int n = 0; n <= c; ++n) {
            const auto deficit = binomial(c, n) - hist[n];
            if (deficit == 0) continue;
            if (deficit != 1 || missing != -1) {
                throw Error("column " + std::to_string(j + 1) +
                            " histogram does not miss exactly one value against C(c,n)");
            }
            missing = n;
        }
        if (missing == -1) throw Error("column " + std::to_string(j + 1) + " is not missing any value");
        out.row[j].value = missing;

        if (c == 1) {
            // 0 bars is consistent with both a barred and an unbarred missing cell
            if (bars == 0) out.bars_determined = false;
            out.row[j].bar = false;
        } else if (bars == half - 1) {
            out.row[j].bar = true;
        } else if (bars != 0 && bars != half) {
            throw Error("column " + std::to_string(j + 1) + " has " + std::to_string(bars) +
                        " bars; expected 0, " + std::to_string(half - 1) + " or " + std::to_string(half));
        }
    }

    auto rows = diagram_matrix.rows();
    rows.push_back(out.row);
    out.completed = WarpingMatrix(c, MatrixKind::SignedProjection, std::move(rows));
    return out;
}

DiagramReconstruction reconstruct_diagram(const WarpingMatrix& diagram_matrix) {
    auto restored = restore_missing_row(diagram_matrix);
    const auto projection = reconstruct_projection(restored.completed);
    const int c = projection.crossings();
    const int w = 2 * c;
    const auto& row = restored.row;

    std::vector<Visit> visits(static_cast<std::size_t>(w));
    std::vector<Sign> signs(static_cast<std::size_t>(c), Sign::Positive);
    for (int j = 0; j < w; ++j) {
        const int step = row[(j + 1) % w].value - row[j].value;
        if (step != 1 && step != -1) throw Error("restored row violates the unit step law");
        visits[j] = Visit{projection.word()[j], step > 0 ? Strand::Over : Strand::Under};
        if (step > 0 && row[(j + 1) % w].bar) signs[visits[j].crossing - 1] = Sign::Negative;
    }
    for (int j = 0; j < w; ++j) {
        // a bar may only follow an overpass
        if (visits[j].strand == Strand::Under && row[(j + 1) % w].bar) {
            throw Error("restored row has a bar after an underpass at column " + std::to_string((j + 1) % w + 1));
        }
    }
    return DiagramReconstruction{OrientedKnotDiagram(std::move(visits), std::move(signs)), restored.bars_determined};
}

}  // namespace warpmat
