#include "warpmat/matrix.hpp"

#include <algorithm>

namespace warpmat {

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Projection: return "projection";
        case MatrixKind::SignedProjection: return "signed-projection";
        case MatrixKind::Diagram: return "diagram";
    }
    return "projection";
}

MatrixKind matrix_kind_from_string(const std::string& name) {
    if (name == "projection") return MatrixKind::Projection;
    if (name == "signed-projection") return MatrixKind::SignedProjection;
    if (name == "diagram") return MatrixKind::Diagram;
    throw ParseError("unknown matrix kind \"" + name + "\"");
}

std::int64_t expected_rows(int c, MatrixKind kind) {
    const std::int64_t full = std::int64_t{1} << c;
    return kind == MatrixKind::Diagram ? full - 1 : full;
}

WarpingMatrix::WarpingMatrix(int c, MatrixKind kind, std::vector<LabeledSequence> rows)
    : c_(c), kind_(kind), rows_(std::move(rows)) {
    if (c_ < 1 || c_ > kMaxMatrixCrossings) {
        throw Error("warping matrix needs 1 <= c <= " + std::to_string(kMaxMatrixCrossings) + ", got " +
                    std::to_string(c_));
    }
    if (static_cast<std::int64_t>(rows_.size()) != expected_rows(c_, kind_)) {
        throw Error(to_string(kind_) + " matrix with c=" + std::to_string(c_) + " needs " +
                    std::to_string(expected_rows(c_, kind_)) + " rows, got " + std::to_string(rows_.size()));
    }
    for (const auto& r : rows_) {
        if (static_cast<int>(r.size()) != columns()) {
            throw Error("matrix row has " + std::to_string(r.size()) + " cells, expected " +
                        std::to_string(columns()));
        }
    }
}

WarpingMatrix WarpingMatrix::unsigned_copy() const {
    auto rows = rows_;
    for (auto& r : rows) {
        for (auto& cell : r) cell.bar = false;
    }
    const auto kind = kind_ == MatrixKind::Diagram ? MatrixKind::Diagram : MatrixKind::Projection;
    return WarpingMatrix(c_, kind, std::move(rows));
}

std::vector<int> DifferenceMatrix::column(int j) const {
    std::vector<int> col(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) col[i] = at(i, j);
    return col;
}

namespace {

template <typename Labeler>
std::vector<LabeledSequence> rows_over_assignments(const OrientedKnotDiagram& reference, Labeler&& label) {
    const int c = reference.crossings();
    if (c == 0) throw Error("crossingless diagram has no warping matrix");
    if (c > kMaxMatrixCrossings) {
        throw Error("too many crossings for a warping matrix: " + std::to_string(c));
    }
    const auto projection = underlying_projection(reference);
    const CrossingMask count = CrossingMask{1} << c;
    std::vector<LabeledSequence> rows;
    rows.reserve(count);
    for (CrossingMask mask = 0; mask < count; ++mask) {
        rows.push_back(label(apply_assignment(projection, reference, mask)));
    }
    return rows;
}

}  // namespace

WarpingMatrix build_projection_matrix(const OrientedKnotDiagram& reference) {
    auto rows = rows_over_assignments(reference, [](const auto& d) { return warping_labels(d); });
    return WarpingMatrix(reference.crossings(), MatrixKind::Projection, std::move(rows));
}

WarpingMatrix build_signed_matrix(const OrientedKnotDiagram& reference) {
    auto rows = rows_over_assignments(reference, [](const auto& d) { return signed_labels(d); });
    return WarpingMatrix(reference.crossings(), MatrixKind::SignedProjection, std::move(rows));
}

WarpingMatrix build_diagram_matrix(const OrientedKnotDiagram& d) {
    auto rows = rows_over_assignments(d, [](const auto& x) { return signed_labels(x); });
    const auto own = signed_labels(d);
    const auto it = std::find(rows.begin(), rows.end(), own);
    if (it == rows.end()) throw Error("internal: diagram row missing from its signed matrix");
    rows.erase(it);
    return WarpingMatrix(d.crossings(), MatrixKind::Diagram, std::move(rows));
}

DifferenceMatrix difference_transform(const WarpingMatrix& m) {
    DifferenceMatrix u;
    u.rows = m.row_count();
    u.cols = m.columns();
    u.entries.resize(static_cast<std::size_t>(u.rows) * u.cols);
    for (int i = 0; i < u.rows; ++i) {
        const auto& r = m.row(i);
        for (int j = 0; j < u.cols; ++j) {
            const int step = r[(j + 1) % u.cols].value - r[j].value;
            if (step != 1 && step != -1) {
                throw Error("not a warping matrix: step " + std::to_string(step) + " between columns " +
                            std::to_string(j + 1) + " and " + std::to_string((j + 1) % u.cols + 1) + " of row " +
                            std::to_string(i + 1));
            }
            u.entries[static_cast<std::size_t>(i) * u.cols + j] = static_cast<std::int8_t>(step);
        }
    }
    return u;
}

}  // namespace warpmat
