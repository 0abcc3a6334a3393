#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "warpmat/knot.hpp"

namespace warpmat {

enum class MatrixKind : std::uint8_t {
    Projection,        // M(P): 2^c unsigned rows
    SignedProjection,  // m(P): 2^c signed rows
    Diagram,           // M(D): m(P) without the row of D, 2^c - 1 rows
};

std::string to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& name);

/// Warping degree sequences of a projection's diagrams, one per row, all
/// read from the same edge. Rows are compared as multisets up to column
/// rotation (see canonical.hpp); storage order carries no meaning.
class WarpingMatrix {
public:
    WarpingMatrix() = default;
    /// Checks shape only (row count for `kind`, row length 2c).
    WarpingMatrix(int c, MatrixKind kind, std::vector<LabeledSequence> rows);

    int crossings() const noexcept { return c_; }
    int columns() const noexcept { return 2 * c_; }
    int row_count() const noexcept { return static_cast<int>(rows_.size()); }
    MatrixKind kind() const noexcept { return kind_; }
    const std::vector<LabeledSequence>& rows() const noexcept { return rows_; }
    const LabeledSequence& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
    const Cell& at(int i, int j) const { return row(i).at(static_cast<std::size_t>(j)); }

    /// Same rows with bars cleared; kind becomes Projection for full shapes.
    WarpingMatrix unsigned_copy() const;

    friend bool operator==(const WarpingMatrix&, const WarpingMatrix&) = default;

private:
    int c_ = 0;
    MatrixKind kind_ = MatrixKind::Projection;
    std::vector<LabeledSequence> rows_;
};

/// Expected row count for a matrix of `kind` with c crossings.
std::int64_t expected_rows(int c, MatrixKind kind);

/// Over/under pattern of each row: entry (i, j) = row_i[j+1] - row_i[j],
/// cyclically; +1 means visit j is an overpass, -1 an underpass.
struct DifferenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int8_t> entries;  // row-major

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
    std::vector<int> column(int j) const;

    friend bool operator==(const DifferenceMatrix&, const DifferenceMatrix&) = default;
};

WarpingMatrix build_projection_matrix(const OrientedKnotDiagram& reference);
WarpingMatrix build_signed_matrix(const OrientedKnotDiagram& reference);
WarpingMatrix build_diagram_matrix(const OrientedKnotDiagram& d);

/// U = M A with A the cyclic difference operator; throws Error if an entry
/// is not +1/-1.
DifferenceMatrix difference_transform(const WarpingMatrix& m);

}  // namespace warpmat
