#pragma once

#include <utility>
#include <vector>

#include "warpmat/knot.hpp"
#include "warpmat/matrix.hpp"

namespace warpmat {

/// Pairs of 0-based columns of U whose sum is the zero vector, ordered by
/// first column. Each pair is one crossing. Throws Error on duplicate
/// columns, an unmatched column, or an ambiguous matching.
std::vector<std::pair<int, int>> column_pairs(const DifferenceMatrix& u);

/// Chord diagram of the projection behind a full (2^c-row) warping matrix,
/// crossing ids in first-appearance order. Bars are ignored.
KnotProjection reconstruct_projection(const WarpingMatrix& m);

struct RestoredRow {
    WarpingMatrix completed;  // m(P), SignedProjection kind
    LabeledSequence row;      // the signed sequence of the deleted diagram
    // False when bar counts cannot decide the missing row's bars. Happens only
    // for c = 1, where a column short of 2^(c-1) - 1 = 0 bars looks the same
    // as a column that never carries bars.
    bool bars_determined = true;
};

/// Recovers the deleted row of M(D) from the column histograms (values) and
/// column bar counts (bars).
RestoredRow restore_missing_row(const WarpingMatrix& diagram_matrix);

struct DiagramReconstruction {
    OrientedKnotDiagram diagram;
    bool sign_determined = true;  // see RestoredRow::bars_determined
};

/// Oriented knot diagram D from its warping matrix M(D). Crossing ids come
/// out in first-appearance order; the start visit is column 1.
DiagramReconstruction reconstruct_diagram(const WarpingMatrix& diagram_matrix);

}  // namespace warpmat
