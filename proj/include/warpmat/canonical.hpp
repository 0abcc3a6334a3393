#pragma once

#include "warpmat/matrix.hpp"

namespace warpmat {

/// Lexicographically smallest row-sorted matrix over all cyclic column
/// shifts and, with `allow_reflection`, column reversals. Cells order by
/// (value, bar) with unbarred first.
WarpingMatrix canonical_form(const WarpingMatrix& m, bool allow_reflection = false);

/// Same orbit under row swaps and cyclic column shifts (plus reversal).
bool equivalent(const WarpingMatrix& a, const WarpingMatrix& b, bool allow_reflection = false);

/// Applies a column rotation (column j moves to j - shift) and optional
/// reversal to every row. Row order is left untouched.
WarpingMatrix transform_columns(const WarpingMatrix& m, int shift, bool reverse);

}  // namespace warpmat
