#include "warpmat/canonical.hpp"

#include <algorithm>

namespace warpmat {

namespace {

std::vector<LabeledSequence> transformed_rows(const std::vector<LabeledSequence>& rows, int width, int shift,
                                              bool reverse) {
    std::vector<LabeledSequence> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        LabeledSequence t(static_cast<std::size_t>(width));
        for (int j = 0; j < width; ++j) {
            const int src = reverse ? (width - 1 - j + shift) % width : (j + shift) % width;
            t[j] = r[src];
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

WarpingMatrix transform_columns(const WarpingMatrix& m, int shift, bool reverse) {
    const int w = m.columns();
    shift = ((shift % w) + w) % w;
    return WarpingMatrix(m.crossings(), m.kind(), transformed_rows(m.rows(), w, shift, reverse));
}

WarpingMatrix canonical_form(const WarpingMatrix& m, bool allow_reflection) {
    const int w = m.columns();
    std::vector<LabeledSequence> best;
    for (int reverse = 0; reverse <= (allow_reflection ? 1 : 0); ++reverse) {
        for (int shift = 0; shift < w; ++shift) {
            auto rows = transformed_rows(m.rows(), w, shift, reverse != 0);
            std::sort(rows.begin(), rows.end());
            if (best.empty() || rows < best) best = std::move(rows);
        }
    }
    return WarpingMatrix(m.crossings(), m.kind(), std::move(best));
}

bool equivalent(const WarpingMatrix& a, const WarpingMatrix& b, bool allow_reflection) {
    if (a.crossings() != b.crossings() || a.row_count() != b.row_count()) return false;
    return canonical_form(a, allow_reflection).rows() == canonical_form(b, allow_reflection).rows();
}

}  // namespace warpmat
