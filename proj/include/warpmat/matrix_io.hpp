#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "warpmat/matrix.hpp"

namespace warpmat {

// Text form: one row per line, cells separated by whitespace, a barred cell
// written with a trailing '-' ("2-"). Blank lines are ignored.
std::string format_matrix_text(const WarpingMatrix& m);

/// c is inferred as columns / 2. Without `kind`, 2^c - 1 rows means a
/// diagram matrix, 2^c rows a signed projection matrix if any cell is
/// barred and a projection matrix otherwise.
WarpingMatrix parse_matrix_text(std::string_view text, std::optional<MatrixKind> kind = std::nullopt);

// JSON form: {"c": 3, "kind": "projection", "rows": [[{"v": 0, "bar": false}, ...], ...]}
nlohmann::json to_json(const WarpingMatrix& m);
WarpingMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace warpmat
