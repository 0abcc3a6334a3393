#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "warpmat/knot.hpp"
#include "warpmat/puzzle.hpp"

namespace warpmat {

// Grid text: 2^c lines of 2c tokens, "." for an empty cell.
std::string format_grid_text(const PuzzleGrid& g);
PuzzleGrid parse_grid_text(std::string_view text);

// Grid JSON: {"c": 3, "cells": [[0, null, ...], ...]}
nlohmann::json to_json(const PuzzleGrid& g);
PuzzleGrid grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Violation& v);

/// Named knots available as puzzle sources: "trefoil" and "figure8".
struct Preset {
    std::string name;
    OrientedKnotDiagram reference;  // only the projection matters for puzzles
    PuzzleGrid published_grid;       // the published clue grid for this projection
};

std::optional<Preset> find_preset(std::string_view name);

}  // namespace warpmat
