#include "warpmat/puzzle_io.hpp"

#include <sstream>

namespace warpmat {

std::string format_grid_text(const PuzzleGrid& g) {
    std::string out;
    for (int r = 0; r < g.rows(); ++r) {
        for (int j = 0; j < g.cols(); ++j) {
            if (j) out += ' ';
            out += g.empty(r, j) ? std::string(".") : std::to_string(g.at(r, j));
        }
        out += '\n';
    }
    return out;
}

PuzzleGrid parse_grid_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<int> cells;
    std::size_t width = 0;
    int rows = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        std::size_t n = 0;
        while (tokens >> tok) {
            if (tok == ".") {
                cells.push_back(PuzzleGrid::kEmpty);
            } else {
                if (tok.size() > 2 || tok.find_first_not_of("0123456789") != std::string::npos) {
                    throw ParseError("grid line " + std::to_string(line_no) + ": bad token \"" + tok + "\"");
                }
                cells.push_back(std::stoi(tok));
            }
            ++n;
        }
        if (n == 0) continue;
        if (width == 0) width = n;
        if (n != width) throw ParseError("grid line " + std::to_string(line_no) + ": ragged row");
        ++rows;
    }
    if (rows == 0 || width % 2 != 0) throw ParseError("grid needs rows of 2c tokens");
    const int c = static_cast<int>(width / 2);
    if (c > kMaxPuzzleCrossings || rows != (1 << c)) {
        throw ParseError("grid with " + std::to_string(width) + " columns needs 2^" + std::to_string(c) + " rows, got " +
                         std::to_string(rows));
    }
    try {
        return PuzzleGrid(c, std::move(cells));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json to_json(const PuzzleGrid& g) {
    auto rows = nlohmann::json::array();
    for (int r = 0; r < g.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < g.cols(); ++j) {
            if (g.empty(r, j)) {
                row.push_back(nullptr);
            } else {
                row.push_back(g.at(r, j));
            }
        }
        rows.push_back(std::move(row));
    }
    return {{"c", g.crossings()}, {"cells", rows}};
}

PuzzleGrid grid_from_json(const nlohmann::json& j) {
    try {
        const int c = j.at("c").get<int>();
        if (c < 1 || c > kMaxPuzzleCrossings) throw ParseError("grid json: c out of range");
        const auto& rows = j.at("cells");
        if (!rows.is_array() || static_cast<int>(rows.size()) != (1 << c)) {
            throw ParseError("grid json: cells must have 2^c rows");
        }
        std::vector<int> cells;
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != 2 * c) {
                throw ParseError("grid json: each row must have 2c cells");
            }
            for (const auto& cell : row) cells.push_back(cell.is_null() ? PuzzleGrid::kEmpty : cell.get<int>());
        }
        return PuzzleGrid(c, std::move(cells));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("grid json: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("grid json: ") + e.what());
    }
}

nlohmann::json to_json(const Violation& v) {
    nlohmann::json j{{"rule", rule_name(v.rule)}, {"message", v.message}};
    auto cells = nlohmann::json::array();
    for (auto [r, c] : v.cells) cells.push_back({{"row", r}, {"col", c}});
    j["cells"] = cells;
    j["rows"] = v.rows;
    j["column"] = v.column ? nlohmann::json(*v.column) : nlohmann::json(nullptr);
    j["value"] = v.value ? nlohmann::json(*v.value) : nlohmann::json(nullptr);
    return j;
}

namespace {

// Clue grids printed with the warping matrix puzzle, transcribed cell for cell.
constexpr std::string_view kTrefoilGrid =
    ". . . . 3 .\n"
    ". . 3 . . .\n"
    ". . 2 . 0 .\n"
    "3 . . 0 . .\n"
    ". 1 . 1 . 1\n"
    ". 2 . 2 . 2\n"
    "0 . . 3 . .\n"
    ". . 0 . . .\n";

constexpr std::string_view kFigureEightGrid =
    "2 . . . . 3 . .\n"
    ". 4 . . . 0 . .\n"
    "1 . 3 . 1 . . .\n"
    ". . . 0 . . . .\n"
    "4 . . . 2 . . .\n"
    "1 . . . . 4 . .\n"
    ". . . 1 . . 4 .\n"
    ". . . . . . 1 .\n"
    ". . 0 . . 3 . 3\n"
    "1 2 . . 1 . 1 .\n"
    ". . . 3 2 3 . .\n"
    ". . 3 2 . . . 2\n"
    ". 3 . 3 . . . .\n"
    ". 3 . . . . . 3\n"
    ". . 3 . . . . 0\n"
    ". . 4 . . . 2 .\n";

}  // namespace

std::optional<Preset> find_preset(std::string_view name) {
    if (name == "trefoil") {
        return Preset{"trefoil", parse_gauss_code("O1+U2+O3+U1+O2+U3+"), parse_grid_text(kTrefoilGrid)};
    }
    if (name == "figure8" || name == "figure-eight") {
        // standard alternating projection, DT code 4 6 8 2
        return Preset{"figure8", parse_gauss_code("O1+U2+O3+U1+O4+U3+O2+U4+"), parse_grid_text(kFigureEightGrid)};
    }
    return std::nullopt;
}

}  // namespace warpmat
