#include "warpmat/matrix_io.hpp"

#include <charconv>
#include <sstream>

namespace warpmat {

std::string format_matrix_text(const WarpingMatrix& m) {
    std::string out;
    for (const auto& r : m.rows()) {
        out += to_string(r);
        out += '\n';
    }
    return out;
}

namespace {

Cell parse_cell(std::string_view token, int line) {
    Cell cell;
    std::string_view digits = token;
    if (!digits.empty() && digits.back() == '-') {
        cell.bar = true;
        digits.remove_suffix(1);
    }
    const auto* end = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(digits.data(), end, cell.value);
    if (digits.empty() || ec != std::errc{} || ptr != end || cell.value < 0) {
        throw ParseError("matrix line " + std::to_string(line) + ": bad cell \"" + std::string(token) + "\"");
    }
    return cell;
}

int infer_crossings(std::size_t columns) {
    if (columns == 0 || columns % 2 != 0) {
        throw ParseError("matrix rows need an even, positive number of cells, got " + std::to_string(columns));
    }
    const int c = static_cast<int>(columns / 2);
    if (c > kMaxMatrixCrossings) throw ParseError("matrix too wide");
    return c;
}

}  // namespace

WarpingMatrix parse_matrix_text(std::string_view text, std::optional<MatrixKind> kind) {
    std::vector<LabeledSequence> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool any_bar = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream cells(line);
        LabeledSequence row;
        std::string token;
        while (cells >> token) {
            row.push_back(parse_cell(token, line_no));
            any_bar = any_bar || row.back().bar;
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("matrix line " + std::to_string(line_no) + ": ragged row");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix text is empty");
    const int c = infer_crossings(rows.front().size());
    if (!kind) {
        const auto n = static_cast<std::int64_t>(rows.size());
        if (n == expected_rows(c, MatrixKind::Diagram)) {
            kind = MatrixKind::Diagram;
        } else if (n == expected_rows(c, MatrixKind::Projection)) {
            kind = any_bar ? MatrixKind::SignedProjection : MatrixKind::Projection;
        } else {
            throw ParseError("matrix with " + std::to_string(rows.front().size()) + " columns needs " +
                             std::to_string(expected_rows(c, MatrixKind::Projection)) + " or " +
                             std::to_string(expected_rows(c, MatrixKind::Diagram)) + " rows, got " +
                             std::to_string(n));
        }
    }
    try {
        return WarpingMatrix(c, *kind, std::move(rows));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json to_json(const WarpingMatrix& m) {
    auto rows = nlohmann::json::array();
    for (const auto& r : m.rows()) {
        auto row = nlohmann::json::array();
        for (const auto& cell : r) row.push_back({{"v", cell.value}, {"bar", cell.bar}});
        rows.push_back(std::move(row));
    }
    return {{"c", m.crossings()}, {"kind", to_string(m.kind())}, {"rows", rows}};
}

WarpingMatrix matrix_from_json(const nlohmann::json& j) {
    try {
        const int c = j.at("c").get<int>();
        const auto kind = matrix_kind_from_string(j.at("kind").get<std::string>());
        std::vector<LabeledSequence> rows;
        for (const auto& r : j.at("rows")) {
            LabeledSequence row;
            for (const auto& cell : r) {
                row.push_back(Cell{cell.at("v").get<int>(), cell.value("bar", false)});
            }
            rows.push_back(std::move(row));
        }
        return WarpingMatrix(c, kind, std::move(rows));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix json: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("matrix json: ") + e.what());
    }
}

}  // namespace warpmat
