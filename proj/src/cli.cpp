#include "warpmat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "warpmat/canonical.hpp"
#include "warpmat/matrix_io.hpp"
#include "warpmat/puzzle_io.hpp"
#include "warpmat/reconstruct.hpp"
#include "warpmat/rules.hpp"
#include "warpmat/service.hpp"

namespace warpmat {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    std::string input;
    std::string kind;
    std::string rules;
    std::string knot;
    std::uint64_t seed = 0;
    bool seeded = false;
    int clues = 0;
    std::size_t limit = 10;
    int crossings = 0;
    bool reflect = true;
    std::string host = "127.0.0.1";
    int port = 8080;
};

std::string slurp(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// File contents, stdin for "" or "-".
std::string read_source(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return slurp(in);
    std::ifstream file(path);
    if (!file) throw Error("cannot read " + path);
    return slurp(file);
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

/// Inline Gauss code, or a file / stdin holding one.
OrientedKnotDiagram read_diagram(const std::string& arg, std::istream& in) {
    std::string text = arg;
    if (arg.empty() || arg == "-" || std::filesystem::is_regular_file(arg)) text = read_source(arg, in);
    text = trim(text);
    if (!text.empty() && text.front() == '{') return diagram_from_json(json::parse(text));
    return parse_gauss_code(text);
}

WarpingMatrix read_matrix(const Options& o, std::istream& in) {
    const auto text = read_source(o.input, in);
    std::optional<MatrixKind> kind;
    if (!o.kind.empty()) kind = matrix_kind_from_string(o.kind);
    const auto trimmed = trim(text);
    if (!trimmed.empty() && trimmed.front() == '{') {
        auto m = matrix_from_json(json::parse(trimmed));
        if (kind && *kind != m.kind()) m = WarpingMatrix(m.crossings(), *kind, m.rows());
        return m;
    }
    return parse_matrix_text(text, kind);
}

PuzzleGrid read_grid(const Options& o, std::istream& in) {
    const auto text = trim(read_source(o.input, in));
    if (!text.empty() && text.front() == '{') return grid_from_json(json::parse(text));
    return parse_grid_text(text);
}

RuleSet rules_or(const Options& o, RuleSet fallback) { return o.rules.empty() ? fallback : RuleSet::parse(o.rules); }

bool json_out(const Options& o) { return o.format == "json"; }

void print_matrix(const Options& o, const WarpingMatrix& m, std::ostream& out) {
    if (json_out(o)) {
        out << to_json(m).dump() << '\n';
    } else {
        out << format_matrix_text(m);
    }
}

void print_violations(const Options& o, const std::vector<Violation>& violations, std::ostream& out) {
    if (json_out(o)) {
        auto list = json::array();
        for (const auto& v : violations) list.push_back(to_json(v));
        out << json{{"violations", list}}.dump() << '\n';
        return;
    }
    if (violations.empty()) out << "no violations\n";
    for (const auto& v : violations) out << "rule (" << rule_name(v.rule) << "): " << v.message << '\n';
}

int cmd_reconstruct(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto m = read_matrix(o, in);
    if (m.kind() != MatrixKind::Diagram) {
        const auto p = reconstruct_projection(m);
        if (json_out(o)) {
            out << json{{"kind", "projection"}, {"word", p.word()}}.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < p.word().size(); ++i) out << (i ? " " : "") << p.word()[i];
            out << '\n';
        }
        return 0;
    }
    const auto r = reconstruct_diagram(m);
    if (!r.sign_determined) err << "warning: crossing sign cannot be determined from a 1-row matrix (c = 1)\n";
    if (json_out(o)) {
        auto j = to_json(r.diagram);
        j["sign_determined"] = r.sign_determined;
        out << j.dump() << '\n';
    } else {
        out << format_gauss_code(r.diagram) << '\n';
    }
    return 0;
}

int cmd_puzzle_new(const Options& o, std::ostream& out, std::ostream& err) {
    const auto rules = rules_or(o, RuleSet{});
    const auto preset = find_preset(o.knot);
    PuzzleGrid grid;
    if (preset && !o.seeded) {
        grid = preset->published_grid;
    } else {
        const auto reference = preset ? preset->reference : parse_gauss_code(o.knot);
        auto generated = generate(reference, rules, o.seed, o.clues);
        if (!generated.notice.empty()) err << "note: " << generated.notice << '\n';
        grid = std::move(generated.clues);
    }
    if (json_out(o)) {
        out << to_json(grid).dump() << '\n';
    } else {
        out << format_grid_text(grid);
    }
    return 0;
}

int cmd_puzzle_solve(const Options& o, std::istream& in, std::ostream& out) {
    const auto grid = read_grid(o, in);
    SolveOptions options;
    options.limit = o.limit;
    const auto result = solve_detailed(grid, rules_or(o, RuleSet{}), options);
    const auto count = result.solutions.size();
    if (json_out(o)) {
        auto list = json::array();
        for (const auto& g : result.solutions) list.push_back(to_json(g));
        out << json{{"solutions", list}, {"count", count}, {"exhaustive", result.exhausted}}.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            if (i) out << '\n';
            out << format_grid_text(result.solutions[i]);
        }
        out << (count ? "\n" : "") << count << (result.exhausted ? "" : "+") << " solution" << (count == 1 ? "" : "s")
            << (result.exhausted ? "" : " (limit reached)") << '\n';
    }
    return count ? 0 : 1;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto e = enumerate_matrices(o.crossings, rules_or(o, RuleSet::all()), o.reflect);
    if (json_out(o)) {
        auto list = json::array();
        for (const auto& m : e.classes) list.push_back(to_json(m));
        out << json{{"c", o.crossings}, {"classes", list}, {"count", e.classes.size()}}.dump() << '\n';
        return 0;
    }
    for (const auto& m : e.classes) out << format_matrix_text(m) << '\n';
    out << e.classes.size() << " equivalence class" << (e.classes.size() == 1 ? "" : "es") << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Warping matrices of oriented knot projections and diagrams"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* matrix = app.add_subcommand("matrix", "Gauss code -> warping matrix M(P)");
    auto* signed_matrix = app.add_subcommand("signed-matrix", "Gauss code -> signed warping matrix m(P)");
    auto* diagram_matrix = app.add_subcommand("diagram-matrix", "Gauss code -> warping matrix M(D) of the diagram");
    for (auto* sub : {matrix, signed_matrix, diagram_matrix}) {
        sub->add_option("code", o.input, "Gauss code, a file holding one, or - for stdin");
        add_format(sub);
    }

    auto* verify = app.add_subcommand("verify", "Check a matrix against rules (i)-(iv)");
    auto* reconstruct = app.add_subcommand("reconstruct", "Matrix -> projection word or diagram Gauss code");
    auto* canon = app.add_subcommand("canon", "Canonical form under row swaps and column rotation");
    for (auto* sub : {verify, reconstruct, canon}) {
        sub->add_option("file", o.input, "Matrix file (default stdin)");
        sub->add_option("--kind", o.kind, "Override matrix kind detection")
            ->check(CLI::IsMember({"projection", "signed-projection", "diagram"}));
        add_format(sub);
    }
    canon->add_flag("--reflect,!--no-reflect", o.reflect, "Also allow column reversal");
    o.reflect = false;

    auto* puzzle = app.add_subcommand("puzzle", "Warping matrix puzzles");
    puzzle->require_subcommand(1);
    auto* puzzle_new = puzzle->add_subcommand("new", "Create a clue grid");
    puzzle_new->add_option("--knot", o.knot, "Gauss code or preset (trefoil, figure8)")->required();
    puzzle_new->add_option("--seed", o.seed, "Generator seed (presets without a seed give the published grid)");
    puzzle_new->add_option("--clues", o.clues, "Target number of clues");
    auto* puzzle_solve = puzzle->add_subcommand("solve", "Complete a clue grid");
    puzzle_solve->add_option("--limit", o.limit, "Maximum number of solutions")->check(CLI::PositiveNumber);
    auto* puzzle_check = puzzle->add_subcommand("check", "Report rule violations of a grid");
    for (auto* sub : {puzzle_new, puzzle_solve, puzzle_check}) {
        sub->add_option("--rules", o.rules, "Comma separated rules, e.g. i,ii or all (default i,ii)");
        add_format(sub);
    }
    for (auto* sub : {puzzle_solve, puzzle_check}) sub->add_option("file", o.input, "Grid file (default stdin)");

    auto* enumerate = app.add_subcommand("enumerate", "All rule-satisfying matrices for small c");
    enumerate->add_option("--c", o.crossings, "Crossing number (1..3)")->required()->check(CLI::Range(1, 3));
    enumerate->add_option("--rules", o.rules, "Rules to enforce (default all)");
    bool no_reflect = false;
    enumerate->add_flag("--no-reflect", no_reflect, "Do not identify matrices under column reversal");
    add_format(enumerate);

    auto* serve = app.add_subcommand("serve", "Run the puzzle HTTP service");
    serve->add_option("--host", o.host, "Listen address");
    serve->add_option("--port", o.port, "Listen port")->check(CLI::Range(0, 65535));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }
    o.seeded = puzzle_new->count("--seed") > 0;
    if (enumerate->parsed()) o.reflect = !no_reflect;

    try {
        if (matrix->parsed()) {
            print_matrix(o, build_projection_matrix(read_diagram(o.input, in)), out);
        } else if (signed_matrix->parsed()) {
            print_matrix(o, build_signed_matrix(read_diagram(o.input, in)), out);
        } else if (diagram_matrix->parsed()) {
            print_matrix(o, build_diagram_matrix(read_diagram(o.input, in)), out);
        } else if (verify->parsed()) {
            const auto report = verify_rules(read_matrix(o, in));
            if (json_out(o)) {
                out << to_json(report).dump() << '\n';
            } else {
                out << to_text(report);
            }
            return report.all_passed() ? 0 : 1;
        } else if (reconstruct->parsed()) {
            return cmd_reconstruct(o, in, out, err);
        } else if (canon->parsed()) {
            print_matrix(o, canonical_form(read_matrix(o, in), o.reflect), out);
        } else if (puzzle_new->parsed()) {
            return cmd_puzzle_new(o, out, err);
        } else if (puzzle_solve->parsed()) {
            return cmd_puzzle_solve(o, in, out);
        } else if (puzzle_check->parsed()) {
            const auto violations = validate(read_grid(o, in), rules_or(o, RuleSet{}));
            print_violations(o, violations, out);
            return violations.empty() ? 0 : 1;
        } else if (enumerate->parsed()) {
            return cmd_enumerate(o, out);
        } else if (serve->parsed()) {
            PuzzleService service;
            PuzzleHttpServer server(service);
            const int port = server.bind(o.host, o.port);
            err << "serving on http://" << o.host << ':' << port << '\n';
            server.run();
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace warpmat
