#include "rook/cli.hpp"

#include "rook/board.hpp"
#include "rook/error.hpp"
#include "rook/inverse.hpp"
#include "rook/polynomial.hpp"
#include "rook/rookpoly.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string_view>

namespace rook::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    if (text.find_first_not_of(" \t") == std::string::npos) return items;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) items.push_back(item);
    if (!text.empty() && text.back() == ',') items.emplace_back();
    return items;
}

std::vector<BigInt> parse_integers(const std::string& text, std::string_view what) {
    std::vector<BigInt> values;
    for (const auto& item : split_list(text)) {
        auto v = parse_bigint(item);
        if (!v) {
            throw Error(ErrorCode::ParseError,
                        std::string(what) + ": '" + item + "' is not a decimal integer");
        }
        values.push_back(std::move(*v));
    }
    return values;
}

FerrersBoard parse_heights(const std::string& text) {
    std::vector<Height> heights;
    for (const auto& v : parse_integers(text, "heights")) {
        auto h = to_int64(v);
        if (!h) throw Error(ErrorCode::ParseError, "heights: " + to_decimal(v) + " is out of range");
        heights.push_back(*h);
    }
    return ferrers_from_heights(heights);
}

Polynomial parse_coeffs(const std::string& text) { return Polynomial(parse_integers(text, "coeffs")); }

json heights_json(const FerrersBoard& b) { return json(std::vector<Height>(b.heights().begin(), b.heights().end())); }

json coeffs_json(const Polynomial& p) {
    json out = json::array();
    if (p.is_zero()) {
        out.push_back("0");
        return out;
    }
    for (const auto& c : p.coeffs()) out.push_back(to_decimal(c));
    return out;
}

Board read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open matrix file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, "matrix file '" + path + "': " + e.what());
    }
    auto dimension = [&](const char* key) -> std::size_t {
        if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 0) {
            throw Error(ErrorCode::ParseError,
                        std::string("matrix file needs a nonnegative integer '") + key + "'");
        }
        return doc[key].get<std::size_t>();
    };
    const std::size_t rows = dimension("rows");
    const std::size_t cols = dimension("cols");
    if (!doc.contains("ones") || !doc["ones"].is_array()) {
        throw Error(ErrorCode::ParseError, "matrix file needs an array 'ones'");
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (const auto& entry : doc["ones"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            throw Error(ErrorCode::ParseError, "each entry of 'ones' must be [column, row]");
        }
        const auto col = entry[0].get<long long>();
        const auto row = entry[1].get<long long>();
        if (col < 1 || row < 1 || static_cast<std::size_t>(col) > cols ||
            static_cast<std::size_t>(row) > rows) {
            throw Error(ErrorCode::CellOutOfRange, "cell [" + std::to_string(col) + ", " +
                                                       std::to_string(row) + "] outside " +
                                                       std::to_string(rows) + "x" +
                                                       std::to_string(cols) + " board");
        }
        cells.emplace_back(static_cast<std::size_t>(col - 1), static_cast<std::size_t>(row - 1));
    }
    return Board::from_cells(rows, cols, cells);
}

json rejection_json(const InverseRejection& r) {
    json out = {{"rejected", true},
                {"reason", std::string(to_string(r.reason))},
                {"stage", std::string(stage_of(r.reason))},
                {"detail", r.detail}};
    if (r.report) {
        json v = json::array();
        for (const auto& violation : r.report->violations) {
            v.push_back({{"condition", violation.condition}, {"description", violation.description}});
        }
        out["violations"] = std::move(v);
    }
    return out;
}

void emit_error(std::ostream& err, std::string_view code, std::string_view message) {
    err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rook polynomials of Ferrers boards and their inverse problem", "rook"};
    app.require_subcommand(1);

    std::string heights, heights_b, matrix, coeffs;
    long long padding = 0;
    long long cells = 0;
    bool classes = false;

    auto* rookpoly = app.add_subcommand("rookpoly", "Rook polynomial of a Ferrers board or a matrix board");
    auto* h_opt = rookpoly->add_option("--heights", heights, "Ferrers column heights, e.g. 1,3");
    auto* m_opt = rookpoly->add_option("--matrix", matrix, "JSON board file {rows, cols, ones}");
    h_opt->excludes(m_opt);
    rookpoly->require_option(1);

    auto* inverse = app.add_subcommand("inverse", "Reconstruct the increasing Ferrers board of a polynomial");
    inverse->add_option("--coeffs", coeffs, "coefficients in ascending degree, e.g. 1,4,2")->required();

    auto* canon = app.add_subcommand("canon", "Increasing Ferrers board rook equivalent to a board");
    canon->add_option("--heights", heights)->required();

    auto* equiv = app.add_subcommand("equiv", "Whether two Ferrers boards are rook equivalent");
    equiv->add_option("-a,--a", heights, "first board heights")->required();
    equiv->add_option("-b,--b", heights_b, "second board heights")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Increasing Ferrers boards with a given cell count");
    enumerate->add_option("--cells", cells)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--classes", classes, "group all Ferrers boards by canonical representative");

    auto* check = app.add_subcommand("check", "Coefficient conditions every rook polynomial meets");
    check->add_option("--coeffs", coeffs)->required();

    auto* structure = app.add_subcommand("structure", "Padded height and structure vectors");
    structure->add_option("--heights", heights)->required();
    structure->add_option("--n", padding)->required()->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "ParseError", e.what());
        return kExitInputError;
    }

    try {
        if (rookpoly->parsed()) {
            const Polynomial r = h_opt->count() > 0
                                     ? rook_polynomial_ferrers(parse_heights(heights))
                                     : rook_polynomial_general(read_matrix_file(matrix));
            out << json{{"coeffs", coeffs_json(r)}}.dump() << '\n';
            return kExitOk;
        }
        if (inverse->parsed()) {
            const InverseOutcome outcome = solve_inverse(parse_coeffs(coeffs));
            if (!outcome.accepted()) {
                out << rejection_json(outcome.rejection()).dump() << '\n';
                return kExitRejected;
            }
            const auto& s = outcome.solution();
            json result = {{"heights", heights_json(s.board)}};
            if (s.diagnostics) {
                result["n"] = s.diagnostics->n;
                result["t"] = s.diagnostics->t;
                result["u"] = s.diagnostics->u;
            }
            out << result.dump() << '\n';
            return kExitOk;
        }
        if (canon->parsed()) {
            out << json{{"heights", heights_json(canonical_increasing(parse_heights(heights)))}}.dump()
                << '\n';
            return kExitOk;
        }
        if (equiv->parsed()) {
            const bool same = rook_equivalent(parse_heights(heights), parse_heights(heights_b));
            out << json{{"equivalent", same}}.dump() << '\n';
            return kExitOk;
        }
        if (enumerate->parsed()) {
            const auto increasing = enumerate_increasing_ferrers(cells);
            if (!classes) {
                for (const auto& b : increasing) out << json{{"heights", heights_json(b)}}.dump() << '\n';
                return kExitOk;
            }
            std::map<FerrersBoard, std::vector<FerrersBoard>> members;
            for (const auto& b : enumerate_ferrers(cells)) members[canonical_increasing(b)].push_back(b);
            for (const auto& rep : increasing) {
                json list = json::array();
                for (const auto& m : members[rep]) list.push_back(heights_json(m));
                out << json{{"canonical", heights_json(rep)}, {"members", std::move(list)}}.dump() << '\n';
            }
            return kExitOk;
        }
        if (check->parsed()) {
            const NecessityReport report = check_necessary_conditions(parse_coeffs(coeffs));
            json v = json::array();
            for (const auto& violation : report.violations) {
                v.push_back({{"condition", violation.condition}, {"description", violation.description}});
            }
            out << json{{"passed", report.passed()}, {"violations", std::move(v)}}.dump() << '\n';
            return kExitOk;
        }
        if (structure->parsed()) {
            const StructureData sd =
                structure_data(parse_heights(heights), static_cast<std::size_t>(padding));
            out << json{{"n_heights", sd.n_heights}, {"n_structure", sd.n_structure}}.dump() << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        emit_error(err, to_string(e.code()), e.what());
        return kExitInputError;
    }
    emit_error(err, "ParseError", "no subcommand given");
    return kExitInputError;
}

}  // namespace rook::cli
