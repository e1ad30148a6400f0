// Command-line driver. Kept separate from main() so tests can run it
// in-process against string streams.
#pragma once

#include "univadj.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace univadj::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kInapplicable = 2,
};

enum class Method { formula, oracle, automatic };
enum class Output { human, record };

struct RunConfig {
    std::string input_path;  ///< empty: stdin
    std::string catalog;     ///< built-in graph name; overrides input
    std::string format = "auto";
    std::string coeffs = "preset:adjacency";
    bool of_complement = false;
    Method method = Method::automatic;
    Rational tol = make_rational(1, 1000000000);
    Output output = Output::human;
};

/// Resolves "preset:<name>" or "a,b,c,d".
inline UniversalCoefficients resolve_coeffs(const std::string& spec) {
    constexpr std::string_view kPrefix = "preset:";
    if (spec.rfind(kPrefix, 0) == 0) {
        const std::string name = spec.substr(kPrefix.size());
        if (auto p = preset_from_name(name)) {
            return preset(*p);
        }
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return parse_coefficients(spec);
}

namespace detail {

inline std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline Graph load_graph(const RunConfig& cfg, std::istream& in) {
    if (!cfg.catalog.empty()) {
        if (auto g = catalog::by_name(cfg.catalog)) {
            return *g;
        }
        throw std::invalid_argument("unknown catalog graph '" + cfg.catalog + "'");
    }
    std::string text;
    if (cfg.input_path.empty() || cfg.input_path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(cfg.input_path, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot open '" + cfg.input_path + "'");
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    GraphFormat fmt = detect_format(text);
    if (cfg.format == "graph6") {
        fmt = GraphFormat::graph6;
    } else if (cfg.format == "edgelist") {
        fmt = GraphFormat::edgelist;
    }
    if (fmt == GraphFormat::graph6) {
        return parse_graph6(trim(std::move(text)));
    }
    return parse_edgelist(text);
}

inline nlohmann::json coefficient_list(const Polynomial& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(to_string(c));
    }
    return arr;
}

/// Decimal digits sufficient to show an interval of width tol.
inline unsigned digits_for(const Rational& tol) {
    unsigned digits = 1;
    Rational scale = 10;
    while (scale * tol < 1 && digits < 60) {
        scale *= 10;
        ++digits;
    }
    return digits + 1;
}

inline std::string decimal_rounded(const Rational& r, unsigned digits, bool up) {
    Integer scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Integer num = r.get_num() * scale;
    Integer q;
    if (up) {
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
    } else {
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
    }
    return to_decimal(make_rational(q, scale), digits);
}

inline std::string render_root(const RootInterval& r, const Rational& tol) {
    if (r.is_exact()) {
        return to_string(r.lower);
    }
    const unsigned digits = digits_for(tol);
    return "[" + decimal_rounded(r.lower, digits, false) + ", " + decimal_rounded(r.upper, digits, true) + "]";
}

struct Computed {
    Polynomial poly;
    const char* path;
};

}  // namespace detail

/// Raised when the closed form cannot be applied.
class Inapplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline UniversalCoefficients effective_coeffs(const RunConfig& cfg, const Graph& g) {
    auto c = resolve_coeffs(cfg.coeffs);
    return cfg.of_complement ? complement_transform(c, g.order()) : c;
}

inline detail::Computed compute_charpoly(const RunConfig& cfg, const Graph& g) {
    if (g.order() == 0) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    const auto c = effective_coeffs(cfg, g);
    if (cfg.method == Method::oracle) {
        return {charpoly_exact(build_matrix(g, c)), "oracle"};
    }
    auto summary = regular_summary(g);
    if (summary.regular()) {
        return {union_charpoly(UnionInstance(std::move(summary.components), c)), "formula"};
    }
    if (cfg.method == Method::formula) {
        throw Inapplicable("component " + std::to_string(*summary.first_irregular) + " is irregular");
    }
    return {charpoly_exact(build_matrix(g, c)), "oracle"};
}

inline int cmd_charpoly(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    const auto r = compute_charpoly(cfg, g);
    if (cfg.output == Output::record) {
        nlohmann::json j;
        j["command"] = "charpoly";
        j["path"] = r.path;
        j["degree"] = r.poly.degree();
        j["coefficients"] = detail::coefficient_list(r.poly);
        j["polynomial"] = to_human_string(r.poly);
        out << j.dump() << '\n';
    } else {
        out << to_human_string(r.poly) << '\n' << "path=" << r.path << '\n';
    }
    return kSuccess;
}

inline int cmd_spectrum(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    const auto r = compute_charpoly(cfg, g);
    const auto roots = isolate_real_roots(r.poly, cfg.tol);
    if (cfg.output == Output::record) {
        nlohmann::json j;
        j["command"] = "spectrum";
        j["path"] = r.path;
        j["degree"] = r.poly.degree();
        auto arr = nlohmann::json::array();
        for (const auto& root : roots) {
            arr.push_back({{"lower", to_string(root.lower)},
                           {"upper", to_string(root.upper)},
                           {"exact", root.is_exact()},
                           {"multiplicity", root.multiplicity}});
        }
        j["roots"] = arr;
        out << j.dump() << '\n';
    } else {
        std::string line;
        for (const auto& root : roots) {
            if (!line.empty()) {
                line += ", ";
            }
            line += detail::render_root(root, cfg.tol) + " (x" + std::to_string(root.multiplicity) + ")";
        }
        out << line << '\n' << "path=" << r.path << '\n';
    }
    return kSuccess;
}

inline int cmd_verify(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    if (g.order() == 0) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    const auto report = verify_against_oracle(g, effective_coeffs(cfg, g));
    if (cfg.output == Output::record) {
        nlohmann::json j;
        j["status"] = to_string(report.status);
        j["degree"] = report.degree;
        if (report.first_mismatch_index) {
            j["first_mismatch_index"] = *report.first_mismatch_index;
        }
        j["formula_poly"] = report.formula_poly ? detail::coefficient_list(*report.formula_poly) : nlohmann::json(nullptr);
        j["oracle_poly"] = detail::coefficient_list(report.oracle_poly);
        if (report.irregular_component) {
            j["irregular_component"] = *report.irregular_component;
        }
        out << j.dump() << '\n';
    } else {
        switch (report.status) {
        case VerifyStatus::equal:
            out << "equal\n";
            break;
        case VerifyStatus::unequal:
            out << "unequal: first mismatch at x^" << *report.first_mismatch_index << '\n';
            break;
        case VerifyStatus::inapplicable:
            out << "closed form inapplicable: component " << *report.irregular_component << " is irregular\n";
            break;
        }
        out << "degree: " << report.degree << '\n';
        if (report.formula_poly) {
            out << "formula: " << to_human_string(*report.formula_poly) << '\n';
        }
        out << "oracle: " << to_human_string(report.oracle_poly) << '\n';
    }
    return report.status == VerifyStatus::equal ? kSuccess : kInapplicable;
}

inline int cmd_matrix(const RunConfig& cfg, const Graph& g, std::ostream& out) {
    if (g.order() == 0) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    const auto m = build_matrix(g, effective_coeffs(cfg, g));
    if (cfg.output == Output::record) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.order(); ++i) {
            auto row = nlohmann::json::array();
            for (std::size_t j = 0; j < m.order(); ++j) {
                row.push_back(to_string(m(i, j)));
            }
            rows.push_back(row);
        }
        out << nlohmann::json{{"command", "matrix"}, {"order", m.order()}, {"entries", rows}}.dump() << '\n';
    } else {
        out << to_string(m) << '\n';
    }
    return kSuccess;
}

/// Runs the CLI on `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characteristic polynomials and spectra of universal adjacency matrices", "univadj"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method = "auto";
    std::string output = "human";
    std::string tol = "1/1000000000";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input_path, "Graph file (graph6 or edge list); stdin when omitted");
        sub->add_option("--catalog", cfg.catalog, "Built-in graph: Kn, Cn, Pn, En, Qk, Ka,b, Petersen");
        sub->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
        sub->add_option("--coeffs", cfg.coeffs, "preset:<adjacency|laplacian|signless_laplacian|seidel> or a,b,c,d");
        sub->add_flag("--of-complement", cfg.of_complement, "Use the matrix of the complement graph");
        sub->add_option("--method", method, "formula, oracle or auto")->check(CLI::IsMember({"formula", "oracle", "auto"}));
        sub->add_option("--tol", tol, "Root isolation width p/q");
        sub->add_option("--output", output, "human or record")->check(CLI::IsMember({"human", "record"}));
    };
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of U");
    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of U with multiplicities");
    auto* verify = app.add_subcommand("verify", "Compare the closed form against the exact oracle");
    auto* matrix = app.add_subcommand("matrix", "Print U");
    for (auto* sub : {charpoly, spectrum, verify, matrix}) {
        add_common(sub);
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        if (!rev.empty()) {
            rev.pop_back();
        }
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        cfg.method = method == "formula" ? Method::formula : method == "oracle" ? Method::oracle : Method::automatic;
        cfg.output = output == "record" ? Output::record : Output::human;
        cfg.tol = parse_rational(tol);
        if (cfg.tol <= 0) {
            throw std::invalid_argument("--tol must be positive");
        }
        const Graph g = detail::load_graph(cfg, in);
        if (charpoly->parsed()) {
            return cmd_charpoly(cfg, g, out);
        }
        if (spectrum->parsed()) {
            return cmd_spectrum(cfg, g, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, g, out);
        }
        return cmd_matrix(cfg, g, out);
    } catch (const Inapplicable& e) {
        err << "error: " << e.what() << '\n';
        return kInapplicable;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace univadj::cli
