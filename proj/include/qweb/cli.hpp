#pragma once

#include <CLI11.hpp>
#include <qweb/hecke.hpp>
#include <qweb/serialize.hpp>
#include <qweb/transition.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qweb {

namespace cli_detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("invalid integer: " + s);
    }
    if (pos != s.size()) throw UsageError("invalid integer: " + s);
    return v;
}

// "a,b" with 0 <= b <= a, or a bare "a"; b = 0 gives the one-row shape.
inline Partition parse_shape(const std::string& text) {
    const auto comma = text.find(',');
    int a = 0;
    int b = 0;
    if (comma == std::string::npos) {
        a = parse_int(text);
    } else {
        a = parse_int(text.substr(0, comma));
        b = parse_int(text.substr(comma + 1));
    }
    if (a < 1 || b < 0 || b > a)
        throw UsageError("shape must be a,b with a >= 1 and 0 <= b <= a");
    if (b == 0) return Partition({a});
    return Partition({a, b});
}

struct Options {
    std::string kind;
    std::string shape_text;
    int n = -1;
    int r = -1;
    std::string format;
    std::string method = "algebraic";
    std::string side = "webs";
    std::string tableau_text;
    std::string web_text;
    int oracle_bound = 8;
    int all_upto = 0;
    int edge = 0;
    bool strict = false;
    bool transpose = false;
    bool compact = false;
};

inline std::pair<int, int> resolve_nr(const Options& o) {
    const bool has_shape = !o.shape_text.empty();
    const bool has_nr = o.n >= 0 || o.r >= 0;
    if (has_shape && has_nr) throw UsageError("give either --shape or --n/--r, not both");
    if (has_shape) return web_type(parse_shape(o.shape_text));
    if (has_nr) {
        const int n = o.n < 0 ? 0 : o.n;
        const int r = o.r < 0 ? 0 : o.r;
        if (n == 0 && r == 0) throw UsageError("need at least one boundary point");
        return {n, r};
    }
    throw UsageError("missing --shape or --n/--r");
}

inline Partition resolve_shape(const Options& o) {
    const auto [n, r] = resolve_nr(o);
    if (n == 0) return Partition({r});
    return Partition({n + r, n});
}

inline Method parse_method(const std::string& name) {
    if (name == "naive") return Method::naive;
    if (name == "positive") return Method::positive;
    return Method::algebraic;
}

inline std::string trimmed(std::string s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!s.empty() && is_space(s.back())) s.pop_back();
    std::size_t k = 0;
    while (k < s.size() && is_space(s[k])) ++k;
    return s.substr(k);
}

inline std::string input_text(const std::string& flag_value, std::istream& in) {
    if (!flag_value.empty()) return trimmed(flag_value);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    text = trimmed(text);
    if (text.empty()) throw UsageError("missing input: pass a flag or pipe a value on stdin");
    return text;
}

inline Web parse_web(const std::string& text) {
    if (!text.empty() && text.front() == '{') return web_of_json(Json::parse(text));
    return Web::from_word(text);
}

inline std::string shape_label(const Partition& shape) {
    const int a = shape.parts[0];
    const int b = shape.parts.size() > 1 ? shape.parts[1] : 0;
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.kind == "webs") {
        const auto [n, r] = resolve_nr(o);
        const std::vector<Web> webs = enumerate_webs(n, r);
        if (o.format == "json") {
            Json arr = Json::array();
            for (const Web& w : webs) arr.push_back(json_of(w));
            out << arr.dump() << "\n";
        } else {
            for (const Web& w : webs) out << w.word << "\n";
        }
        return 0;
    }
    if (o.shape_text.empty()) throw UsageError("enumerate tableaux needs --shape");
    Partition shape = parse_shape(o.shape_text);
    if (o.transpose) shape = shape.conjugate();
    const std::vector<Tableau> tabs = enumerate_std(shape);
    if (o.format == "json") {
        Json arr = Json::array();
        for (const Tableau& t : tabs) arr.push_back(o.compact ? json_of_compact(t) : json_of(t));
        out << arr.dump() << "\n";
    } else {
        for (const Tableau& t : tabs) out << pretty(t) << "\n";
    }
    return 0;
}

inline int cmd_map(const Options& o, std::ostream& out, std::istream& in) {
    if (o.kind == "psi") {
        const Tableau t = tableau_of_json(Json::parse(input_text(o.tableau_text, in)));
        const Web w = psi(t);
        if (o.format == "json")
            out << json_of(w).dump() << "\n";
        else
            out << w.word << "\n";
        return 0;
    }
    const Web w = parse_web(input_text(o.web_text, in));
    const Tableau t = phi(w);
    if (o.format == "json")
        out << (o.compact ? json_of_compact(t) : json_of(t)).dump() << "\n";
    else
        out << pretty(t) << "\n";
    return 0;
}

inline int cmd_nest(const Options& o, std::ostream& out, std::istream& in) {
    const Web w = parse_web(input_text(o.web_text, in));
    out << (o.edge > 0 ? nest_edge(w, o.edge) : nest(w)) << "\n";
    return 0;
}

inline int cmd_matrix(const Options& o, std::ostream& out, std::ostream& err) {
    const Partition shape = resolve_shape(o);
    const TransitionMatrix m = transition_matrix(shape, parse_method(o.method));
    if (o.method == "all") {
        const TransitionMatrix naive = transition_matrix(shape, Method::naive);
        const TransitionMatrix positive = transition_matrix(shape, Method::positive);
        if (!(naive.entries == m.entries && positive.entries == m.entries)) {
            err << "error: resolution methods disagree at shape " << shape_label(shape) << "\n";
            return 1;
        }
    }
    if (o.format == "json")
        out << json_of(m).dump() << "\n";
    else
        out << pretty(m);
    return 0;
}

inline int cmd_hasse(const Options& o, std::ostream& out) {
    const Partition shape = resolve_shape(o);
    if (o.side == "webs") {
        const auto [n, r] = web_type(shape);
        out << dot_web_hasse(n, r);
    } else {
        out << dot_tableau_hasse(shape.conjugate());
    }
    return 0;
}

inline const std::vector<std::string>& all_check_kinds() {
    static const std::vector<std::string> kinds = {
        "bijection", "hecke-relations", "order-iso", "unitriangular", "positive",
        "palindromic", "equivariance",  "eigen",     "resolvers"};
    return kinds;
}

// One report line; returns false only when the failure counts against the
// exit code (palindromicity is advisory unless --strict).
inline bool run_one_check(const std::string& kind, const Partition& shape, const Options& o,
                          std::ostream& out) {
    const std::string label = kind + " " + shape_label(shape) + ": ";
    if (kind == "equivariance" && shape.d() > o.oracle_bound) {
        out << label << "skipped (d=" << shape.d() << " exceeds oracle bound " << o.oracle_bound
            << ")\n";
        return true;
    }
    CheckReport rep;
    std::string note;
    bool advisory = false;
    const Method method = parse_method(o.method);
    if (kind == "bijection") {
        rep = check_bijection(shape);
    } else if (kind == "hecke-relations") {
        rep = check_web_relations(shape);
    } else if (kind == "order-iso") {
        rep = check_order_iso(shape);
    } else if (kind == "unitriangular") {
        rep = check_unitriangular(transition_matrix(shape, method));
    } else if (kind == "positive") {
        rep = check_positive(transition_matrix(shape, method));
    } else if (kind == "palindromic") {
        rep = check_palindromic(transition_matrix(shape, method));
        advisory = !o.strict;
    } else if (kind == "equivariance") {
        rep = check_equivariance(shape, method);
    } else if (kind == "eigen") {
        rep = check_eigen_relation(shape);
        const auto [n, r] = web_type(shape);
        Laurent value = Laurent::one();
        const Laurent factor = Laurent::one() + Laurent::monomial(-2, 1);
        for (int i = 0; i < n; ++i) value = value * factor;
        note = "eigenvalue (1+q^-2)^" + std::to_string(n) + " = " + pretty(value) + "; ";
    } else if (kind == "resolvers") {
        rep = check_method_agreement(shape);
    } else {
        throw UsageError("unknown check kind: " + kind);
    }
    if (rep.ok) {
        out << label << "ok (" << note << "checked " << rep.checked << ")\n";
        return true;
    }
    if (advisory) {
        out << label << "refuted (" << rep.detail << ")\n";
        return true;
    }
    out << label << "FAIL (" << rep.detail << ")\n";
    return false;
}

inline int cmd_check(const Options& o, std::ostream& out) {
    std::vector<Partition> shapes;
    if (o.all_upto > 0) {
        if (!o.shape_text.empty() || o.n >= 0 || o.r >= 0)
            throw UsageError("give either --all-upto or a single shape, not both");
        for (int d = 1; d <= o.all_upto; ++d)
            for (int n = 0; 2 * n <= d; ++n) {
                const int r = d - 2 * n;
                shapes.push_back(n == 0 ? Partition({r}) : Partition({n + r, n}));
            }
    } else {
        shapes.push_back(resolve_shape(o));
    }
    const std::vector<std::string> kinds =
        o.kind == "all" ? all_check_kinds() : std::vector<std::string>{o.kind};
    bool ok = true;
    for (const Partition& shape : shapes)
        for (const std::string& kind : kinds)
            if (!run_one_check(kind, shape, o, out)) ok = false;
    out << (ok ? "result: pass\n" : "result: FAIL\n");
    return ok ? 0 : 1;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
    const Partition shape = resolve_shape(o);
    if (shape.d() > o.oracle_bound)
        throw UsageError("shape size " + std::to_string(shape.d()) +
                         " exceeds oracle bound; raise --oracle-bound");
    const std::vector<ActionMatrix> mats = action_matrix_standard(shape);
    const Laurent scalar = check_key_lemma(shape);
    const std::vector<Tableau> tabs = enumerate_std(shape.conjugate());
    const int k = static_cast<int>(tabs.size());
    if (o.format == "json") {
        Json gens = Json::array();
        for (const ActionMatrix& mat : mats) {
            Json rows = Json::array();
            for (const auto& row : mat) {
                Json line = Json::array();
                for (const Laurent& p : row) line.push_back(json_of(p));
                rows.push_back(line);
            }
            gens.push_back(rows);
        }
        Json j;
        j["shape"] = Json::array(
            {shape.parts[0], shape.parts.size() > 1 ? shape.parts[1] : 0});
        j["dim"] = k;
        j["generators"] = gens;
        j["scalar"] = json_of(scalar);
        out << j.dump() << "\n";
        return 0;
    }
    out << "shape " << shape_label(shape) << ": dimension " << k << ", " << shape.d()
        << " boundary points\n";
    for (std::size_t g = 0; g < mats.size(); ++g) {
        out << "T_" << (g + 1) << " on the standard basis:\n";
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header{""};
        for (int j = 0; j < k; ++j) header.push_back("t" + std::to_string(j + 1));
        cells.push_back(header);
        for (int row = 0; row < k; ++row) {
            std::vector<std::string> line{"t" + std::to_string(row + 1)};
            for (int col = 0; col < k; ++col) line.push_back(pretty(mats[g][row][col]));
            cells.push_back(line);
        }
        out << detail::aligned_grid(cells);
    }
    for (int j = 0; j < k; ++j)
        out << "t" << (j + 1) << " = " << pretty(tabs[j]) << "\n";
    out << "scalar: z * y_conjugate = c * z with c = " << pretty(scalar) << "\n";
    return 0;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    using namespace cli_detail;
    Options o;
    CLI::App app{"transition matrices between standard and web bases of two-row Specht modules"};
    app.name("qweb");
    app.require_subcommand(1);

    const auto add_shape_flags = [&](CLI::App* sub) {
        sub->add_option("--shape", o.shape_text, "two-row shape a,b with b <= a (b may be 0)");
        sub->add_option("--n", o.n, "number of arcs");
        sub->add_option("--r", o.r, "number of through strands");
    };
    const auto add_format = [&](CLI::App* sub, const std::vector<std::string>& values) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(values));
    };

    CLI::App* c_enum = app.add_subcommand("enumerate", "list webs or standard tableaux");
    c_enum->add_option("kind", o.kind, "webs or tableaux")
        ->required()
        ->check(CLI::IsMember({"webs", "tableaux"}));
    add_shape_flags(c_enum);
    c_enum->add_flag("--transpose", o.transpose, "list tableaux of the conjugate shape");
    c_enum->add_flag("--compact", o.compact, "column encoding for JSON tableaux");
    add_format(c_enum, {"json", "pretty"});

    CLI::App* c_map = app.add_subcommand("map", "apply a basis bijection");
    c_map->add_option("direction", o.kind, "psi (tableau to web) or phi (web to tableau)")
        ->required()
        ->check(CLI::IsMember({"psi", "phi"}));
    c_map->add_option("--tableau", o.tableau_text, "tableau JSON (rows or col1/col2); stdin if omitted");
    c_map->add_option("--web", o.web_text, "web word or JSON; stdin if omitted");
    c_map->add_flag("--compact", o.compact, "column encoding for JSON tableau output");
    add_format(c_map, {"json", "pretty"});

    CLI::App* c_nest = app.add_subcommand("nest", "nesting number of a web");
    c_nest->add_option("--web", o.web_text, "web word or JSON; stdin if omitted");
    c_nest->add_option("--edge", o.edge, "nesting depth of the arc opening at this vertex");

    CLI::App* c_matrix = app.add_subcommand("matrix", "transition matrix from the standard basis to the web basis");
    add_shape_flags(c_matrix);
    c_matrix->add_option("--method", o.method, "algebraic, naive, positive, or all")
        ->check(CLI::IsMember({"algebraic", "naive", "positive", "all"}));
    add_format(c_matrix, {"json", "pretty"});

    CLI::App* c_hasse = app.add_subcommand("hasse", "cover digraph of either basis order");
    add_shape_flags(c_hasse);
    c_hasse->add_option("--side", o.side, "webs or tableaux")
        ->check(CLI::IsMember({"webs", "tableaux"}));
    add_format(c_hasse, {"dot"});

    CLI::App* c_check = app.add_subcommand("check", "verify the proved and observed properties");
    c_check->add_option("kind", o.kind, "which property to check")
        ->required()
        ->check(CLI::IsMember({"bijection", "hecke-relations", "order-iso", "unitriangular",
                               "positive", "palindromic", "equivariance", "eigen", "resolvers",
                               "all"}));
    add_shape_flags(c_check);
    c_check->add_option("--all-upto", o.all_upto, "run on every two-row shape with at most this many boxes");
    c_check->add_option("--method", o.method, "matrix construction method")
        ->check(CLI::IsMember({"algebraic", "naive", "positive", "all"}));
    c_check->add_option("--oracle-bound", o.oracle_bound, "largest d the algebra-side oracle may handle");
    c_check->add_flag("--strict", o.strict, "count palindromicity as a failure");

    CLI::App* c_oracle = app.add_subcommand("oracle", "algebra-side generator matrices and scalar");
    add_shape_flags(c_oracle);
    c_oracle->add_option("--oracle-bound", o.oracle_bound, "largest d the oracle may handle");
    add_format(c_oracle, {"json", "pretty"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_enum) return cmd_enumerate(o, out);
        if (*c_map) return cmd_map(o, out, in);
        if (*c_nest) return cmd_nest(o, out, in);
        if (*c_matrix) return cmd_matrix(o, out, err);
        if (*c_hasse) return cmd_hasse(o, out);
        if (*c_check) return cmd_check(o, out);
        if (*c_oracle) return cmd_oracle(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace qweb
