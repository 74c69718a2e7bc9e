#pragma once

#include <json.hpp>
#include <qweb/diagrams.hpp>
#include <qweb/laurent.hpp>
#include <qweb/tableaux.hpp>
#include <qweb/transition.hpp>
#include <qweb/webs.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace qweb {

// Field order in emitted objects is part of the output contract, so the
// insertion-ordered variant is used throughout. Parsers accept any order.
using Json = nlohmann::ordered_json;

// A Laurent polynomial is a list of [exponent, coefficient] pairs with
// ascending exponents and no zero coefficients; [] encodes 0.
inline Json json_of(const Laurent& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        require(c >= (std::numeric_limits<std::int64_t>::min)() &&
                    c <= (std::numeric_limits<std::int64_t>::max)(),
                "coefficient too large for JSON");
        out.push_back(Json::array({e, static_cast<std::int64_t>(c)}));
    }
    return out;
}

inline Laurent laurent_of_json(const Json& j) {
    require(j.is_array(), "Laurent JSON must be a list of [exponent, coefficient] pairs");
    Laurent p;
    for (const auto& term : j) {
        require(term.is_array() && term.size() == 2 && term[0].is_number_integer() &&
                    term[1].is_number_integer(),
                "Laurent JSON term must be an [exponent, coefficient] pair");
        p += Laurent::monomial(term[0].get<int>(), Int(term[1].get<std::int64_t>()));
    }
    return p;
}

// Descending exponents: "q^3+q", "q+q^-1", "2q^2-1", "0".
inline std::string pretty(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int e = it->first;
        const Int& c = it->second;
        const Int mag = c < 0 ? Int(-c) : c;
        if (!out.empty())
            out += c < 0 ? "-" : "+";
        else if (c < 0)
            out += "-";
        if (mag != 1 || e == 0) out += mag.str();
        if (e == 1)
            out += "q";
        else if (e != 0)
            out += "q^" + std::to_string(e);
    }
    return out;
}

inline Json json_of(const Tableau& t) {
    Json out;
    out["shape"] = t.shape().parts;
    out["rows"] = t.rows;
    return out;
}

// Column form for tableaux with at most two columns.
inline Json json_of_compact(const Tableau& t) {
    Json col1 = Json::array();
    Json col2 = Json::array();
    for (const auto& row : t.rows) {
        require(row.size() <= 2, "compact tableau encoding needs at most two columns");
        col1.push_back(row[0]);
        if (row.size() == 2) col2.push_back(row[1]);
    }
    Json out;
    out["col1"] = col1;
    out["col2"] = col2;
    return out;
}

inline std::string pretty(const Tableau& t) { return detail::tableau_label(t); }

// Accepts a bare row list, {"shape":...,"rows":...}, or {"col1":...,"col2":...}.
inline Tableau tableau_of_json(const Json& j) {
    std::vector<std::vector<int>> rows;
    if (j.is_array()) {
        rows = j.get<std::vector<std::vector<int>>>();
    } else if (j.is_object() && j.contains("rows")) {
        rows = j.at("rows").get<std::vector<std::vector<int>>>();
    } else if (j.is_object() && j.contains("col1")) {
        const auto col1 = j.at("col1").get<std::vector<int>>();
        const auto col2 =
            j.contains("col2") ? j.at("col2").get<std::vector<int>>() : std::vector<int>{};
        require(col2.size() <= col1.size(), "col2 may not be longer than col1");
        for (std::size_t k = 0; k < col1.size(); ++k) {
            rows.push_back({col1[k]});
            if (k < col2.size()) rows.back().push_back(col2[k]);
        }
    } else {
        require(false, "tableau JSON must be a row list or carry rows or col1/col2");
    }
    require(!rows.empty() && !rows.back().empty(), "tableau must be nonempty");
    for (std::size_t k = 0; k + 1 < rows.size(); ++k)
        require(rows[k].size() >= rows[k + 1].size(), "tableau row lengths must weakly decrease");
    Tableau t{rows};
    require(is_standard(t), "tableau must be standard");
    return t;
}

inline Json json_of(const Web& w) {
    Json out;
    out["n"] = w.n;
    out["r"] = w.r;
    out["word"] = w.word;
    return out;
}

inline std::string pretty(const Web& w) { return w.word; }

// Accepts a bare word string or {"n":...,"r":...,"word":...}.
inline Web web_of_json(const Json& j) {
    if (j.is_string()) return Web::from_word(j.get<std::string>());
    require(j.is_object() && j.contains("word"),
            "web JSON must be a word string or carry a word field");
    const Web w = Web::from_word(j.at("word").get<std::string>());
    if (j.contains("n")) require(j.at("n").get<int>() == w.n, "web n field disagrees with word");
    if (j.contains("r")) require(j.at("r").get<int>() == w.r, "web r field disagrees with word");
    return w;
}

inline Json json_of(const CrossedDiagram& d) {
    Json layers = Json::array();
    for (const Row& row : d.rows) {
        if (row.kind == Row::Kind::cross)
            layers.push_back(Json::array(
                {row.pos, row.orient == CrossOrient::ne_over_sw ? "NEoverSW" : "NWoverSE"}));
        else
            layers.push_back(Json::array({row.pos, "capcup"}));
    }
    Json out;
    out["top"] = json_of(d.top);
    out["layers"] = layers;
    out["bubbles"] = d.bubbles;
    return out;
}

inline Json json_of(const TransitionMatrix& m) {
    require(m.size() > 0, "matrix serialization needs at least one column");
    const Partition lam = m.cols.front().shape().conjugate();
    Json out;
    out["lambda"] =
        Json::array({lam.parts[0], lam.parts.size() > 1 ? lam.parts[1] : 0});
    Json rows = Json::array();
    Json cols = Json::array();
    Json entries = Json::array();
    for (const Web& w : m.row_webs) rows.push_back(json_of(w));
    for (const Tableau& t : m.cols) cols.push_back(json_of(t));
    for (const auto& row : m.entries) {
        Json line = Json::array();
        for (const Laurent& p : row) line.push_back(json_of(p));
        entries.push_back(line);
    }
    out["rows"] = rows;
    out["cols"] = cols;
    out["entries"] = entries;
    return out;
}

inline TransitionMatrix matrix_of_json(const Json& j) {
    TransitionMatrix m;
    for (const auto& c : j.at("cols")) m.cols.push_back(tableau_of_json(c));
    for (const auto& w : j.at("rows")) m.row_webs.push_back(web_of_json(w));
    require(m.cols.size() == m.row_webs.size(), "matrix must be square");
    for (const auto& line : j.at("entries")) {
        m.entries.emplace_back();
        for (const auto& p : line) m.entries.back().push_back(laurent_of_json(p));
        require(m.entries.back().size() == m.cols.size(), "entry row has the wrong length");
    }
    require(m.entries.size() == m.cols.size(), "entry row count must match the label count");
    return m;
}

namespace detail {

// First column left-aligned, the rest right-aligned, two-space gutters.
inline std::string aligned_grid(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (width.size() <= j) width.resize(j + 1, 0);
            width[j] = std::max(width[j], row[j].size());
        }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j == 0) {
                line += row[j];
                line.append(width[j] - row[j].size(), ' ');
            } else {
                line += "  ";
                line.append(width[j] - row[j].size(), ' ');
                line += row[j];
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += "\n";
    }
    return out;
}

}  // namespace detail

// Aligned grid with web row labels and t1..tk column labels, followed by the
// column legend.
inline std::string pretty(const TransitionMatrix& m) {
    const int k = m.size();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    for (int j = 0; j < k; ++j) header.push_back("t" + std::to_string(j + 1));
    cells.push_back(header);
    for (int row = 0; row < k; ++row) {
        std::vector<std::string> line{m.row_webs[row].word};
        for (int col = 0; col < k; ++col) line.push_back(pretty(m.entries[row][col]));
        cells.push_back(line);
    }
    std::string out = detail::aligned_grid(cells);
    out += "\n";
    for (int j = 0; j < k; ++j)
        out += "t" + std::to_string(j + 1) + " = " + pretty(m.cols[j]) + "\n";
    return out;
}

// Cover digraph of the web nesting order, nodes labeled by word and nest,
// edges labeled by the surgery position.
inline std::string dot_web_hasse(int n, int r) {
    const std::vector<Web> webs = enumerate_webs(n, r);
    std::map<Web, int> index;
    for (std::size_t k = 0; k < webs.size(); ++k) index[webs[k]] = static_cast<int>(k) + 1;
    std::string out = "digraph webs {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < webs.size(); ++k)
        out += "  w" + std::to_string(k + 1) + " [label=\"" + webs[k].word +
               " nest=" + std::to_string(nest(webs[k])) + "\"];\n";
    for (std::size_t k = 0; k < webs.size(); ++k)
        for (const auto& [i, up] : web_covers_up(webs[k]))
            out += "  w" + std::to_string(k + 1) + " -> w" + std::to_string(index.at(up)) +
                   " [label=\"" + std::to_string(i) + "\"];\n";
    out += "}\n";
    return out;
}

// Cover digraph of the dominance order on standard tableaux of the given
// shape, nodes labeled by row list and length, edges labeled by the swap.
inline std::string dot_tableau_hasse(const Partition& shape) {
    const std::vector<Tableau> tabs = enumerate_std(shape);
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < tabs.size(); ++k)
        index[reading_word(tabs[k])] = static_cast<int>(k) + 1;
    std::string out = "digraph tableaux {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < tabs.size(); ++k)
        out += "  t" + std::to_string(k + 1) + " [label=\"" + pretty(tabs[k]) +
               " len=" + std::to_string(permutation_length(eta_inverse(tabs[k]))) + "\"];\n";
    for (std::size_t k = 0; k < tabs.size(); ++k)
        for (const auto& [i, up] : bruhat_covers_up(tabs[k]))
            out += "  t" + std::to_string(k + 1) + " -> t" +
                   std::to_string(index.at(reading_word(up))) + " [label=\"" + std::to_string(i) +
                   "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace qweb
