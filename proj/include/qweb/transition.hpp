#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qweb/diagrams.hpp"
#include "qweb/hecke.hpp"
#include "qweb/laurent.hpp"
#include "qweb/tableaux.hpp"
#include "qweb/webs.hpp"

namespace qweb {

// (n, r) of the web module attached to a one- or two-row shape (n+r, n).
inline std::pair<int, int> web_type(const Partition& shape) {
    require(!shape.parts.empty() && shape.parts.size() <= 2,
            "web modules are attached to shapes with at most two rows");
    const int n = shape.parts.size() == 2 ? shape.parts[1] : 0;
    return {n, shape.parts[0] - n};
}

// Standard-basis labels: the standard tableaux of the conjugate shape,
// sorted by permutation length with ties kept in reading-word order.
inline std::vector<Tableau> standard_labels(const Partition& shape) {
    std::vector<Tableau> cols = enumerate_std(shape.conjugate());
    std::stable_sort(cols.begin(), cols.end(), [](const Tableau& a, const Tableau& b) {
        return permutation_length(eta_inverse(a)) < permutation_length(eta_inverse(b));
    });
    return cols;
}

enum class Method { algebraic, naive, positive };

// Image of the standard basis element labelled t in the web basis. All
// methods walk the same reduced word; they differ in how a letter acts:
// algebraic applies the generator surgery directly, naive and positive build
// the crossed diagram once and resolve it crossing by crossing.
inline WebCombination image_of_standard(const Partition& shape, const Tableau& t, Method method,
                                        PositiveStats* stats = nullptr) {
    const auto [n, r] = web_type(shape);
    require(t.shape() == shape.conjugate(), "label must be a tableau of the conjugate shape");
    const Web w0 = min_web(n, r);
    const std::vector<int> word = reduced_word_to(t);
    switch (method) {
        case Method::algebraic: {
            WebCombination v;
            v.add(w0, Laurent::one());
            for (int i : word) v = act_T(v, i);
            return v;
        }
        case Method::naive:
            return resolve_naive(build_diagram(w0, word));
        case Method::positive:
            return resolve_positive(build_diagram(w0, word), stats);
    }
    require(false, "unknown method");
    return {};
}

// Change of basis from the standard basis to the web basis: column j holds
// the web-basis coordinates of the standard element labelled cols[j], and
// row k is aligned so that row_webs[k] pairs with cols[k] on the diagonal.
struct TransitionMatrix {
    std::vector<Tableau> cols;
    std::vector<Web> row_webs;
    std::vector<std::vector<Laurent>> entries;  // entries[row][col]

    int size() const { return static_cast<int>(cols.size()); }

    const Laurent& at(const Web& w, const Tableau& t) const {
        const auto rk = std::find(row_webs.begin(), row_webs.end(), w);
        const auto cj = std::find(cols.begin(), cols.end(), t);
        require(rk != row_webs.end() && cj != cols.end(), "unknown matrix label");
        return entries[rk - row_webs.begin()][cj - cols.begin()];
    }
};

inline TransitionMatrix transition_matrix(const Partition& shape,
                                          Method method = Method::algebraic,
                                          PositiveStats* stats = nullptr) {
    TransitionMatrix m;
    m.cols = standard_labels(shape);
    std::map<Web, int> row_of;
    for (const Tableau& t : m.cols) {
        m.row_webs.push_back(psi(transpose_tableau(t)));
        const bool fresh = row_of.emplace(m.row_webs.back(), m.row_webs.size() - 1).second;
        require(fresh, "row webs must be distinct");
    }
    const int k = m.size();
    m.entries.assign(k, std::vector<Laurent>(k, Laurent::zero()));
    for (int j = 0; j < k; ++j) {
        const WebCombination image = image_of_standard(shape, m.cols[j], method, stats);
        for (const auto& [w, c] : image.terms) {
            const auto it = row_of.find(w);
            require(it != row_of.end(), "image web outside the enumerated basis");
            m.entries[it->second][j] = c;
        }
    }
    return m;
}

struct CheckReport {
    bool ok = true;
    long checked = 0;
    std::string detail;

    void fail(std::string msg) {
        if (ok) detail = std::move(msg);
        ok = false;
    }
};

namespace detail {

inline std::string entry_label(const TransitionMatrix& m, int row, int col) {
    std::string s = "(" + m.row_webs[row].word + ", column " + std::to_string(col) + ")";
    return s;
}

}  // namespace detail

// Diagonal ones; every off-diagonal nonzero entry sits strictly below its
// column's web in the cover order and strictly below in nesting.
inline CheckReport check_unitriangular(const TransitionMatrix& m) {
    CheckReport rep;
    for (int j = 0; j < m.size(); ++j) {
        if (!(m.entries[j][j] == Laurent::one()))
            rep.fail("diagonal entry is not 1 at " + detail::entry_label(m, j, j));
        for (int k = 0; k < m.size(); ++k) {
            ++rep.checked;
            if (k == j || m.entries[k][j].is_zero()) continue;
            if (!(order_leq(m.row_webs[k], m.row_webs[j]) && !(m.row_webs[k] == m.row_webs[j])))
                rep.fail("support not strictly below at " + detail::entry_label(m, k, j));
            if (!(nest(m.row_webs[k]) < nest(m.row_webs[j])))
                rep.fail("nesting does not drop at " + detail::entry_label(m, k, j));
            if (k >= j) rep.fail("entry below the diagonal at " + detail::entry_label(m, k, j));
        }
    }
    return rep;
}

// Every entry has nonnegative coefficients and no negative powers of q.
inline CheckReport check_positive(const TransitionMatrix& m) {
    CheckReport rep;
    for (int k = 0; k < m.size(); ++k)
        for (int j = 0; j < m.size(); ++j) {
            ++rep.checked;
            const Laurent& c = m.entries[k][j];
            if (c.is_zero()) continue;
            if (!c.has_nonnegative_coeffs() || c.min_exp() < 0)
                rep.fail("entry outside Z>=0[q] at " + detail::entry_label(m, k, j));
        }
    return rep;
}

// Every nonzero entry reads the same from both ends of its exponent range.
// Observed to hold on every computed matrix; reported, not assumed.
inline CheckReport check_palindromic(const TransitionMatrix& m) {
    CheckReport rep;
    for (int k = 0; k < m.size(); ++k)
        for (int j = 0; j < m.size(); ++j) {
            ++rep.checked;
            const Laurent& c = m.entries[k][j];
            if (!c.is_zero() && !c.is_palindromic())
                rep.fail("non-palindromic entry at " + detail::entry_label(m, k, j));
        }
    return rep;
}

namespace detail {

inline std::vector<std::vector<Laurent>> mat_mul(const std::vector<std::vector<Laurent>>& a,
                                                 const std::vector<std::vector<Laurent>>& b) {
    const std::size_t k = a.size();
    std::vector<std::vector<Laurent>> out(k, std::vector<Laurent>(k, Laurent::zero()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (b[l][j].is_zero()) continue;
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    return out;
}

}  // namespace detail

// The change of basis intertwines the generator actions computed in the two
// models independently: M B_i = A_i M for every generator, with B_i solved
// inside the algebra on the standard basis and A_i read off the web surgery.
inline CheckReport check_equivariance(const Partition& shape,
                                      Method method = Method::algebraic) {
    CheckReport rep;
    const TransitionMatrix m = transition_matrix(shape, method);
    const int k = m.size();
    const std::vector<ActionMatrix> standard_side = action_matrix_standard(shape, m.cols);
    std::map<Web, int> row_of;
    for (int i = 0; i < k; ++i) row_of[m.row_webs[i]] = i;
    for (int g = 1; g < shape.d(); ++g) {
        ActionMatrix web_side(k, std::vector<Laurent>(k, Laurent::zero()));
        for (int j = 0; j < k; ++j)
            for (const auto& [w, c] : act_T(m.row_webs[j], g).terms)
                web_side[row_of.at(w)][j] = c;
        const auto lhs = detail::mat_mul(m.entries, standard_side[g - 1]);
        const auto rhs = detail::mat_mul(web_side, m.entries);
        ++rep.checked;
        if (!(lhs == rhs)) rep.fail("generator " + std::to_string(g) + " does not intertwine");
    }
    return rep;
}

// The minimal web is a y-eigenvector: w0 y = (1 + q^-2)^n w0, with y the
// signed sum over the column block subgroup expanded generator by generator.
inline CheckReport check_eigen_relation(const Partition& shape) {
    CheckReport rep;
    const auto [n, r] = web_type(shape);
    const Web w0 = min_web(n, r);
    WebCombination acc;
    for (const auto& [w, len] : detail::block_subgroup(shape.conjugate())) {
        WebCombination term;
        term.add(w0, Laurent::monomial(-len, len % 2 == 0 ? 1 : -1));
        for (int i : reduced_word(w)) term = act_T(term, i);
        acc += term;
        ++rep.checked;
    }
    Laurent scale = Laurent::one();
    const Laurent factor = Laurent::one() + Laurent::monomial(-2, 1);
    for (int i = 0; i < n; ++i) scale = scale * factor;
    WebCombination expected;
    expected.add(w0, scale);
    if (!(acc == expected)) rep.fail("minimal web is not an eigenvector of y");
    return rep;
}

namespace detail {

inline std::string tableau_label(const Tableau& t) {
    std::string out = "[";
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        if (k) out += ",";
        out += "[";
        for (std::size_t j = 0; j < t.rows[k].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(t.rows[k][j]);
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace detail

// phi and psi are mutually inverse bijections between the webs and the
// standard tableaux of the shape.
inline CheckReport check_bijection(const Partition& shape) {
    CheckReport rep;
    const auto [n, r] = web_type(shape);
    const std::vector<Web> webs = enumerate_webs(n, r);
    const std::vector<Tableau> tabs = enumerate_std(shape);
    if (webs.size() != tabs.size()) rep.fail("web and tableau counts differ");
    for (const Web& w : webs) {
        ++rep.checked;
        const Tableau t = phi(w);
        if (!is_standard(t)) {
            rep.fail("phi image is not standard at " + w.word);
            continue;
        }
        if (!(psi(t) == w)) rep.fail("psi(phi) is not the identity at " + w.word);
    }
    for (const Tableau& t : tabs) {
        ++rep.checked;
        if (!(phi(psi(t)) == t))
            rep.fail("phi(psi) is not the identity at " + detail::tableau_label(t));
    }
    return rep;
}

// The surgery action satisfies the quadratic, braid, and commutation
// relations, so the span of webs is a module over the algebra.
inline CheckReport check_web_relations(const Partition& shape) {
    CheckReport rep;
    const auto [n, r] = web_type(shape);
    const int d = shape.d();
    const Laurent qmq = Laurent::monomial(1, 1) + Laurent::monomial(-1, -1);
    for (const Web& w : enumerate_webs(n, r)) {
        for (int i = 1; i < d; ++i) {
            const WebCombination ti = act_T(w, i);
            WebCombination expect = ti.scaled(qmq);
            expect.add(w, Laurent::one());
            ++rep.checked;
            if (!(act_T(ti, i) == expect))
                rep.fail("quadratic relation fails at " + w.word + " i=" + std::to_string(i));
        }
        for (int i = 1; i + 1 < d; ++i) {
            const WebCombination lhs = act_T(act_T(act_T(w, i), i + 1), i);
            const WebCombination rhs = act_T(act_T(act_T(w, i + 1), i), i + 1);
            ++rep.checked;
            if (!(lhs == rhs))
                rep.fail("braid relation fails at " + w.word + " i=" + std::to_string(i));
        }
        for (int i = 1; i < d; ++i)
            for (int j = i + 2; j < d; ++j) {
                const WebCombination lhs = act_T(act_T(w, i), j);
                const WebCombination rhs = act_T(act_T(w, j), i);
                ++rep.checked;
                if (!(lhs == rhs))
                    rep.fail("commutation fails at " + w.word + " i=" + std::to_string(i) +
                             " j=" + std::to_string(j));
            }
    }
    return rep;
}

// t -> psi(t^T) is an isomorphism of labeled cover digraphs and carries word
// length to nesting number.
inline CheckReport check_order_iso(const Partition& shape) {
    CheckReport rep;
    for (const Tableau& t : enumerate_std(shape.conjugate())) {
        const Web w = psi(transpose_tableau(t));
        ++rep.checked;
        if (nest(w) != permutation_length(eta_inverse(t))) {
            rep.fail("nest differs from word length at " + detail::tableau_label(t));
            continue;
        }
        std::vector<std::pair<int, std::string>> tab_side;
        std::vector<std::pair<int, std::string>> web_side;
        for (const auto& [i, up] : bruhat_covers_up(t))
            tab_side.emplace_back(i, psi(transpose_tableau(up)).word);
        for (const auto& [i, up] : web_covers_up(w)) web_side.emplace_back(i, up.word);
        std::sort(tab_side.begin(), tab_side.end());
        std::sort(web_side.begin(), web_side.end());
        rep.checked += static_cast<long>(tab_side.size());
        if (!(tab_side == web_side))
            rep.fail("cover edges differ at " + detail::tableau_label(t));
    }
    return rep;
}

// The algebraic fold and both diagram resolvers produce the same matrix.
inline CheckReport check_method_agreement(const Partition& shape) {
    CheckReport rep;
    const TransitionMatrix algebraic = transition_matrix(shape, Method::algebraic);
    const TransitionMatrix naive = transition_matrix(shape, Method::naive);
    const TransitionMatrix positive = transition_matrix(shape, Method::positive);
    rep.checked = algebraic.size();
    if (!(naive.entries == algebraic.entries))
        rep.fail("diagram resolution disagrees with the algebraic route");
    if (!(positive.entries == algebraic.entries))
        rep.fail("positive resolution disagrees with the algebraic route");
    return rep;
}

}  // namespace qweb
