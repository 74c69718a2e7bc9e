#pragma once

#include <qweb/laurent.hpp>
#include <qweb/tableaux.hpp>

#include <map>
#include <mutex>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace qweb {

// A non-crossing (n+r,n)-web, canonically represented by its bottom word over
// '(' (arc L-vertex), ')' (arc R-vertex) and '|' (through-string).  The top
// pairing is forced: the k-th '|' from the left meets top vertex k'.
struct Web {
    int n = 0;
    int r = 0;
    std::string word;

    static Web from_word(const std::string& word) {
        Web w;
        w.word = word;
        int depth = 0;
        for (char c : word) {
            switch (c) {
                case '(':
                    ++depth;
                    ++w.n;
                    break;
                case ')':
                    --depth;
                    require(depth >= 0, "unbalanced web word");
                    break;
                case '|':
                    require(depth == 0, "through-string inside an arc");
                    ++w.r;
                    break;
                default:
                    require(false, "web word symbols are '(', ')', '|'");
            }
        }
        require(depth == 0, "unbalanced web word");
        return w;
    }

    int vertices() const { return 2 * n + r; }

    // Bottom partner of vertex i (1-based), or 0 when i is a through-string.
    int partner(int i) const {
        std::vector<int> p = partners();
        return p[i - 1];
    }

    std::vector<int> partners() const {
        std::vector<int> p(word.size(), 0);
        std::vector<int> stack;
        for (int i = 1; i <= vertices(); ++i) {
            char c = word[i - 1];
            if (c == '(') {
                stack.push_back(i);
            } else if (c == ')') {
                int a = stack.back();
                stack.pop_back();
                p[a - 1] = i;
                p[i - 1] = a;
            }
        }
        return p;
    }

    friend bool operator==(const Web& a, const Web& b) {
        return a.n == b.n && a.r == b.r && a.word == b.word;
    }
    friend bool operator!=(const Web& a, const Web& b) { return !(a == b); }

    // '(' < '|' < ')' symbol ranks, after (n, r).
    friend bool operator<(const Web& a, const Web& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.r != b.r) return a.r < b.r;
        auto rank = [](char c) { return c == '(' ? 0 : c == '|' ? 1 : 2; };
        for (std::size_t k = 0; k < a.word.size(); ++k)
            if (a.word[k] != b.word[k]) return rank(a.word[k]) < rank(b.word[k]);
        return false;
    }
};

// Ascending lexicographic bottom words with '(' < '|' < ')'.
inline std::vector<Web> enumerate_webs(int n, int r) {
    require(n >= 0 && r >= 0, "web parameters must be nonnegative");
    std::vector<Web> out;
    std::string word;
    // Every partial word extends: closings owed equal opens_left + depth.
    auto gen = [&](auto&& self, int opens_left, int thrus_left, int depth) -> void {
        if (opens_left == 0 && thrus_left == 0 && depth == 0) {
            out.push_back(Web::from_word(word));
            return;
        }
        if (opens_left > 0) {
            word.push_back('(');
            self(self, opens_left - 1, thrus_left, depth + 1);
            word.pop_back();
        }
        if (thrus_left > 0 && depth == 0) {
            word.push_back('|');
            self(self, opens_left, thrus_left - 1, depth);
            word.pop_back();
        }
        if (depth > 0) {
            word.push_back(')');
            self(self, opens_left, thrus_left, depth - 1);
            word.pop_back();
        }
    };
    gen(gen, n, r, 0);
    return out;
}

inline Web min_web(int n, int r) {
    std::string word;
    for (int k = 0; k < n; ++k) word += "()";
    word.append(r, '|');
    return Web::from_word(word);
}

inline Web max_web(int n, int r) {
    std::string word(r, '|');
    word.append(n, '(');
    word.append(n, ')');
    return Web::from_word(word);
}

// Arcs strictly containing the arc at L-vertex a, plus through-strings to its
// left.
inline int nest_edge(const Web& w, int a) {
    require(a >= 1 && a <= w.vertices() && w.word[a - 1] == '(', "nest_edge wants an arc L-vertex");
    std::vector<int> p = w.partners();
    int b = p[a - 1];
    int count = 0;
    for (int x = 1; x < a; ++x) {
        if (w.word[x - 1] == '|') ++count;
        if (w.word[x - 1] == '(' && p[x - 1] > b) ++count;
    }
    return count;
}

inline int nest(const Web& w) {
    int total = 0;
    for (int a = 1; a <= w.vertices(); ++a)
        if (w.word[a - 1] == '(') total += nest_edge(w, a);
    return total;
}

// Same number, accumulated edge by edge the other way round: each arc counts
// the arcs strictly inside it, each through-string the arcs entirely to its
// right.
inline int nest_via_prime(const Web& w) {
    std::vector<int> p = w.partners();
    int total = 0;
    for (int a = 1; a <= w.vertices(); ++a) {
        if (w.word[a - 1] == '(') {
            for (int x = a + 1; x < p[a - 1]; ++x)
                if (w.word[x - 1] == '(' && p[x - 1] < p[a - 1]) ++total;
        } else if (w.word[a - 1] == '|') {
            for (int x = a + 1; x <= w.vertices(); ++x)
                if (w.word[x - 1] == '(' && p[x - 1] > x) ++total;
        }
    }
    return total;
}

// First row: L-vertices (arcs' left ends and through-strings); second row:
// R-vertices of arcs.
inline Tableau phi(const Web& w) {
    Tableau t;
    t.rows.resize(w.n > 0 ? 2 : 1);
    for (int i = 1; i <= w.vertices(); ++i) {
        if (w.word[i - 1] == ')')
            t.rows[1].push_back(i);
        else
            t.rows[0].push_back(i);
    }
    return t;
}

// Second-row entries scan left to right, each pairing the nearest available
// smaller first-row vertex; leftover first-row vertices are through-strings.
inline Web psi(const Tableau& t) {
    require(is_standard(t) && t.rows.size() <= 2, "psi wants a standard tableau with two rows");
    int m = t.d();
    std::string word(m, '|');
    std::vector<bool> available(m + 1, false);
    for (int a : t.rows[0]) available[a] = true;
    if (t.rows.size() == 2)
        for (int b : t.rows[1]) {
            int a = b - 1;
            while (a >= 1 && !available[a]) --a;
            require(a >= 1, "no available L-vertex; tableau is not standard");
            available[a] = false;
            word[a - 1] = '(';
            word[b - 1] = ')';
        }
    return Web::from_word(word);
}

// Webs with equal (n, r), Laurent coefficients, zero coefficients pruned.
struct WebCombination {
    std::map<Web, Laurent> terms;

    void add(const Web& w, const Laurent& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    WebCombination& operator+=(const WebCombination& o) {
        for (const auto& [w, c] : o.terms) add(w, c);
        return *this;
    }

    WebCombination scaled(const Laurent& k) const {
        WebCombination out;
        for (const auto& [w, c] : terms) out.add(w, c * k);
        return out;
    }

    friend bool operator==(const WebCombination& a, const WebCombination& b) {
        return a.terms == b.terms;
    }
};

// Temperley-Lieb surgery at the bottom: join vertices i, i+1 with a new arc
// and pair up their old partners.
inline WebCombination act_E(const Web& w, int i) {
    require(i >= 1 && i < w.vertices(), "act_E index out of range");
    WebCombination out;
    std::vector<int> p = w.partners();
    int pi = p[i - 1], pj = p[i];
    if (pi == i + 1) {
        out.add(w, -quantum_int(2));
        return out;
    }
    if (pi == 0 && pj == 0) return out;  // two primed tops joined: the web is zero
    // A through-string next to the inner end of an arc would sit inside it;
    // planarity rules both mixed adjacencies out.
    require(!(pi == 0 && pj != 0 && pj < i), "impossible web: THRU left of an R-vertex");
    require(!(pj == 0 && pi != 0 && pi > i + 1), "impossible web: THRU right of an L-vertex");
    std::string word = w.word;
    word[i - 1] = '(';
    word[i] = ')';
    if (pi == 0) {
        word[pj - 1] = '|';  // i was a through-string; i+1's far partner takes it over
    } else if (pj == 0) {
        word[pi - 1] = '|';  // i+1 was a through-string; i's far partner takes it over
    } else {
        word[std::min(pi, pj) - 1] = '(';
        word[std::max(pi, pj) - 1] = ')';
    }
    Web result = Web::from_word(word);
    require(result.n == w.n && result.r == w.r, "act_E must preserve (n, r)");
    out.add(result, Laurent::one());
    return out;
}

inline WebCombination act_T(const Web& w, int i) {
    WebCombination out = act_E(w, i);
    out.add(w, Laurent::monomial(1, 1));
    return out;
}

inline WebCombination act_T(const WebCombination& v, int i) {
    WebCombination out;
    for (const auto& [w, c] : v.terms) out += act_T(w, i).scaled(c);
    return out;
}

// Covers w with wE_i a single web of nesting number nest(w) + 1: exactly the
// positions where an R-vertex sits immediately left of an L-vertex.
inline std::vector<std::pair<int, Web>> web_covers_up(const Web& w) {
    std::vector<std::pair<int, Web>> covers;
    for (int i = 1; i < w.vertices(); ++i) {
        if (w.word[i - 1] != ')' || w.word[i] == ')') continue;
        const WebCombination result = act_E(w, i);
        require(result.terms.size() == 1, "cover surgery must produce a single web");
        covers.emplace_back(i, result.terms.begin()->first);
    }
    return covers;
}

namespace detail {

struct WebOrder {
    std::map<Web, int> index;
    std::vector<std::vector<int>> reach;  // reach[a][b]: b reachable from a going up
};

inline const WebOrder& web_order(int n, int r) {
    static std::map<std::pair<int, int>, WebOrder> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    WebOrder order;
    std::vector<Web> webs = enumerate_webs(n, r);
    for (std::size_t k = 0; k < webs.size(); ++k) order.index[webs[k]] = static_cast<int>(k);
    std::size_t count = webs.size();
    order.reach.assign(count, std::vector<int>(count, 0));
    for (std::size_t k = 0; k < count; ++k) {
        std::queue<int> frontier;
        frontier.push(static_cast<int>(k));
        order.reach[k][k] = 1;
        while (!frontier.empty()) {
            int cur = frontier.front();
            frontier.pop();
            for (const auto& [i, up] : web_covers_up(webs[cur])) {
                int u = order.index.at(up);
                if (!order.reach[k][u]) {
                    order.reach[k][u] = 1;
                    frontier.push(u);
                }
            }
        }
    }
    return cache.emplace(key, std::move(order)).first->second;
}

}  // namespace detail

inline bool order_leq(const Web& w, const Web& w2) {
    require(w.n == w2.n && w.r == w2.r, "order_leq compares webs of equal type");
    const detail::WebOrder& order = detail::web_order(w.n, w.r);
    return order.reach[order.index.at(w)][order.index.at(w2)] != 0;
}

}  // namespace qweb
