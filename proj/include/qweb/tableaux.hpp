#pragma once

#include <qweb/laurent.hpp>

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace qweb {

// Weakly decreasing positive parts; d is their sum.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
            require(parts[k] > 0, "partition parts must be positive");
            require(k == 0 || parts[k - 1] >= parts[k], "partition parts must weakly decrease");
        }
    }

    int d() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    Partition conjugate() const {
        std::vector<int> c;
        for (int col = 0; !parts.empty() && col < parts[0]; ++col) {
            int h = 0;
            for (int p : parts)
                if (p > col) ++h;
            c.push_back(h);
        }
        return Partition(std::move(c));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

// Images of 1..d; one_line[i-1] = p(i).
struct Permutation {
    std::vector<int> one_line;

    static Permutation identity(int d) {
        Permutation p;
        p.one_line.resize(d);
        std::iota(p.one_line.begin(), p.one_line.end(), 1);
        return p;
    }

    static Permutation from_one_line(std::vector<int> img) {
        Permutation p;
        p.one_line = std::move(img);
        std::vector<bool> seen(p.one_line.size(), false);
        for (int v : p.one_line) {
            require(v >= 1 && v <= static_cast<int>(p.one_line.size()) && !seen[v - 1],
                    "one-line form must be a bijection on 1..d");
            seen[v - 1] = true;
        }
        return p;
    }

    int degree() const { return static_cast<int>(one_line.size()); }
    int apply(int i) const { return one_line[i - 1]; }

    Permutation inverse() const {
        Permutation p;
        p.one_line.resize(one_line.size());
        for (int i = 1; i <= degree(); ++i) p.one_line[apply(i) - 1] = i;
        return p;
    }

    // (a*b)(i) = a(b(i)); the right factor acts first.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        require(a.degree() == b.degree(), "degree mismatch in permutation product");
        Permutation p;
        p.one_line.resize(a.one_line.size());
        for (int i = 1; i <= a.degree(); ++i) p.one_line[i - 1] = a.apply(b.apply(i));
        return p;
    }

    // Right multiplication by s_i swaps positions i, i+1 of the one-line form.
    Permutation times_simple(int i) const {
        require(i >= 1 && i < degree(), "simple reflection index out of range");
        Permutation p = *this;
        std::swap(p.one_line[i - 1], p.one_line[i]);
        return p;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.one_line == b.one_line;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.one_line < b.one_line;
    }
};

inline Permutation word_to_perm(int d, const std::vector<int>& word) {
    Permutation w = Permutation::identity(d);
    for (int i : word) w = w.times_simple(i);
    return w;
}

inline int permutation_length(const Permutation& p) {
    int inv = 0;
    for (int i = 1; i <= p.degree(); ++i)
        for (int j = i + 1; j <= p.degree(); ++j)
            if (p.apply(i) > p.apply(j)) ++inv;
    return inv;
}

// Strips right descents; the collected labels, reversed, satisfy
// w = s_{i_1} ... s_{i_m} with m = permutation_length(w).
inline std::vector<int> reduced_word(Permutation w) {
    std::vector<int> word;
    for (;;) {
        int i = 0;
        for (int k = 1; k < w.degree(); ++k)
            if (w.apply(k) > w.apply(k + 1)) {
                i = k;
                break;
            }
        if (i == 0) break;
        w = w.times_simple(i);
        word.push_back(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        std::vector<int> parts;
        for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
        return Partition(std::move(parts));
    }

    int d() const {
        int n = 0;
        for (const auto& r : rows) n += static_cast<int>(r.size());
        return n;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows; }
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows < b.rows; }
};

inline bool is_standard(const Tableau& t) {
    int d = t.d();
    std::vector<bool> seen(d + 1, false);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r + 1 < t.rows.size() && t.rows[r + 1].size() > t.rows[r].size()) return false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            int v = t.rows[r][c];
            if (v < 1 || v > d || seen[v]) return false;
            seen[v] = true;
            if (c > 0 && t.rows[r][c - 1] >= v) return false;
            if (r > 0 && t.rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

inline Tableau transpose_tableau(const Tableau& t) {
    Tableau u;
    if (t.rows.empty()) return u;
    u.rows.resize(t.rows[0].size());
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) u.rows[c].push_back(row[c]);
    return u;
}

// t^lambda: rows filled left to right, top row first.
inline Tableau superstandard(const Partition& shape) {
    Tableau t;
    int next = 1;
    for (int len : shape.parts) {
        std::vector<int> row(len);
        std::iota(row.begin(), row.end(), next);
        next += len;
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Left-to-right, top-to-bottom.
inline std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (const auto& r : t.rows) w.insert(w.end(), r.begin(), r.end());
    return w;
}

// Entries i and i+1 swapped; second component reports standardness.  When the
// swap breaks standardness the original tableau is returned alongside false.
inline std::pair<Tableau, bool> apply_simple(const Tableau& t, int i) {
    require(i >= 1 && i < t.d(), "entry swap index out of range");
    Tableau u = t;
    for (auto& row : u.rows)
        for (auto& v : row) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
    bool std_after = is_standard(u);
    return {std_after ? u : t, std_after};
}

// (t.sigma)(box) = sigma^{-1}(t(box)); a right action on tableaux.
inline Tableau act_entries(const Tableau& t, const Permutation& sigma) {
    Permutation inv = sigma.inverse();
    Tableau u = t;
    for (auto& row : u.rows)
        for (auto& v : row) v = inv.apply(v);
    return u;
}

// eta_inverse(t) is the permutation tau with superstandard(shape).tau = t.
inline Permutation eta_inverse(const Tableau& t) {
    return Permutation::from_one_line(reading_word(t)).inverse();
}

// All standard tableaux of the shape, by ascending reading word.
inline std::vector<Tableau> enumerate_std(const Partition& shape) {
    std::vector<Tableau> out;
    Tableau t;
    t.rows.resize(shape.parts.size());
    int d = shape.d();
    auto fill = [&](auto&& self, int next) -> void {
        if (next > d) {
            out.push_back(t);
            return;
        }
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            std::size_t c = t.rows[r].size();
            if (c >= static_cast<std::size_t>(shape.parts[r])) continue;
            if (r > 0 && t.rows[r - 1].size() <= c) continue;
            t.rows[r].push_back(next);
            self(self, next + 1);
            t.rows[r].pop_back();
        }
    };
    fill(fill, 1);
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return reading_word(a) < reading_word(b); });
    return out;
}

// All covers t <_i t.s_i: i precedes i+1 in the reading word and the swap
// stays standard.
inline std::vector<std::pair<int, Tableau>> bruhat_covers_up(const Tableau& t) {
    std::vector<std::pair<int, Tableau>> covers;
    std::vector<int> rw = reading_word(t);
    std::vector<int> pos(t.d() + 1);
    for (std::size_t k = 0; k < rw.size(); ++k) pos[rw[k]] = static_cast<int>(k);
    for (int i = 1; i < t.d(); ++i) {
        if (pos[i] > pos[i + 1]) continue;
        auto [u, ok] = apply_simple(t, i);
        if (ok) covers.emplace_back(i, u);
    }
    return covers;
}

// Deterministic cover chain from the superstandard tableau up to t: walking
// down, always strip the smallest admissible label.
inline std::vector<int> reduced_word_to(const Tableau& t) {
    require(is_standard(t), "reduced_word_to needs a standard tableau");
    Tableau cur = t;
    Tableau bottom = superstandard(t.shape());
    std::vector<int> word;
    while (!(cur == bottom)) {
        std::vector<int> rw = reading_word(cur);
        std::vector<int> pos(cur.d() + 1);
        for (std::size_t k = 0; k < rw.size(); ++k) pos[rw[k]] = static_cast<int>(k);
        bool moved = false;
        for (int i = 1; i < cur.d() && !moved; ++i) {
            if (pos[i + 1] > pos[i]) continue;
            auto [u, ok] = apply_simple(cur, i);
            if (!ok) continue;
            word.push_back(i);
            cur = u;
            moved = true;
        }
        require(moved, "cover walk stuck before reaching the superstandard tableau");
    }
    std::reverse(word.begin(), word.end());
    return word;
}

// The unique permutation with (t^lambda . sigma_lambda)^T = t^{lambda^T}.
inline Permutation sigma_lambda(const Partition& shape) {
    Tableau target = transpose_tableau(superstandard(shape.conjugate()));
    return eta_inverse(target);
}

}  // namespace qweb
