#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qweb/laurent.hpp"
#include "qweb/tableaux.hpp"

namespace qweb {

// One-line forms packed four bits per position, leftmost position in the
// highest nibble, so numeric key order is lex order on one-line words.
using PermKey = std::uint64_t;

inline PermKey pack_perm(const Permutation& w) {
    require(w.degree() <= 16, "packed permutation keys support degree at most 16");
    PermKey k = 0;
    for (int i = 0; i < w.degree(); ++i)
        k |= static_cast<PermKey>(w.one_line[i] - 1) << (4 * (15 - i));
    return k;
}

inline Permutation unpack_perm(PermKey k, int d) {
    std::vector<int> img(d);
    for (int i = 0; i < d; ++i) img[i] = static_cast<int>((k >> (4 * (15 - i))) & 0xf) + 1;
    return Permutation::from_one_line(std::move(img));
}

namespace detail {

inline int key_entry(PermKey k, int pos) {
    return static_cast<int>((k >> (4 * (15 - pos))) & 0xf) + 1;
}

// Swaps one-line positions i, i+1 (1-based), i.e. right-multiplies by s_i.
inline PermKey key_swap(PermKey k, int i) {
    int a = 4 * (15 - (i - 1));
    int b = 4 * (15 - i);
    PermKey x = ((k >> a) ^ (k >> b)) & 0xf;
    return k ^ ((x << a) | (x << b));
}

}  // namespace detail

// Element of the Hecke algebra H_d(q) written in the T_w basis.
struct HeckeElement {
    int d = 0;
    std::map<PermKey, Laurent> terms;

    explicit HeckeElement(int degree) : d(degree) {}

    static HeckeElement unit(int degree) {
        HeckeElement h(degree);
        h.terms.emplace(pack_perm(Permutation::identity(degree)), Laurent::one());
        return h;
    }

    static HeckeElement basis(const Permutation& w) {
        HeckeElement h(w.degree());
        h.terms.emplace(pack_perm(w), Laurent::one());
        return h;
    }

    bool is_zero() const { return terms.empty(); }

    Laurent coeff(PermKey k) const {
        auto it = terms.find(k);
        return it == terms.end() ? Laurent::zero() : it->second;
    }

    void add(PermKey k, const Laurent& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        require(d == o.d, "degree mismatch in Hecke sum");
        for (const auto& [k, c] : o.terms) add(k, c);
        return *this;
    }

    HeckeElement scaled(const Laurent& c) const {
        HeckeElement h(d);
        if (c.is_zero()) return h;
        for (const auto& [k, v] : terms) h.terms.emplace(k, v * c);
        return h;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.d == b.d && a.terms == b.terms;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }
};

// Right multiplication by a generator: T_w T_i = T_{w s_i} when w(i) < w(i+1),
// and (q - q^-1) T_w + T_{w s_i} otherwise.
inline HeckeElement mult_generator(const HeckeElement& h, int i) {
    require(i >= 1 && i < h.d, "generator index out of range");
    static const Laurent q_minus_qinv =
        Laurent::monomial(1, 1) + Laurent::monomial(-1, -1);
    HeckeElement out(h.d);
    for (const auto& [k, c] : h.terms) {
        if (detail::key_entry(k, i - 1) < detail::key_entry(k, i)) {
            out.add(detail::key_swap(k, i), c);
        } else {
            out.add(k, c * q_minus_qinv);
            out.add(detail::key_swap(k, i), c);
        }
    }
    return out;
}

inline HeckeElement mult_element(const HeckeElement& a, const HeckeElement& b) {
    require(a.d == b.d, "degree mismatch in Hecke product");
    HeckeElement out(a.d);
    for (const auto& [k, c] : b.terms) {
        HeckeElement cur = a;
        for (int i : reduced_word(unpack_perm(k, a.d))) cur = mult_generator(cur, i);
        out += cur.scaled(c);
    }
    return out;
}

namespace detail {

// The block-diagonal subgroup with consecutive blocks sized by the parts,
// each element paired with its Coxeter length (inversions stay in-block).
inline std::vector<std::pair<Permutation, int>> block_subgroup(const Partition& shape) {
    const int d = shape.d();
    std::vector<std::pair<Permutation, int>> out;
    out.emplace_back(Permutation::identity(d), 0);
    int start = 0;
    for (int len : shape.parts) {
        std::vector<int> arr(len);
        std::iota(arr.begin(), arr.end(), start + 1);
        std::vector<std::pair<std::vector<int>, int>> fills;
        do {
            int inv = 0;
            for (int a = 0; a < len; ++a)
                for (int b = a + 1; b < len; ++b)
                    if (arr[a] > arr[b]) ++inv;
            fills.emplace_back(arr, inv);
        } while (std::next_permutation(arr.begin(), arr.end()));
        std::vector<std::pair<Permutation, int>> next;
        next.reserve(out.size() * fills.size());
        for (const auto& [w, l] : out)
            for (const auto& [fill, inv] : fills) {
                Permutation w2 = w;
                std::copy(fill.begin(), fill.end(), w2.one_line.begin() + start);
                next.emplace_back(std::move(w2), l + inv);
            }
        out = std::move(next);
        start += len;
    }
    return out;
}

}  // namespace detail

// x = sum over the block subgroup of q^len(w) T_w.
inline HeckeElement element_x(const Partition& shape) {
    HeckeElement h(shape.d());
    for (const auto& [w, l] : detail::block_subgroup(shape))
        h.add(pack_perm(w), Laurent::monomial(l, 1));
    return h;
}

// y = sum over the block subgroup of (-1)^len(w) q^-len(w) T_w.
inline HeckeElement element_y(const Partition& shape) {
    HeckeElement h(shape.d());
    for (const auto& [w, l] : detail::block_subgroup(shape))
        h.add(pack_perm(w), Laurent::monomial(-l, l % 2 == 0 ? 1 : -1));
    return h;
}

// z = x_shape T_sigma y_shape' generates the Specht module of the shape as a
// right H_d(q)-module.
inline HeckeElement element_z(const Partition& shape) {
    HeckeElement h = element_x(shape);
    for (int i : reduced_word(sigma_lambda(shape))) h = mult_generator(h, i);
    return mult_element(h, element_y(shape.conjugate()));
}

// Standard basis v_t = z T_{eta^-1(t)} for t standard of the conjugate shape,
// in enumeration order.
inline std::vector<std::pair<Tableau, HeckeElement>> standard_basis(const Partition& shape) {
    const HeckeElement z = element_z(shape);
    std::vector<std::pair<Tableau, HeckeElement>> out;
    for (const Tableau& t : enumerate_std(shape.conjugate())) {
        HeckeElement v = z;
        for (int i : reduced_word(eta_inverse(t))) v = mult_generator(v, i);
        out.emplace_back(t, std::move(v));
    }
    return out;
}

// z y_shape' is a nonzero scalar multiple of z; returns that scalar.
inline Laurent check_key_lemma(const Partition& shape) {
    const HeckeElement z = element_z(shape);
    require(!z.is_zero(), "module generator vanished");
    const HeckeElement zy = mult_element(z, element_y(shape.conjugate()));
    const auto& [k0, c0] = *z.terms.begin();
    auto c = zy.coeff(k0).divide_exact(c0);
    require(c.has_value(), "scalar is not a Laurent polynomial");
    require(zy == z.scaled(*c), "z y is not proportional to z");
    require(!c->is_zero(), "proportionality scalar vanished");
    return *c;
}

namespace detail {

inline Int eval_at_base(const Laurent& p, const Int& base, int shift) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) {
        require(e + shift >= 0, "evaluation shift too small");
        s += c * boost::multiprecision::pow(base, static_cast<unsigned>(e + shift));
    }
    return s;
}

// Greedily picks support keys whose basis-coefficient submatrix is
// invertible. A nonzero determinant of an integer evaluation certifies a
// nonzero Laurent determinant, so the integer scan is exact evidence.
inline std::vector<PermKey> select_pivot_keys(const std::vector<HeckeElement>& basis) {
    const int n = static_cast<int>(basis.size());
    std::vector<PermKey> cand;
    std::set<PermKey> seen;
    auto push = [&](PermKey k) {
        if (seen.insert(k).second) cand.push_back(k);
    };
    for (const auto& b : basis)
        if (!b.terms.empty()) push(b.terms.rbegin()->first);
    for (const auto& b : basis)
        if (!b.terms.empty()) push(b.terms.begin()->first);
    std::set<PermKey> all;
    for (const auto& b : basis)
        for (const auto& [k, c] : b.terms) all.insert(k);
    for (PermKey k : all) push(k);

    int shift = 0;
    for (const auto& b : basis)
        for (const auto& [k, c] : b.terms) shift = std::max(shift, -c.min_exp());

    for (const int base_int : {3, 5, 7, 11, 13}) {
        const Int base = base_int;
        std::vector<std::vector<Int>> ech;
        std::vector<int> pivot_col;
        std::vector<PermKey> chosen;
        for (PermKey k : cand) {
            if (static_cast<int>(chosen.size()) == n) break;
            std::vector<Int> row(n);
            for (int j = 0; j < n; ++j) {
                auto it = basis[j].terms.find(k);
                if (it != basis[j].terms.end()) row[j] = eval_at_base(it->second, base, shift);
            }
            for (std::size_t r = 0; r < ech.size(); ++r) {
                const int pc = pivot_col[r];
                if (row[pc] == 0) continue;
                const Int a = ech[r][pc], b2 = row[pc];
                for (int j = 0; j < n; ++j) row[j] = row[j] * a - ech[r][j] * b2;
            }
            Int g = 0;
            for (const Int& v : row) g = boost::multiprecision::gcd(g, v);
            if (g > 1)
                for (Int& v : row) v /= g;
            int pc = -1;
            for (int j = 0; j < n; ++j)
                if (row[j] != 0) {
                    pc = j;
                    break;
                }
            if (pc < 0) continue;
            ech.push_back(std::move(row));
            pivot_col.push_back(pc);
            chosen.push_back(k);
        }
        if (static_cast<int>(chosen.size()) == n) return chosen;
    }
    require(false, "no invertible coefficient submatrix found");
    return {};
}

}  // namespace detail

// Solves coordinate systems over one fixed basis. The elimination is
// fraction-free (every division is exact by the Sylvester identity) and each
// returned solution is re-verified against the full supports.
class SpanSolver {
public:
    explicit SpanSolver(std::vector<HeckeElement> basis) : basis_(std::move(basis)) {
        require(!basis_.empty(), "empty basis");
        d_ = basis_[0].d;
        keys_ = detail::select_pivot_keys(basis_);
        factor();
    }

    int size() const { return static_cast<int>(basis_.size()); }
    const std::vector<HeckeElement>& basis() const { return basis_; }

    // Coordinates of target in the span, or nullopt when no Laurent-entry
    // solution exists.
    std::optional<std::vector<Laurent>> solve(const HeckeElement& target) const {
        const int n = size();
        std::vector<Laurent> b(n, Laurent::zero());
        for (int i = 0; i < n; ++i) b[i] = target.coeff(keys_[i]);
        for (const Step& s : steps_) {
            std::swap(b[s.k], b[s.swap_with]);
            for (int i = s.k + 1; i < n; ++i) {
                auto nb = (b[i] * s.pivot - s.mult[i - s.k - 1] * b[s.k]).divide_exact(s.prev);
                require(nb.has_value(), "fraction-free elimination failed");
                b[i] = *nb;
            }
        }
        std::vector<Laurent> x(n, Laurent::zero());
        for (int i = n - 1; i >= 0; --i) {
            Laurent num = b[i];
            for (int j = i + 1; j < n; ++j) num -= u_[i][j] * x[j];
            auto quot = num.divide_exact(u_[i][i]);
            if (!quot.has_value()) return std::nullopt;
            x[i] = *quot;
        }
        HeckeElement acc(d_);
        for (int j = 0; j < n; ++j) acc += basis_[j].scaled(x[j]);
        if (acc != target) return std::nullopt;
        return x;
    }

private:
    struct Step {
        int k = 0;
        int swap_with = 0;
        Laurent pivot, prev;
        std::vector<Laurent> mult;
    };

    void factor() {
        const int n = size();
        u_.assign(n, std::vector<Laurent>(n, Laurent::zero()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) u_[i][j] = basis_[j].coeff(keys_[i]);
        Laurent prev = Laurent::one();
        for (int k = 0; k < n; ++k) {
            int p = k;
            while (p < n && u_[p][k].is_zero()) ++p;
            require(p < n, "pivot key selection produced a singular system");
            std::swap(u_[k], u_[p]);
            Step st;
            st.k = k;
            st.swap_with = p;
            st.pivot = u_[k][k];
            st.prev = prev;
            for (int i = k + 1; i < n; ++i) {
                st.mult.push_back(u_[i][k]);
                for (int j = k + 1; j < n; ++j) {
                    auto nv = (u_[i][j] * st.pivot - u_[i][k] * u_[k][j]).divide_exact(prev);
                    require(nv.has_value(), "fraction-free elimination failed");
                    u_[i][j] = *nv;
                }
                u_[i][k] = Laurent::zero();
            }
            prev = st.pivot;
            steps_.push_back(std::move(st));
        }
    }

    std::vector<HeckeElement> basis_;
    int d_ = 0;
    std::vector<PermKey> keys_;
    std::vector<std::vector<Laurent>> u_;
    std::vector<Step> steps_;
};

inline std::optional<std::vector<Laurent>> express_in_basis(
    const std::vector<HeckeElement>& basis, const HeckeElement& target) {
    return SpanSolver(basis).solve(target);
}

using ActionMatrix = std::vector<std::vector<Laurent>>;

// Right-action matrices of the generators T_1..T_{d-1} on the standard basis,
// rows and columns indexed by `order`; column k of matrices[i-1] holds the
// coordinates of v_{order[k]} T_i.
inline std::vector<ActionMatrix> action_matrix_standard(const Partition& shape,
                                                        const std::vector<Tableau>& order) {
    auto pairs = standard_basis(shape);
    require(order.size() == pairs.size(), "order must list every standard tableau");
    std::vector<HeckeElement> basis;
    basis.reserve(order.size());
    for (const Tableau& t : order) {
        auto it = std::find_if(pairs.begin(), pairs.end(),
                               [&](const auto& p) { return p.first == t; });
        require(it != pairs.end(), "unknown tableau in basis order");
        basis.push_back(it->second);
    }
    const SpanSolver solver(std::move(basis));
    const int n = solver.size();
    std::vector<ActionMatrix> out;
    for (int i = 1; i < shape.d(); ++i) {
        ActionMatrix m(n, std::vector<Laurent>(n, Laurent::zero()));
        for (int k = 0; k < n; ++k) {
            auto x = solver.solve(mult_generator(solver.basis()[k], i));
            require(x.has_value(), "generator image left the span of the standard basis");
            for (int row = 0; row < n; ++row) m[row][k] = (*x)[row];
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<ActionMatrix> action_matrix_standard(const Partition& shape) {
    std::vector<Tableau> order;
    for (const Tableau& t : enumerate_std(shape.conjugate())) order.push_back(t);
    return action_matrix_standard(shape, order);
}

}  // namespace qweb
