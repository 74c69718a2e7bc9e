#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qweb {

using Int = boost::multiprecision::cpp_int;

// Always-on invariant check; these guards must survive release builds because
// several algorithms rely on them as run-time certificates, not debug aids.
inline void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

// Element of Z[q, q^-1], stored sparsely as exponent -> nonzero coefficient.
class Laurent {
  public:
    Laurent() = default;

    static Laurent zero() { return Laurent{}; }
    static Laurent one() { return monomial(0, 1); }

    static Laurent monomial(int exp, Int coeff) {
        Laurent p;
        if (coeff != 0) p.terms_[exp] = std::move(coeff);
        return p;
    }

    const std::map<int, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    int min_exp() const {
        require(!terms_.empty(), "min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    int max_exp() const {
        require(!terms_.empty(), "max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
        return p;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent operator-() const {
        Laurent p;
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    // Ordering is only needed so Laurent can key ordered containers.
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

    Laurent scaled(const Int& k) const {
        Laurent p;
        if (k == 0) return p;
        for (const auto& [e, c] : terms_) p.terms_[e] = c * k;
        return p;
    }

    // Multiplication by q^k.
    Laurent shifted(int k) const {
        Laurent p;
        for (const auto& [e, c] : terms_) p.terms_[e + k] = c;
        return p;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool has_nonnegative_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    // The coefficient run from min_exp to max_exp, interior zeros included,
    // reads the same in both directions.  Zero counts as palindromic.
    bool is_palindromic() const {
        if (terms_.empty()) return true;
        int lo = min_exp(), hi = max_exp();
        for (int e = lo; lo + hi - e >= e; ++e)
            if (coeff(e) != coeff(lo + hi - e)) return false;
        return true;
    }

    // Exact division in Z[q, q^-1]: returns a quotient u with u*d == *this,
    // or nullopt when none exists.  Monomial shifts make both operands
    // ordinary polynomials first, so plain long division applies.
    std::optional<Laurent> divide_exact(const Laurent& d) const {
        require(!d.is_zero(), "division by zero polynomial");
        if (is_zero()) return Laurent{};
        Laurent num = shifted(-min_exp());
        Laurent den = d.shifted(-d.min_exp());
        int shift = min_exp() - d.min_exp();
        Laurent quot;
        const Int& lead = den.terms_.rbegin()->second;
        while (!num.is_zero()) {
            int e = num.max_exp();
            if (e < den.max_exp()) return std::nullopt;
            const Int& c = num.terms_.rbegin()->second;
            if (c % lead != 0) return std::nullopt;
            Laurent t = monomial(e - den.max_exp(), c / lead);
            quot += t;
            num -= t * den;
        }
        return quot.shifted(shift);
    }

    // Descending exponents; q^1 prints as q, q^0 as a bare integer, and a
    // unit coefficient on a q power is omitted: "q^3+q", "q+q^-1", "-q^-1".
    std::string pretty() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Int a = c;
            if (first) {
                if (a < 0) {
                    out << '-';
                    a = -a;
                }
            } else {
                out << (a < 0 ? '-' : '+');
                if (a < 0) a = -a;
            }
            if (e == 0) {
                out << a;
            } else {
                if (a != 1) out << a;
                out << 'q';
                if (e != 1) out << '^' << e;
            }
            first = false;
        }
        return out.str();
    }

  private:
    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, Int> terms_;
};

// [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}; [0] = 0.
inline Laurent quantum_int(int k) {
    require(k >= 0, "quantum_int of negative k");
    Laurent p;
    for (int j = 0; j < k; ++j) p += Laurent::monomial(k - 1 - 2 * j, 1);
    return p;
}

// [k]! = [1][2]...[k]; [0]! = 1.
inline Laurent quantum_factorial(int k) {
    Laurent p = Laurent::one();
    for (int j = 1; j <= k; ++j) p *= quantum_int(j);
    return p;
}

}  // namespace qweb
