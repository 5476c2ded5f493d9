#pragma once

/**
 * @file polyring.hpp
 * @brief Exact univariate integer polynomials and polynomial matrices.
 *
 * Polynomials are kept sparse (degree -> nonzero coefficient), with
 * arbitrary-precision coefficients. Matrix rank and determinant use
 * fraction-free (Bareiss) elimination, so all intermediate values stay in
 * Z[X] and the rank is the rank over the fraction field Q(X).
 */

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weq/errors.hpp"
#include "weq/integer.hpp"

namespace weq {

class IntPoly {
public:
    IntPoly() = default;

    IntPoly(const Int& constant) {
        if (constant != 0) terms_[0] = constant;
    }
    IntPoly(long long constant) : IntPoly(Int(constant)) {}

    static IntPoly monomial(std::int64_t degree, const Int& coeff) {
        IntPoly p;
        if (coeff != 0) p.terms_[degree] = coeff;
        return p;
    }

    /// Dense construction from ascending coefficients, for tests and literals.
    static IntPoly from_coeffs(const std::vector<Int>& coeffs) {
        IntPoly p;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] != 0) p.terms_[static_cast<std::int64_t>(i)] = coeffs[i];
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Degree, with the convention deg(0) = -1.
    std::int64_t degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    Int coeff(std::int64_t degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int leading_coeff() const { return terms_.empty() ? Int(0) : terms_.rbegin()->second; }

    const std::map<std::int64_t, Int>& terms() const { return terms_; }

    void add_term(std::int64_t degree, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(degree);
        if (it == terms_.end()) {
            terms_.emplace(degree, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    IntPoly& operator+=(const IntPoly& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    IntPoly operator-() const {
        IntPoly r;
        for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
        return r;
    }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly& operator*=(const Int& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [d, c] : terms_) c *= k;
        return *this;
    }
    friend IntPoly operator*(IntPoly p, const Int& k) { return p *= k; }
    friend IntPoly operator*(const Int& k, IntPoly p) { return p *= k; }

    /// Multiplication by X^k (k >= 0).
    IntPoly shifted(std::int64_t k) const {
        IntPoly r;
        for (const auto& [d, c] : terms_) r.terms_.emplace(d + k, c);
        return r;
    }

    Int evaluate(const Int& x) const {
        // Horner over the sparse terms, highest degree first.
        Int acc = 0;
        std::int64_t prev = -1;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (prev >= 0) {
                for (std::int64_t i = prev; i > it->first; --i) acc *= x;
            }
            acc += it->second;
            prev = it->first;
        }
        if (prev > 0) {
            for (std::int64_t i = prev; i > 0; --i) acc *= x;
        }
        return acc;
    }

    bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const IntPoly& o) const { return terms_ != o.terms_; }
    bool operator<(const IntPoly& o) const { return terms_ < o.terms_; }

    /// Canonical text form: terms ascending, zero terms omitted, e.g.
    /// "1 + 2*X + X^2 + 2*X^3"; the zero polynomial prints as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            const bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            if (d == 0) {
                out << mag.str();
            } else {
                if (mag != 1) out << mag.str() << "*";
                out << "X";
                if (d != 1) out << "^" << d;
            }
        }
        return out.str();
    }

private:
    std::map<std::int64_t, Int> terms_;
};

/// Minimal-degree nonzero monomial of p, as (degree, coefficient).
inline std::pair<std::int64_t, Int> lowest_term(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("lowest_term: zero polynomial");
    const auto& t = *p.terms().begin();
    return {t.first, t.second};
}

/// (X^a - 1) / (X^n - 1) = 1 + X^n + ... + X^(a-n), for n | a.
inline IntPoly cyclic_quotient(std::int64_t a, std::int64_t n) {
    if (a <= 0 || n <= 0) throw domain_error("cyclic_quotient: arguments must be positive");
    if (a % n != 0) throw domain_error("cyclic_quotient: n does not divide a");
    IntPoly r;
    for (std::int64_t t = 0; t + n <= a; t += n) r.add_term(t, 1);
    return r;
}

namespace detail {

using RatPoly = std::map<std::int64_t, Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    for (const auto& [d, c] : p.terms()) r.emplace(d, Rat(c));
    return r;
}

inline void rat_sub_scaled(RatPoly& r, const Rat& factor, std::int64_t shift, const IntPoly& d) {
    for (const auto& [deg, c] : d.terms()) {
        auto key = deg + shift;
        auto it = r.find(key);
        Rat delta = factor * Rat(c);
        if (it == r.end()) {
            if (delta != 0) r.emplace(key, -delta);
        } else {
            it->second -= delta;
            if (it->second == 0) r.erase(it);
        }
    }
}

/// Long division of p by d over Q; returns {quotient, remainder}.
inline std::pair<RatPoly, RatPoly> rat_divide(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw domain_error("division by zero polynomial");
    RatPoly rem = to_rat(p);
    RatPoly quot;
    const std::int64_t dd = d.degree();
    const Rat dl(d.leading_coeff());
    while (!rem.empty() && rem.rbegin()->first >= dd) {
        const std::int64_t rd = rem.rbegin()->first;
        const Rat factor = rem.rbegin()->second / dl;
        quot[rd - dd] = factor;
        rat_sub_scaled(rem, factor, rd - dd, d);
    }
    return {std::move(quot), std::move(rem)};
}

/// Exact quotient in Z[X]; used by fraction-free elimination, where the
/// division is guaranteed to be exact. Throws std::logic_error otherwise.
inline IntPoly exact_quotient(const IntPoly& num, const IntPoly& den) {
    auto [q, r] = rat_divide(num, den);
    if (!r.empty()) throw std::logic_error("exact_quotient: nonzero remainder");
    IntPoly out;
    for (const auto& [deg, c] : q) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("exact_quotient: non-integer quotient");
        out.add_term(deg, boost::multiprecision::numerator(c));
    }
    return out;
}

} // namespace detail

/// True iff division of p by d over Q leaves zero remainder.
inline bool divides(const IntPoly& d, const IntPoly& p) {
    if (d.is_zero()) throw domain_error("divides: zero divisor");
    if (p.is_zero()) return true;
    return detail::rat_divide(p, d).second.empty();
}

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    explicit PolyMatrix(const std::vector<std::vector<IntPoly>>& grid)
        : rows_(grid.size()), cols_(grid.empty() ? 0 : grid.front().size()) {
        entries_.reserve(rows_ * cols_);
        for (const auto& row : grid) {
            if (row.size() != cols_) throw shape_error("PolyMatrix: ragged rows");
            for (const auto& e : row) entries_.push_back(e);
        }
    }

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = IntPoly(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    IntPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const IntPoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<IntPoly> entries_;
};

namespace detail {

/// Pivot rule: among nonzero candidates in column `col`, rows >= `from`,
/// pick minimal degree, ties broken by row index. Returns rows() if none.
inline std::size_t pick_pivot(const PolyMatrix& m, std::size_t from, std::size_t col) {
    std::size_t best = m.rows();
    std::int64_t best_deg = 0;
    for (std::size_t i = from; i < m.rows(); ++i) {
        const IntPoly& e = m.at(i, col);
        if (e.is_zero()) continue;
        if (best == m.rows() || e.degree() < best_deg) {
            best = i;
            best_deg = e.degree();
        }
    }
    return best;
}

inline void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

} // namespace detail

/// Rank over the fraction field Q(X), by fraction-free elimination.
inline std::size_t rank(const PolyMatrix& m) {
    PolyMatrix a = m;
    std::size_t r = 0;
    IntPoly prev(1);
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = detail::pick_pivot(a, r, col);
        if (piv == a.rows()) continue;
        detail::swap_rows(a, r, piv);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = col + 1; j < a.cols(); ++j) {
                a.at(i, j) = detail::exact_quotient(a.at(i, j) * a.at(r, col) - a.at(i, col) * a.at(r, j), prev);
            }
            a.at(i, col) = IntPoly();
        }
        prev = a.at(r, col);
        ++r;
    }
    return r;
}

/// Exact determinant by Bareiss elimination (square matrices only).
inline IntPoly det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw shape_error("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return IntPoly(1);
    PolyMatrix a = m;
    IntPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = detail::pick_pivot(a, k, k);
        if (piv == a.rows()) return IntPoly();
        if (piv != k) {
            detail::swap_rows(a, k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = detail::exact_quotient(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
            }
            a.at(i, k) = IntPoly();
        }
        prev = a.at(k, k);
    }
    IntPoly d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

} // namespace weq
