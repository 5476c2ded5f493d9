#pragma once

/**
 * @file lhp.hpp
 * @brief The monoid ring of generalized polynomials with exponents in LHP.
 *
 * LHP is the additive monoid of linear homogeneous forms
 * a1*X1 + ... + an*Xn with nonnegative integer coefficients. A generalized
 * polynomial is an integer combination of monomials X^p with p in LHP.
 * Substituting a length type L for (X1,...,Xn) turns a generalized
 * polynomial into an ordinary one; colliding exponents sum.
 */

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "weq/errors.hpp"
#include "weq/integer.hpp"
#include "weq/polyring.hpp"

namespace weq {

/// Vector of image lengths (|h(x1)|, ..., |h(xn)|).
using LengthType = std::vector<std::int64_t>;

struct LinearForm {
    std::vector<std::int64_t> coeffs; // all >= 0

    LinearForm() = default;
    explicit LinearForm(std::vector<std::int64_t> cs) : coeffs(std::move(cs)) {
        for (auto c : coeffs)
            if (c < 0) throw domain_error("LinearForm: negative coefficient");
    }

    static LinearForm zero(std::size_t dim) { return LinearForm(std::vector<std::int64_t>(dim, 0)); }

    static LinearForm unit(std::size_t dim, std::size_t i) {
        std::vector<std::int64_t> cs(dim, 0);
        cs.at(i) = 1;
        return LinearForm(std::move(cs));
    }

    std::size_t dim() const { return coeffs.size(); }

    friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
        if (a.dim() != b.dim()) throw shape_error("LinearForm: dimension mismatch");
        LinearForm r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
        return r;
    }

    std::int64_t evaluate(const LengthType& L) const {
        if (L.size() != dim()) throw shape_error("LinearForm: dimension mismatch with length type");
        std::int64_t v = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * L[i];
        return v;
    }

    bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
    bool operator!=(const LinearForm& o) const { return coeffs != o.coeffs; }
    bool operator<(const LinearForm& o) const { return coeffs < o.coeffs; }

    /// "2X1+X3" style; the zero form prints as "0".
    std::string to_string() const {
        std::ostringstream out;
        bool any = false;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            if (any) out << "+";
            if (coeffs[i] != 1) out << coeffs[i];
            out << "X" << (i + 1);
            any = true;
        }
        return any ? out.str() : "0";
    }
};

/// The partial order on LHP: componentwise <=; implies p(L) <= q(L) on N^n.
inline bool precedes(const LinearForm& p, const LinearForm& q) {
    if (p.dim() != q.dim()) throw shape_error("precedes: dimension mismatch");
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] > q.coeffs[i]) return false;
    return true;
}

class GenPoly {
public:
    explicit GenPoly(std::size_t dim) : dim_(dim) {}

    static GenPoly monomial(const LinearForm& p, const Int& c) {
        GenPoly g(p.dim());
        g.add_term(p, c);
        return g;
    }

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Terms in canonical order (lexicographic on the coefficient vector).
    const std::map<std::vector<std::int64_t>, Int>& terms() const { return terms_; }

    void add_term(const LinearForm& p, const Int& c) {
        if (p.dim() != dim_) throw shape_error("GenPoly: form dimension mismatch");
        if (c == 0) return;
        auto it = terms_.find(p.coeffs);
        if (it == terms_.end()) {
            terms_.emplace(p.coeffs, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GenPoly& operator+=(const GenPoly& o) {
        check_dim(o);
        for (const auto& [p, c] : o.terms_) add_term(LinearForm(p), c);
        return *this;
    }
    GenPoly& operator-=(const GenPoly& o) {
        check_dim(o);
        for (const auto& [p, c] : o.terms_) add_term(LinearForm(p), -c);
        return *this;
    }
    friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
    friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }

    GenPoly operator-() const {
        GenPoly r(dim_);
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }

    friend GenPoly operator*(const GenPoly& a, const GenPoly& b) {
        a.check_dim(b);
        GenPoly r(a.dim_);
        for (const auto& [pa, ca] : a.terms_) {
            for (const auto& [pb, cb] : b.terms_) {
                std::vector<std::int64_t> p = pa;
                for (std::size_t i = 0; i < p.size(); ++i) p[i] += pb[i];
                r.add_term(LinearForm(std::move(p)), ca * cb);
            }
        }
        return r;
    }
    GenPoly& operator*=(const GenPoly& o) { return *this = *this * o; }

    bool operator==(const GenPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const GenPoly& o) const { return !(*this == o); }

    /// "X^{X1+X2} - X^{X1+X2+X3} - 1 + X^{X3}" style, canonical term order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            const bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            const LinearForm form{std::vector<std::int64_t>(p)};
            const bool constant = form.to_string() == "0";
            if (constant) {
                out << mag.str();
            } else {
                if (mag != 1) out << mag.str() << "*";
                out << "X^{" << form.to_string() << "}";
            }
        }
        return out.str();
    }

private:
    void check_dim(const GenPoly& o) const {
        if (dim_ != o.dim_) throw shape_error("GenPoly: dimension mismatch");
    }

    std::size_t dim_;
    std::map<std::vector<std::int64_t>, Int> terms_;
};

/// Substitute L for (X1,...,Xn): each c*X^p becomes c*X^(p(L)).
inline IntPoly evaluate_at(const GenPoly& g, const LengthType& L) {
    if (L.size() != g.dim()) throw shape_error("evaluate_at: dimension mismatch");
    for (auto l : L)
        if (l < 0) throw domain_error("evaluate_at: negative length entry");
    IntPoly r;
    for (const auto& [p, c] : g.terms()) {
        std::int64_t e = 0;
        for (std::size_t i = 0; i < p.size(); ++i) e += p[i] * L[i];
        r.add_term(e, c);
    }
    return r;
}

struct SignSplit {
    std::vector<LinearForm> positives;
    std::vector<LinearForm> negatives;
};

/// Writes g as sum of X^p minus sum of X^q with multiplicities expanded.
/// No form appears on both sides, since g is stored cancelled.
inline SignSplit split_signs(const GenPoly& g) {
    SignSplit s;
    for (const auto& [p, c] : g.terms()) {
        auto& bucket = (c > 0) ? s.positives : s.negatives;
        Int mag = c > 0 ? c : Int(-c);
        for (Int t = 0; t < mag; ++t) bucket.push_back(LinearForm{std::vector<std::int64_t>(p)});
    }
    return s;
}

} // namespace weq
