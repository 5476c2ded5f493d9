#pragma once

/**
 * @file nielsen.hpp
 * @brief Factorization of a solution through elementary transformations.
 *
 * Every solution h of an equation factors as theta o phi_m o ... o phi_1 o
 * alpha, where alpha erases the unknowns with empty images, each phi_i is an
 * elementary transformation (y -> xy regular, y -> x singular) and the
 * unknown-to-unknown part phi o alpha is itself a solution. The reduction is
 * the classical one: compare the leading unknowns of the two sides under the
 * current residual morphism, cancel equal pairs, strip the shorter image
 * from the longer one. Different reduction orders give different valid
 * factorizations; only the recorded postconditions are canonical.
 *
 * The stage morphisms f_k = phi_k o ... o phi_1 o alpha, the residuals g_k
 * with h = g_k o f_k, the occurrence matrices A_k = (|f_k(x_i)|_{x_j}) and
 * the coefficient matrices B_k with P(h(x_i)) = sum_j B_k[i][j] P(g_k(x_j))
 * are all reconstructed from the recorded steps.
 */

#include <cstdint>
#include <set>
#include <vector>

#include "weq/equations.hpp"
#include "weq/errors.hpp"
#include "weq/polyring.hpp"

namespace weq {

struct ElementaryTransformation {
    enum class Kind { regular, singular };
    Kind kind;
    std::size_t target; // y: the rewritten unknown
    std::size_t source; // x: y -> xy (regular) or y -> x (singular)

    bool operator==(const ElementaryTransformation& o) const {
        return kind == o.kind && target == o.target && source == o.source;
    }
};

/// A morphism from unknowns to words over unknowns.
struct IndexMorphism {
    std::vector<std::vector<std::size_t>> images;

    std::size_t size() const { return images.size(); }

    std::vector<std::size_t> apply(const std::vector<std::size_t>& w) const {
        std::vector<std::size_t> r;
        for (auto x : w) {
            const auto& img = images.at(x);
            r.insert(r.end(), img.begin(), img.end());
        }
        return r;
    }

    bool operator==(const IndexMorphism& o) const { return images == o.images; }
};

struct Decomposition {
    std::size_t n = 0;
    std::set<std::size_t> erased;               // alpha(x) = empty
    std::vector<ElementaryTransformation> steps; // phi_1 ... phi_m
    Morphism theta;

    std::size_t singular_count() const {
        std::size_t t = 0;
        for (const auto& s : steps)
            if (s.kind == ElementaryTransformation::Kind::singular) ++t;
        return t;
    }
};

namespace detail {

inline void substitute(std::vector<std::size_t>& w, const ElementaryTransformation& step) {
    std::vector<std::size_t> r;
    r.reserve(w.size() + 4);
    for (auto x : w) {
        if (x == step.target) {
            r.push_back(step.source);
            if (step.kind == ElementaryTransformation::Kind::regular) r.push_back(step.target);
        } else {
            r.push_back(x);
        }
    }
    w = std::move(r);
}

} // namespace detail

/// f_k = phi_k o ... o phi_1 o alpha, for 0 <= k <= #steps.
inline IndexMorphism stage_morphism(const Decomposition& d, std::size_t k) {
    if (k > d.steps.size()) throw index_error("stage_morphism: stage out of range");
    IndexMorphism f;
    f.images.resize(d.n);
    for (std::size_t x = 0; x < d.n; ++x)
        if (!d.erased.count(x)) f.images[x] = {x};
    for (std::size_t s = 0; s < k; ++s)
        for (auto& img : f.images) detail::substitute(img, d.steps[s]);
    return f;
}

/// g_k, the residual with h = g_k o f_k; g_m = theta, g_{k-1} = g_k o phi_k.
inline Morphism residual_morphism(const Decomposition& d, std::size_t k) {
    if (k > d.steps.size()) throw index_error("residual_morphism: stage out of range");
    Morphism g = d.theta;
    for (std::size_t s = d.steps.size(); s > k; --s) {
        const auto& step = d.steps[s - 1];
        Word im = g.images[step.source];
        if (step.kind == ElementaryTransformation::Kind::regular) im = im + g.images[step.target];
        g.images[step.target] = std::move(im);
    }
    return g;
}

/// The unknown-to-unknown solution phi o alpha = f_m.
inline IndexMorphism principal_solution(const Decomposition& d) {
    return stage_morphism(d, d.steps.size());
}

/// theta o phi_m o ... o phi_1 o alpha.
inline Morphism recompose(const Decomposition& d) {
    const IndexMorphism f = principal_solution(d);
    Morphism h;
    h.images.resize(d.n);
    for (std::size_t x = 0; x < d.n; ++x) {
        Word w;
        for (auto y : f.images[x]) w = w + d.theta.images[y];
        h.images[x] = std::move(w);
    }
    return h;
}

/// Factor a solution h of E through elementary transformations.
inline Decomposition decompose(const WordEquation& e, const Morphism& h) {
    if (h.size() != e.n) throw shape_error("decompose: arity mismatch");
    if (!is_solution(h, e)) throw not_a_solution_error("decompose: morphism does not solve the equation");

    Decomposition d;
    d.n = e.n;
    d.theta = h;
    for (std::size_t x = 0; x < e.n; ++x)
        if (h.images[x].empty()) d.erased.insert(x);

    auto strip_erased = [&](const std::vector<std::size_t>& side) {
        std::vector<std::size_t> r;
        for (auto x : side)
            if (!d.erased.count(x)) r.push_back(x);
        return r;
    };
    std::vector<std::size_t> lhs = strip_erased(e.lhs);
    std::vector<std::size_t> rhs = strip_erased(e.rhs);
    Morphism g = h; // residual

    auto metric = [&] {
        std::int64_t t = 0;
        for (auto x : lhs) t += static_cast<std::int64_t>(g.images[x].size());
        for (auto x : rhs) t += static_cast<std::int64_t>(g.images[x].size());
        return t;
    };
    std::int64_t last_metric = metric() + 1;

    for (;;) {
        while (!lhs.empty() && !rhs.empty() && lhs.front() == rhs.front()) {
            lhs.erase(lhs.begin());
            rhs.erase(rhs.begin());
        }
        if (lhs.empty() && rhs.empty()) break;
        if (lhs.empty() || rhs.empty())
            throw std::logic_error("decompose: one side exhausted on a solution");
        const std::int64_t cur = metric();
        if (cur >= last_metric) throw std::logic_error("decompose: reduction metric did not decrease");
        last_metric = cur;

        const std::size_t x = lhs.front();
        const std::size_t y = rhs.front();
        const Word& wx = g.images[x];
        const Word& wy = g.images[y];
        ElementaryTransformation step{};
        if (wx == wy) {
            // equal images: rewrite the rhs leading unknown to the lhs one
            step = {ElementaryTransformation::Kind::singular, y, x};
        } else if (wy.size() < wx.size()) {
            if (!wy.is_prefix_of(wx)) throw std::logic_error("decompose: prefix invariant violated");
            step = {ElementaryTransformation::Kind::regular, x, y};
            g.images[x] = wx.factor(wy.size(), wx.size() - wy.size());
        } else {
            if (!wx.is_prefix_of(wy)) throw std::logic_error("decompose: prefix invariant violated");
            step = {ElementaryTransformation::Kind::regular, y, x};
            g.images[y] = wy.factor(wx.size(), wy.size() - wx.size());
        }
        d.steps.push_back(step);
        detail::substitute(lhs, step);
        detail::substitute(rhs, step);
    }

    d.theta = std::move(g);
    return d;
}

/// A_k: entry (i, j) counts occurrences of x_j in f_k(x_i).
inline std::vector<std::vector<std::int64_t>> occurrence_matrix(const Decomposition& d, std::size_t k) {
    const IndexMorphism f = stage_morphism(d, k);
    std::vector<std::vector<std::int64_t>> a(d.n, std::vector<std::int64_t>(d.n, 0));
    for (std::size_t i = 0; i < d.n; ++i)
        for (auto j : f.images[i]) ++a[i][j];
    return a;
}

/// B_k: P(h(x_i)) = sum_j B_k[i][j] * P(g_k(x_j)); the entry (i, j) sums
/// X^(prefix length) over positions of x_j in f_k(x_i).
inline PolyMatrix coefficient_matrix(const Decomposition& d, std::size_t k) {
    const IndexMorphism f = stage_morphism(d, k);
    const Morphism g = residual_morphism(d, k);
    PolyMatrix b(d.n, d.n);
    for (std::size_t i = 0; i < d.n; ++i) {
        std::int64_t shift = 0;
        for (auto j : f.images[i]) {
            b.at(i, j).add_term(shift, 1);
            shift += static_cast<std::int64_t>(g.images[j].size());
        }
    }
    return b;
}

/// Generators of the cone of length types of solutions g o f_m: the i-th
/// generator is (|f_m(x_1)|_{x_i}, ..., |f_m(x_n)|_{x_i}).
inline std::vector<std::vector<std::int64_t>> length_type_cone(const Decomposition& d) {
    const auto a = occurrence_matrix(d, d.steps.size());
    std::vector<std::vector<std::int64_t>> gens(d.n, std::vector<std::int64_t>(d.n, 0));
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.n; ++j) gens[i][j] = a[j][i];
    return gens;
}

} // namespace weq
