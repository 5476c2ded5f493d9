#pragma once

/**
 * @file equations.hpp
 * @brief Word equations, morphisms, length types and the q/s polynomials.
 *
 * The central constructions: for an equation E, an unknown x and a length
 * type L, the polynomial q_{E,x,L} collects X^(prefix length) with sign +1
 * for occurrences of x on the left side and -1 on the right. A morphism h
 * of length type L solves E iff sum_x q_{E,x,L} * P(h(x)) = 0. The
 * generalized polynomial s_{E,x} is the same construction with symbolic
 * prefix sums, so that s_{E,x}(L) = q_{E,x,L} for every L.
 */

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "weq/errors.hpp"
#include "weq/lhp.hpp"
#include "weq/polyring.hpp"
#include "weq/words.hpp"

namespace weq {

struct WordEquation {
    std::size_t n = 0;                 // number of unknowns
    std::vector<std::size_t> lhs, rhs; // 0-based unknown indices

    WordEquation() = default;
    WordEquation(std::size_t n_, std::vector<std::size_t> lhs_, std::vector<std::size_t> rhs_)
        : n(n_), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
        for (auto x : lhs)
            if (x >= n) throw index_error("WordEquation: unknown index out of range");
        for (auto x : rhs)
            if (x >= n) throw index_error("WordEquation: unknown index out of range");
    }

    std::size_t length() const { return lhs.size() + rhs.size(); }

    bool is_trivial() const { return lhs == rhs; }

    bool is_balanced() const {
        std::vector<std::int64_t> net(n, 0);
        for (auto x : lhs) ++net[x];
        for (auto x : rhs) --net[x];
        for (auto c : net)
            if (c != 0) return false;
        return true;
    }

    /// |u|_x - |v|_x per unknown; the all-zero vector iff balanced.
    std::vector<std::int64_t> balance_vector() const {
        std::vector<std::int64_t> net(n, 0);
        for (auto x : lhs) ++net[x];
        for (auto x : rhs) --net[x];
        return net;
    }

    bool operator==(const WordEquation& o) const { return n == o.n && lhs == o.lhs && rhs == o.rhs; }
};

struct Morphism {
    std::vector<Word> images;

    Morphism() = default;
    explicit Morphism(std::vector<Word> imgs) : images(std::move(imgs)) {}

    std::size_t size() const { return images.size(); }

    const Word& image(std::size_t x) const {
        if (x >= images.size()) throw index_error("Morphism: unknown index out of range");
        return images[x];
    }

    LengthType length_type() const {
        LengthType L;
        L.reserve(images.size());
        for (const auto& w : images) L.push_back(static_cast<std::int64_t>(w.size()));
        return L;
    }

    std::int64_t total_image_length() const {
        std::int64_t t = 0;
        for (const auto& w : images) t += static_cast<std::int64_t>(w.size());
        return t;
    }

    bool operator==(const Morphism& o) const { return images == o.images; }
    bool operator!=(const Morphism& o) const { return images != o.images; }
    bool operator<(const Morphism& o) const { return images < o.images; }
};

struct EquationSystem {
    std::size_t n = 0;
    std::vector<WordEquation> equations;

    EquationSystem() = default;
    EquationSystem(std::size_t n_, std::vector<WordEquation> eqs) : n(n_), equations(std::move(eqs)) {
        for (const auto& e : equations)
            if (e.n != n) throw shape_error("EquationSystem: inconsistent unknown counts");
    }
};

/// Image of a sequence of unknowns under h.
inline Word apply(const Morphism& h, std::span<const std::size_t> w) {
    Word r;
    for (auto x : w) {
        const Word& img = h.image(x);
        r.letters.insert(r.letters.end(), img.letters.begin(), img.letters.end());
    }
    return r;
}

inline Word apply(const Morphism& h, const std::vector<std::size_t>& w) {
    return apply(h, std::span<const std::size_t>(w));
}

/// The morphism l_L on sequences of unknowns: sum of lengths.
inline std::int64_t length_of(const LengthType& L, std::span<const std::size_t> w) {
    std::int64_t t = 0;
    for (auto x : w) {
        if (x >= L.size()) throw index_error("length_of: unknown index out of range");
        t += L[x];
    }
    return t;
}

inline std::int64_t length_of(const LengthType& L, const std::vector<std::size_t>& w) {
    return length_of(L, std::span<const std::size_t>(w));
}

namespace detail {

/// Streaming comparison of h(lhs) and h(rhs) without building either word.
inline bool sides_equal(const Morphism& h, const WordEquation& e) {
    const LengthType L = h.length_type();
    if (length_of(L, e.lhs) != length_of(L, e.rhs)) return false;
    std::size_t li = 0, lo = 0, ri = 0, ro = 0;
    auto advance = [](const std::vector<std::size_t>& side, const Morphism& m, std::size_t& i, std::size_t& off) -> const Letter* {
        while (i < side.size()) {
            const Word& img = m.images[side[i]];
            if (off < img.size()) return &img.letters[off++];
            ++i;
            off = 0;
        }
        return nullptr;
    };
    for (;;) {
        const Letter* a = advance(e.lhs, h, li, lo);
        const Letter* b = advance(e.rhs, h, ri, ro);
        if (a == nullptr || b == nullptr) return a == b;
        if (*a != *b) return false;
    }
}

} // namespace detail

inline bool is_solution(const Morphism& h, const WordEquation& e) {
    if (h.size() != e.n) throw shape_error("is_solution: arity mismatch");
    return detail::sides_equal(h, e);
}

inline bool is_solution(const Morphism& h, const EquationSystem& sys) {
    if (h.size() != sys.n) throw shape_error("is_solution: arity mismatch");
    for (const auto& e : sys.equations)
        if (!detail::sides_equal(h, e)) return false;
    return true;
}

/// q_{E,x,L}: signed sum of X^(prefix length) over occurrences of x.
inline IntPoly q_polynomial(const WordEquation& e, std::size_t x, const LengthType& L) {
    if (L.size() != e.n) throw shape_error("q_polynomial: length type dimension mismatch");
    if (x >= e.n) throw index_error("q_polynomial: unknown index out of range");
    IntPoly q;
    std::int64_t pos = 0;
    for (auto y : e.lhs) {
        if (y == x) q.add_term(pos, 1);
        pos += L[y];
    }
    pos = 0;
    for (auto z : e.rhs) {
        if (z == x) q.add_term(pos, -1);
        pos += L[z];
    }
    return q;
}

/// s_{E,x}: the generalized polynomial with symbolic prefix sums;
/// s_{E,x}(L) = q_{E,x,L} for every length type L.
inline GenPoly s_polynomial(const WordEquation& e, std::size_t x) {
    if (x >= e.n) throw index_error("s_polynomial: unknown index out of range");
    GenPoly s(e.n);
    std::vector<std::int64_t> prefix(e.n, 0);
    for (auto y : e.lhs) {
        if (y == x) s.add_term(LinearForm{std::vector<std::int64_t>(prefix)}, 1);
        ++prefix[y];
    }
    std::fill(prefix.begin(), prefix.end(), 0);
    for (auto z : e.rhs) {
        if (z == x) s.add_term(LinearForm{std::vector<std::int64_t>(prefix)}, -1);
        ++prefix[z];
    }
    return s;
}

/// sum_x q_{E,x,L(h)} * P(h(x)); zero iff h solves E.
inline IntPoly weqpeq_residual(const WordEquation& e, const Morphism& h) {
    if (h.size() != e.n) throw shape_error("weqpeq_residual: arity mismatch");
    const LengthType L = h.length_type();
    IntPoly r;
    for (std::size_t x = 0; x < e.n; ++x) {
        if (h.images[x].empty()) continue;
        r += q_polynomial(e, x, L) * encode(h.images[x]);
    }
    return r;
}

/// The m x n matrix (q_ij) of a system at a length type.
inline PolyMatrix q_matrix(const EquationSystem& sys, const LengthType& L) {
    if (L.size() != sys.n) throw shape_error("q_matrix: length type dimension mismatch");
    PolyMatrix m(sys.equations.size(), sys.n);
    for (std::size_t i = 0; i < sys.equations.size(); ++i)
        for (std::size_t j = 0; j < sys.n; ++j) m.at(i, j) = q_polynomial(sys.equations[i], j, L);
    return m;
}

struct RankBoundReport {
    PolyMatrix matrix;
    std::size_t matrix_rank;
    std::size_t max_solution_rank; // any solution of length type L has rank <= this
};

inline RankBoundReport rank_bound(const EquationSystem& sys, const LengthType& L) {
    PolyMatrix m = q_matrix(sys, L);
    const std::size_t r = rank(m);
    return {std::move(m), r, sys.n - r};
}

/// True iff the q-matrix has rank 1, in which case all equations of the
/// system have the same solutions of length type L. Requires nontrivial
/// equations and at most one zero component in L.
inline bool same_solutions_at(const EquationSystem& sys, const LengthType& L) {
    if (L.size() != sys.n) throw shape_error("same_solutions_at: length type dimension mismatch");
    for (const auto& e : sys.equations)
        if (e.is_trivial()) throw hypothesis_error("same_solutions_at: trivial equation in system");
    std::size_t zeros = 0;
    for (auto l : L)
        if (l == 0) ++zeros;
    if (zeros > 1) throw hypothesis_error("same_solutions_at: more than one zero component in length type");
    return rank(q_matrix(sys, L)) == 1;
}

struct GraphReport {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t component_count;
};

/// One edge per equation, between the leading unknowns of the two sides;
/// components are counted over all n unknowns.
inline GraphReport equations_graph(const EquationSystem& sys) {
    GraphReport rep;
    std::vector<std::size_t> parent(sys.n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& e : sys.equations) {
        if (e.lhs.empty() || e.rhs.empty())
            throw degenerate_equation_error("equations_graph: equation with an empty side");
        const std::size_t a = e.lhs.front(), b = e.rhs.front();
        rep.edges.emplace_back(a, b);
        parent[find(a)] = find(b);
    }
    std::size_t components = 0;
    for (std::size_t i = 0; i < sys.n; ++i)
        if (find(i) == i) ++components;
    rep.component_count = components;
    return rep;
}

} // namespace weq
