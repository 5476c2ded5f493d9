#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth at desk scale.
 *
 * Enumerates morphisms and solutions over {1..a} exhaustively, computes the
 * exact combinatorial rank of a morphism, and runs the bounded
 * independence/chain checks. Everything here is deliberately simple: these
 * routines are the reference the polynomial machinery is tested against.
 *
 * Enumeration order is canonical and documented: length types in
 * lexicographic order, image contents in lexicographic order within a
 * length type. Parallel enumeration partitions work by length-type cell and
 * reassembles results in cell order, so output does not depend on the
 * worker count.
 */

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "weq/equations.hpp"
#include "weq/errors.hpp"
#include "weq/words.hpp"

namespace weq {

struct SearchBound {
    LengthType max_lengths;
    int alphabet_size = 2;
    std::uint64_t budget = 10'000'000; // candidate morphisms per call

    SearchBound() = default;
    SearchBound(LengthType lens, int alphabet, std::uint64_t budget_ = 10'000'000)
        : max_lengths(std::move(lens)), alphabet_size(alphabet), budget(budget_) {
        if (alphabet_size < 1) throw domain_error("SearchBound: alphabet size must be >= 1");
        for (auto l : max_lengths)
            if (l < 0) throw domain_error("SearchBound: negative length bound");
    }
};

namespace detail {

inline Int pow_int(std::int64_t base, std::int64_t e) {
    Int r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

/// Number of candidate morphisms within the bound.
inline Int candidate_count(const SearchBound& b) {
    Int total = 1;
    for (auto l : b.max_lengths) {
        Int per = 0;
        for (std::int64_t k = 0; k <= l; ++k) per += pow_int(b.alphabet_size, k);
        total *= per;
    }
    return total;
}

inline void check_budget(const SearchBound& b) {
    if (candidate_count(b) > b.budget)
        throw budget_error("enumeration budget exceeded: " + candidate_count(b).str() +
                           " candidates > " + std::to_string(b.budget));
}

/// All images at exact lengths L, lexicographic, invoking fn on each.
template <typename Fn>
void for_each_morphism_at(std::size_t n, const LengthType& L, int alphabet, Fn&& fn) {
    std::vector<Word> images(n);
    std::vector<Letter*> slots;
    for (std::size_t x = 0; x < n; ++x) {
        images[x].letters.assign(static_cast<std::size_t>(L[x]), Letter(1));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (auto& a : images[x].letters) slots.push_back(&a);
    Morphism h(std::move(images));
    for (;;) {
        fn(const_cast<const Morphism&>(h));
        // odometer, rightmost fastest
        std::size_t i = slots.size();
        while (i > 0) {
            --i;
            if (*slots[i] < alphabet) {
                ++*slots[i];
                break;
            }
            *slots[i] = 1;
            if (i == 0) return;
        }
        if (slots.empty()) return;
    }
}

} // namespace detail

/// Length types componentwise <= max, in lexicographic order.
inline std::vector<LengthType> length_types_upto(const LengthType& max) {
    std::vector<LengthType> out;
    LengthType cur(max.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (cur[i] < max[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (cur.empty()) return out;
    }
}

/// Exactly the morphisms with image lengths L solving every equation.
inline std::vector<Morphism> solutions_at(const EquationSystem& sys, const LengthType& L, int alphabet) {
    if (L.size() != sys.n) throw shape_error("solutions_at: length type dimension mismatch");
    std::vector<Morphism> out;
    for (const auto& e : sys.equations)
        if (length_of(L, e.lhs) != length_of(L, e.rhs)) return out;
    detail::for_each_morphism_at(sys.n, L, alphabet, [&](const Morphism& h) {
        for (const auto& e : sys.equations)
            if (!detail::sides_equal(h, e)) return;
        out.push_back(h);
    });
    return out;
}

/// All morphisms within the bound, canonical order.
inline std::vector<Morphism> enumerate_morphisms(std::size_t n, const SearchBound& b) {
    if (b.max_lengths.size() != n) throw shape_error("enumerate_morphisms: bound dimension mismatch");
    detail::check_budget(b);
    std::vector<Morphism> out;
    for (const auto& L : length_types_upto(b.max_lengths))
        detail::for_each_morphism_at(n, L, b.alphabet_size, [&](const Morphism& h) { out.push_back(h); });
    return out;
}

/// Morphisms within the bound solving every equation of the system, in
/// canonical order. `jobs` > 1 parallelizes over length-type cells; the
/// result is identical for every worker count.
inline std::vector<Morphism> enumerate_solutions(const EquationSystem& sys, const SearchBound& b, int jobs = 1) {
    if (b.max_lengths.size() != sys.n) throw shape_error("enumerate_solutions: bound dimension mismatch");
    detail::check_budget(b);
    const std::vector<LengthType> cells = length_types_upto(b.max_lengths);
    std::vector<std::vector<Morphism>> per_cell(cells.size());
    if (jobs <= 1) {
        for (std::size_t c = 0; c < cells.size(); ++c) per_cell[c] = solutions_at(sys, cells[c], b.alphabet_size);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= cells.size()) return;
                per_cell[c] = solutions_at(sys, cells[c], b.alphabet_size);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<Morphism> out;
    for (auto& cell : per_cell)
        for (auto& h : cell) out.push_back(std::move(h));
    return out;
}

namespace detail {

/// Distinct nonempty factors of all images, ordered by (length, content).
inline std::vector<Word> image_factors(const Morphism& h) {
    std::set<Word> factors;
    for (const auto& w : h.images) {
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (std::size_t len = 1; pos + len <= w.size(); ++len) factors.insert(w.factor(pos, len));
    }
    std::vector<Word> out(factors.begin(), factors.end());
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline bool word_in_star(const Word& w, const std::vector<const Word*>& A) {
    std::vector<char> reach(w.size() + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!reach[i]) continue;
        for (const Word* a : A) {
            const std::size_t la = a->size();
            if (i + la > w.size()) continue;
            if (reach[i + la]) continue;
            bool match = true;
            for (std::size_t t = 0; t < la && match; ++t) match = (w.letters[i + t] == a->letters[t]);
            if (match) reach[i + la] = 1;
        }
    }
    return reach[w.size()] != 0;
}

inline bool images_in_star(const Morphism& h, const std::vector<const Word*>& A) {
    for (const auto& w : h.images) {
        if (w.empty()) continue;
        if (!word_in_star(w, A)) return false;
    }
    return true;
}

template <typename Fn>
bool any_subset(const std::vector<Word>& pool, std::size_t r, Fn&& test) {
    std::vector<std::size_t> idx(r);
    std::vector<const Word*> pick(r);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) -> bool {
        if (depth == r) return test(pick);
        for (std::size_t i = from; i + (r - depth - 1) < pool.size(); ++i) {
            pick[depth] = &pool[i];
            if (rec(depth + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

inline Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<std::int64_t>(n - i);
        r /= static_cast<std::int64_t>(i + 1);
    }
    return r;
}

} // namespace detail

/// True iff all images lie in A* for some set A of at most r words.
/// Candidate sets are drawn from factors of the images; every element of a
/// minimal A is used in a factorization, hence is such a factor.
inline bool rank_at_most(const Morphism& h, std::size_t r, std::uint64_t subset_budget = 10'000'000) {
    std::set<Word> nonempty;
    for (const auto& w : h.images)
        if (!w.empty()) nonempty.insert(w);
    if (nonempty.empty()) return true;
    if (r == 0) return false;
    if (r >= nonempty.size()) return true;
    // shortcut: two commuting images can be replaced by one root
    if (r + 1 == nonempty.size()) {
        std::vector<const Word*> ws;
        for (const auto& w : nonempty) ws.push_back(&w);
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j)
                if (*ws[i] + *ws[j] == *ws[j] + *ws[i]) return true;
    }
    const std::vector<Word> pool = detail::image_factors(h);
    if (detail::binomial(pool.size(), r) > subset_budget)
        throw budget_error("rank_at_most: subset search too large");
    return detail::any_subset(pool, r, [&](const std::vector<const Word*>& A) { return detail::images_in_star(h, A); });
}

/// The exact combinatorial rank: the least r such that every image lies in
/// A* for some set A of r words.
inline std::size_t combinatorial_rank(const Morphism& h, std::int64_t total_length_cap = 256) {
    if (h.total_image_length() > total_length_cap)
        throw budget_error("combinatorial_rank: total image length exceeds cap");
    std::set<Word> nonempty;
    for (const auto& w : h.images)
        if (!w.empty()) nonempty.insert(w);
    for (std::size_t r = 0; r < nonempty.size(); ++r)
        if (rank_at_most(h, r)) return r;
    return nonempty.size();
}

struct WitnessReport {
    bool witnessed = false;
    std::optional<Morphism> witness; // first in canonical order
};

struct IndependenceReport {
    std::vector<WitnessReport> per_equation;
    bool independent_at_bound = false; // all equations witnessed within the bound
};

/// For each i, searches for a morphism solving every equation except E_i.
/// A missing witness within the bound leaves independence undecided.
inline IndependenceReport check_independent(const EquationSystem& sys, const SearchBound& b) {
    if (b.max_lengths.size() != sys.n) throw shape_error("check_independent: bound dimension mismatch");
    detail::check_budget(b);
    const std::size_t m = sys.equations.size();
    IndependenceReport rep;
    rep.per_equation.resize(m);
    std::size_t open = m;
    for (const auto& L : length_types_upto(b.max_lengths)) {
        if (open == 0) break;
        detail::for_each_morphism_at(sys.n, L, b.alphabet_size, [&](const Morphism& h) {
            if (open == 0) return;
            std::size_t failed = m, failures = 0;
            for (std::size_t i = 0; i < m && failures < 2; ++i) {
                if (!detail::sides_equal(h, sys.equations[i])) {
                    failed = i;
                    ++failures;
                }
            }
            if (failures == 1 && !rep.per_equation[failed].witnessed) {
                rep.per_equation[failed] = {true, h};
                --open;
            }
        });
    }
    rep.independent_at_bound = (open == 0);
    return rep;
}

struct ChainPosition {
    bool witnessed = false;
    std::optional<Morphism> witness;
    std::optional<std::size_t> witness_rank;
};

struct ChainReport {
    std::vector<ChainPosition> positions;
    bool chain_at_bound = false;
};

/// For each i, searches for a morphism solving E_1..E_(i-1) but not E_i.
/// With `required_rank` set, only witnesses of that combinatorial rank
/// count (the rank-restricted chain of equations).
inline ChainReport check_chain(const EquationSystem& sys, const SearchBound& b,
                               std::optional<std::size_t> required_rank = std::nullopt) {
    if (b.max_lengths.size() != sys.n) throw shape_error("check_chain: bound dimension mismatch");
    detail::check_budget(b);
    const std::size_t m = sys.equations.size();
    ChainReport rep;
    rep.positions.resize(m);
    std::size_t open = m;
    for (const auto& L : length_types_upto(b.max_lengths)) {
        if (open == 0) break;
        detail::for_each_morphism_at(sys.n, L, b.alphabet_size, [&](const Morphism& h) {
            if (open == 0) return;
            // h witnesses the first equation it fails, if any
            std::size_t i = 0;
            while (i < m && detail::sides_equal(h, sys.equations[i])) ++i;
            if (i == m || rep.positions[i].witnessed) return;
            std::optional<std::size_t> hrank;
            if (required_rank) {
                hrank = combinatorial_rank(h);
                if (*hrank != *required_rank) return;
            }
            rep.positions[i] = {true, h, hrank};
            --open;
        });
    }
    rep.chain_at_bound = (open == 0);
    return rep;
}

} // namespace weq
