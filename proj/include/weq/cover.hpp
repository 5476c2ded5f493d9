#pragma once

/**
 * @file cover.hpp
 * @brief Hyperplane covers of length types of rank-(n-1) solutions.
 *
 * For a pair of nontrivial, non-equivalent equations, some 2x2 minor
 * t = s_{1k} s_{2l} - s_{1l} s_{2k} of the s-matrix is nonzero. Writing
 * t as sum X^{p_i} - sum X^{q_i}, the length type of any common solution of
 * rank n-1 must satisfy p = q for some surviving positive form p and
 * negative form q: the minimal exponent value of t(L) has to cancel. Each
 * such pair contributes the subspace p - q = 0.
 *
 * Naive mode emits all (p, q) pairs. Minimal mode keeps only the minimal
 * elements of the two form sets under the componentwise order: whenever a
 * form attains the minimal value at L, some minimal form below it attains
 * it too, so soundness is preserved. The surviving positive forms fall into
 * four families, each a grid product of two chains of prefix sums, so an
 * antichain holds at most one element per occurrence of x_k or x_l in E_1;
 * hence at most |E_1| minimal forms per sign and at most |E_1|^2 subspaces.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weq/equations.hpp"
#include "weq/errors.hpp"
#include "weq/lhp.hpp"
#include "weq/oracle.hpp"
#include "weq/words.hpp"

namespace weq {

struct Subspace {
    /// Integer vector c with the subspace c1*X1 + ... + cn*Xn = 0,
    /// normalized: gcd of entries 1, first nonzero entry positive.
    std::vector<std::int64_t> equation;

    static Subspace from_difference(const LinearForm& p, const LinearForm& q) {
        if (p.dim() != q.dim()) throw shape_error("Subspace: dimension mismatch");
        std::vector<std::int64_t> c(p.dim());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs[i] - q.coeffs[i];
        return normalized(std::move(c));
    }

    static Subspace normalized(std::vector<std::int64_t> c) {
        std::int64_t g = 0;
        for (auto v : c) g = std::gcd(g, v < 0 ? -v : v);
        if (g == 0) throw domain_error("Subspace: zero vector");
        std::int64_t sign = 0;
        for (auto v : c) {
            if (v != 0) {
                sign = v > 0 ? 1 : -1;
                break;
            }
        }
        for (auto& v : c) v = v * sign / g;
        Subspace s;
        s.equation = std::move(c);
        return s;
    }

    bool contains(const LengthType& L) const {
        if (L.size() != equation.size()) throw shape_error("Subspace: dimension mismatch");
        std::int64_t v = 0;
        for (std::size_t i = 0; i < L.size(); ++i) v += equation[i] * L[i];
        return v == 0;
    }

    bool operator==(const Subspace& o) const { return equation == o.equation; }
    bool operator<(const Subspace& o) const { return equation < o.equation; }

    /// "X1+X2-X3 = 0" style.
    std::string to_string() const {
        std::ostringstream out;
        bool any = false;
        for (std::size_t i = 0; i < equation.size(); ++i) {
            if (equation[i] == 0) continue;
            const std::int64_t c = equation[i];
            if (!any) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? "-" : "+");
            }
            if (c != 1 && c != -1) out << (c < 0 ? -c : c);
            out << "X" << (i + 1);
            any = true;
        }
        out << " = 0";
        return out.str();
    }
};

struct CoverEntry {
    Subspace subspace;
    LinearForm p, q; // provenance: the forms whose difference is the subspace
};

enum class CoverMode { naive, minimal };

struct Cover {
    std::vector<CoverEntry> entries; // deduplicated, sorted by subspace
    CoverMode mode = CoverMode::minimal;
    std::size_t minor_k = 0, minor_l = 0; // columns of the minor used

    std::size_t size() const { return entries.size(); }

    bool covers(const LengthType& L) const {
        for (const auto& e : entries)
            if (e.subspace.contains(L)) return true;
        return false;
    }
};

/// t_{kl} = s_{1k} s_{2l} - s_{1l} s_{2k}.
inline GenPoly minor(const WordEquation& e1, const WordEquation& e2, std::size_t k, std::size_t l) {
    if (e1.n != e2.n) throw shape_error("minor: unknown counts differ");
    if (k == l) throw domain_error("minor: equal column indices");
    return s_polynomial(e1, k) * s_polynomial(e2, l) - s_polynomial(e1, l) * s_polynomial(e2, k);
}

namespace detail {

inline std::vector<LinearForm> distinct_forms(const std::vector<LinearForm>& forms) {
    std::vector<LinearForm> out = forms;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Minimal elements under the componentwise order.
inline std::vector<LinearForm> minimal_antichain(const std::vector<LinearForm>& forms) {
    std::vector<LinearForm> out;
    for (const auto& f : forms) {
        bool dominated = false;
        for (const auto& g : forms) {
            if (g != f && precedes(g, f)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(f);
    }
    return out;
}

struct CandidateSet {
    std::vector<CoverEntry> entries; // sorted by subspace, deduplicated
};

inline CandidateSet candidates_from_minor(const GenPoly& t, CoverMode mode) {
    const SignSplit split = split_signs(t);
    std::vector<LinearForm> ps = distinct_forms(split.positives);
    std::vector<LinearForm> qs = distinct_forms(split.negatives);
    if (mode == CoverMode::minimal) {
        ps = minimal_antichain(ps);
        qs = minimal_antichain(qs);
    }
    CandidateSet set;
    for (const auto& p : ps) {
        for (const auto& q : qs) {
            CoverEntry entry{Subspace::from_difference(p, q), p, q};
            set.entries.push_back(std::move(entry));
        }
    }
    std::sort(set.entries.begin(), set.entries.end(),
              [](const CoverEntry& a, const CoverEntry& b) { return a.subspace < b.subspace; });
    set.entries.erase(std::unique(set.entries.begin(), set.entries.end(),
                                  [](const CoverEntry& a, const CoverEntry& b) { return a.subspace == b.subspace; }),
                      set.entries.end());
    return set;
}

} // namespace detail

struct CandidateOptions {
    CoverMode mode = CoverMode::minimal;
    bool all_minors = false; // intersect candidates over all nonzero minors
    std::optional<std::pair<std::size_t, std::size_t>> use_minor; // force columns (k, l)
};

/// Candidate subspaces covering the length types of rank-(n-1) common
/// solutions. Throws equations_equivalent_error when every minor vanishes.
inline Cover candidate_subspaces(const WordEquation& e1, const WordEquation& e2,
                                 CandidateOptions opts = {}) {
    if (e1.n != e2.n) throw shape_error("candidate_subspaces: unknown counts differ");
    const std::size_t n = e1.n;
    if (opts.use_minor) {
        const auto [k, l] = *opts.use_minor;
        const GenPoly t = minor(e1, e2, k, l);
        if (t.is_zero()) throw equations_equivalent_error("candidate_subspaces: requested minor vanishes");
        Cover cover;
        cover.entries = detail::candidates_from_minor(t, opts.mode).entries;
        cover.mode = opts.mode;
        cover.minor_k = k;
        cover.minor_l = l;
        if (opts.mode == CoverMode::minimal && cover.entries.size() > e1.length() * e1.length())
            throw std::logic_error("candidate_subspaces: minimal cover exceeds |E1|^2");
        return cover;
    }
    std::optional<detail::CandidateSet> result;
    std::optional<std::pair<std::size_t, std::size_t>> used;
    bool stop = false;
    for (std::size_t k = 0; k < n && !stop; ++k) {
        for (std::size_t l = k + 1; l < n && !stop; ++l) {
            const GenPoly t = minor(e1, e2, k, l);
            if (t.is_zero()) continue;
            detail::CandidateSet set = detail::candidates_from_minor(t, opts.mode);
            if (!result) {
                result = std::move(set);
                used = {k, l};
                stop = !opts.all_minors;
            } else {
                // keep only subspaces present for this minor as well
                std::vector<CoverEntry> kept;
                for (const auto& e : result->entries) {
                    const bool present = std::any_of(set.entries.begin(), set.entries.end(),
                                                     [&](const CoverEntry& o) { return o.subspace == e.subspace; });
                    if (present) kept.push_back(e);
                }
                result->entries = std::move(kept);
            }
        }
    }
    if (!result)
        throw equations_equivalent_error("candidate_subspaces: all minors vanish; the equations are "
                                         "equivalent on solutions of rank n-1");
    Cover cover;
    cover.entries = std::move(result->entries);
    cover.mode = opts.mode;
    cover.minor_k = used->first;
    cover.minor_l = used->second;
    if (opts.mode == CoverMode::minimal && cover.entries.size() > e1.length() * e1.length())
        throw std::logic_error("candidate_subspaces: minimal cover exceeds |E1|^2");
    return cover;
}

struct PrunedCover {
    Cover cover;
    std::vector<Morphism> witnesses; // one rank-(n-1) witness per retained entry
    LengthType bound;
    std::size_t solutions_checked = 0;
};

/// Keeps the subspaces containing the length type of at least one
/// rank-(n-1) common solution with image lengths within `bound`
/// (letters from {1, 2}). A bounded semi-decision: subspaces without a
/// witness below the bound are dropped, which under-approximates the
/// minimal cover at that bound.
inline PrunedCover prune_cover(const Cover& c, const WordEquation& e1, const WordEquation& e2,
                               const LengthType& bound) {
    if (e1.n != e2.n) throw shape_error("prune_cover: unknown counts differ");
    const std::size_t n = e1.n;
    const EquationSystem pair(n, {e1, e2});
    const auto sols = enumerate_solutions(pair, SearchBound(bound, 2));
    PrunedCover out;
    out.bound = bound;
    std::vector<std::optional<Morphism>> witness(c.entries.size());
    for (const auto& h : sols) {
        if (combinatorial_rank(h) != n - 1) continue;
        ++out.solutions_checked;
        const LengthType L = h.length_type();
        for (std::size_t i = 0; i < c.entries.size(); ++i) {
            if (!witness[i] && c.entries[i].subspace.contains(L)) witness[i] = h;
        }
    }
    out.cover.mode = c.mode;
    out.cover.minor_k = c.minor_k;
    out.cover.minor_l = c.minor_l;
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        if (witness[i]) {
            out.cover.entries.push_back(c.entries[i]);
            out.witnesses.push_back(*witness[i]);
        }
    }
    return out;
}

struct BalanceReport {
    enum class Status { not_applicable, inconclusive, verified, refuted };
    Status status;
    std::optional<Subspace> balance_subspace; // the single space covering E1's length types
    bool hypothesis_witnessed = false;        // a common rank-(n-1) solution was found
    std::size_t solutions_checked = 0;        // rank-(n-1) solutions of E1 examined
    std::vector<Morphism> counterexamples;    // rank-(n-1) solutions of E1 not solving E2
};

/// Checks the unbalanced-pair statement on the bounded solution set: if E1
/// is unbalanced and the pair has a common solution of rank n-1, every
/// rank-(n-1) solution of E1 within the bound must solve E2. A reported
/// counterexample would falsify the implementation, not the statement.
inline BalanceReport balance_check(const WordEquation& e1, const WordEquation& e2, const LengthType& bound) {
    if (e1.n != e2.n) throw shape_error("balance_check: unknown counts differ");
    const std::size_t n = e1.n;
    BalanceReport rep{BalanceReport::Status::not_applicable, std::nullopt, false, 0, {}};
    if (e1.is_balanced()) return rep;
    rep.balance_subspace = Subspace::normalized(e1.balance_vector());

    const auto sols = enumerate_solutions(EquationSystem(n, {e1}), SearchBound(bound, 2));
    for (const auto& h : sols) {
        if (combinatorial_rank(h) != n - 1) continue;
        ++rep.solutions_checked;
        if (!rep.balance_subspace->contains(h.length_type()))
            throw std::logic_error("balance_check: solution off the balance subspace");
        if (is_solution(h, e2)) {
            rep.hypothesis_witnessed = true;
        } else {
            rep.counterexamples.push_back(h);
        }
    }
    if (!rep.hypothesis_witnessed) {
        rep.status = BalanceReport::Status::inconclusive;
    } else {
        rep.status = rep.counterexamples.empty() ? BalanceReport::Status::verified
                                                 : BalanceReport::Status::refuted;
    }
    return rep;
}

struct ChainBoundReport {
    std::size_t cover_size;       // N
    std::size_t bound;            // N + 1
    std::size_t worst_case_bound; // |E1|^2 + 1
};

struct ChainBoundOptions {
    CoverMode mode = CoverMode::minimal;
    bool all_minors = false;
    std::optional<LengthType> prune_bound;
};

/// Length bound on rank-(n-1) chains through the pair: m <= N + 1 for any
/// cover of size N, and m <= |E1|^2 + 1 unconditionally.
inline ChainBoundReport chain_bound(const WordEquation& e1, const WordEquation& e2,
                                    ChainBoundOptions opts = {}) {
    Cover c = candidate_subspaces(e1, e2, {opts.mode, opts.all_minors});
    if (opts.prune_bound) c = prune_cover(c, e1, e2, *opts.prune_bound).cover;
    const std::size_t worst = e1.length() * e1.length() + 1;
    return {c.size(), c.size() + 1, worst};
}

struct PairFormReport {
    enum class Status { matched, hypothesis_failed, pattern_violation };
    Status status;
    std::optional<std::int64_t> k;
    std::string reason; // set when hypotheses fail
};

namespace detail {

struct PairFormProfile {
    std::size_t p, q, r;
    std::int64_t k;
    bool operator==(const PairFormProfile& o) const {
        return p == o.p && q == o.q && r == o.r && k == o.k;
    }
};

/// Orientations of one equation matching "p ... = q^k r ...".
inline std::vector<PairFormProfile> pair_form_profiles(const WordEquation& e) {
    std::vector<PairFormProfile> out;
    const std::vector<std::size_t>* sides[2] = {&e.lhs, &e.rhs};
    for (int a = 0; a < 2; ++a) {
        const auto& A = *sides[a];
        const auto& B = *sides[1 - a];
        if (A.empty() || B.empty()) continue;
        const std::size_t p = A.front();
        const std::size_t q = B.front();
        if (p == q) continue;
        std::size_t i = 0;
        while (i < B.size() && B[i] == q) ++i;
        if (i == B.size()) continue; // no unknown after the q-run
        const std::size_t r = B[i];
        if (r == p) continue;
        out.push_back({p, q, r, static_cast<std::int64_t>(i)});
    }
    return out;
}

inline bool pair_form_match(const WordEquation& e1, const WordEquation& e2, std::int64_t& k_out) {
    for (const auto& a : pair_form_profiles(e1))
        for (const auto& b : pair_form_profiles(e2))
            if (a == b) {
                k_out = a.k;
                return true;
            }
    return false;
}

} // namespace detail

/// If h is a common solution of rank n-1 whose images pairwise do not
/// commute, both equations must have the shape x ... = y^k z ... for a
/// shared triple of unknowns and shared k >= 1.
inline PairFormReport pair_form_check(const WordEquation& e1, const WordEquation& e2, const Morphism& h) {
    if (e1.n != e2.n) throw shape_error("pair_form_check: unknown counts differ");
    if (!is_solution(h, e1) || !is_solution(h, e2))
        throw not_a_solution_error("pair_form_check: not a common solution");
    const std::size_t n = e1.n;
    for (const auto& w : h.images)
        if (w.empty()) return {PairFormReport::Status::hypothesis_failed, std::nullopt, "erasing image"};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (h.images[i] + h.images[j] == h.images[j] + h.images[i])
                return {PairFormReport::Status::hypothesis_failed, std::nullopt, "commuting unknowns"};
    if (combinatorial_rank(h) != n - 1)
        return {PairFormReport::Status::hypothesis_failed, std::nullopt, "solution rank is not n-1"};
    std::int64_t k = 0;
    if (detail::pair_form_match(e1, e2, k)) return {PairFormReport::Status::matched, k, ""};
    return {PairFormReport::Status::pattern_violation, std::nullopt, ""};
}

} // namespace weq
