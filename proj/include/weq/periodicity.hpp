#pragma once

/**
 * @file periodicity.hpp
 * @brief If U_i = V_i for m+n exponents, it holds for every exponent.
 *
 * U_i = s0 u1^i s1 ... um^i sm and V_i = t0 v1^i t1 ... vn^i tn. Clearing
 * the geometric sums, D * (P(U_i) - P(V_i)) with
 * D = prod (X^|uj| - 1) * prod (X^|vk| - 1) collapses to
 * sum_j y_j X^(i*|u1..uj|) + sum_{k in K} z_k X^(i*|v1..vk|), where the
 * coefficients do not depend on i and K collects the v-prefix lengths that
 * are not u-prefix lengths. At most m+n distinct slopes occur, so equality
 * at m+n exponents forces every grouped coefficient to vanish (the
 * generalized Vandermonde argument), and then U_i = V_i for all i.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "weq/errors.hpp"
#include "weq/polyring.hpp"
#include "weq/words.hpp"

namespace weq {

struct PeriodicityInstance {
    std::vector<Word> s; // m+1 words, possibly empty
    std::vector<Word> u; // m nonempty words
    std::vector<Word> t; // n+1 words
    std::vector<Word> v; // n nonempty words

    PeriodicityInstance(std::vector<Word> s_, std::vector<Word> u_, std::vector<Word> t_, std::vector<Word> v_)
        : s(std::move(s_)), u(std::move(u_)), t(std::move(t_)), v(std::move(v_)) {
        if (u.empty() || v.empty()) throw domain_error("PeriodicityInstance: m and n must be >= 1");
        if (s.size() != u.size() + 1 || t.size() != v.size() + 1)
            throw domain_error("PeriodicityInstance: need m+1 separators for m periods");
        for (const auto& w : u)
            if (w.empty()) throw domain_error("PeriodicityInstance: empty u word");
        for (const auto& w : v)
            if (w.empty()) throw domain_error("PeriodicityInstance: empty v word");
    }

    std::size_t m() const { return u.size(); }
    std::size_t n() const { return v.size(); }
};

namespace detail {

inline Word expand_side(const std::vector<Word>& seps, const std::vector<Word>& periods, std::int64_t i) {
    Word out = seps[0];
    for (std::size_t j = 0; j < periods.size(); ++j) {
        out = out + periods[j].repeated(i);
        out = out + seps[j + 1];
    }
    return out;
}

} // namespace detail

/// (U_i, V_i) by literal expansion.
inline std::pair<Word, Word> expand(const PeriodicityInstance& inst, std::int64_t i) {
    if (i < 0) throw domain_error("expand: negative exponent");
    return {detail::expand_side(inst.s, inst.u, i), detail::expand_side(inst.t, inst.v, i)};
}

struct GroupedTerm {
    std::int64_t slope;
    IntPoly coeff;
};

struct GroupedForm {
    /// The cleared denominator D; the terms satisfy
    /// sum coeff * X^(i*slope) = D * (P(U_i) - P(V_i)) for every i >= 0.
    IntPoly multiplier;
    std::vector<GroupedTerm> terms; // ascending slope, zero coefficients kept
    std::vector<std::int64_t> k_set; // the set K of extra v-prefix lengths

    bool all_zero() const {
        for (const auto& t : terms)
            if (!t.coeff.is_zero()) return false;
        return true;
    }

    IntPoly evaluate(std::int64_t i) const {
        IntPoly r;
        for (const auto& t : terms) r += t.coeff.shifted(i * t.slope);
        return r;
    }
};

/// Groups D * (P(U_i) - P(V_i)) by exponent slope. Requires
/// |u1...um| = |v1...vn|.
inline GroupedForm group_coefficients(const PeriodicityInstance& inst) {
    const std::size_t m = inst.m(), n = inst.n();

    auto prefix_lengths = [](const std::vector<Word>& periods) {
        std::vector<std::int64_t> pl(periods.size() + 1, 0);
        for (std::size_t j = 0; j < periods.size(); ++j)
            pl[j + 1] = pl[j] + static_cast<std::int64_t>(periods[j].size());
        return pl;
    };
    auto sep_lengths = [](const std::vector<Word>& seps) {
        std::vector<std::int64_t> cl(seps.size(), 0);
        for (std::size_t j = 1; j < seps.size(); ++j)
            cl[j] = cl[j - 1] + static_cast<std::int64_t>(seps[j - 1].size());
        return cl;
    };
    const auto uc = prefix_lengths(inst.u); // |u1...uj|
    const auto vc = prefix_lengths(inst.v);
    const auto cs = sep_lengths(inst.s); // |s0...s(j-1)|
    const auto ct = sep_lengths(inst.t);

    if (uc[m] != vc[n])
        throw lengths_incompatible_error("group_coefficients: total period lengths differ (" +
                                         std::to_string(uc[m]) + " vs " + std::to_string(vc[n]) + ")");

    IntPoly D(1);
    for (const auto& w : inst.u) D *= IntPoly::monomial(static_cast<std::int64_t>(w.size()), 1) - IntPoly(1);
    for (const auto& w : inst.v) D *= IntPoly::monomial(static_cast<std::int64_t>(w.size()), 1) - IntPoly(1);
    auto cofactor = [&](const std::vector<Word>& own, std::size_t skip, const std::vector<Word>& other) {
        IntPoly d(1);
        for (std::size_t j = 0; j < own.size(); ++j) {
            if (j == skip) continue;
            d *= IntPoly::monomial(static_cast<std::int64_t>(own[j].size()), 1) - IntPoly(1);
        }
        for (const auto& w : other) d *= IntPoly::monomial(static_cast<std::int64_t>(w.size()), 1) - IntPoly(1);
        return d;
    };

    std::map<std::int64_t, IntPoly> groups;
    auto add = [&](std::int64_t slope, const IntPoly& p) { groups[slope] += p; };

    // P(U_i) * D = sum_j P(sj) X^cs[j] D X^(i*uc[j])
    //            + sum_j P(uj) X^cs[j] D/(X^|uj|-1) (X^(i*uc[j]) - X^(i*uc[j-1]))
    for (std::size_t j = 0; j <= m; ++j)
        if (!inst.s[j].empty()) add(uc[j], encode(inst.s[j]).shifted(cs[j]) * D);
    for (std::size_t j = 1; j <= m; ++j) {
        const IntPoly p = encode(inst.u[j - 1]).shifted(cs[j]) * cofactor(inst.u, j - 1, inst.v);
        add(uc[j], p);
        add(uc[j - 1], -p);
    }
    for (std::size_t j = 0; j <= n; ++j)
        if (!inst.t[j].empty()) add(vc[j], -(encode(inst.t[j]).shifted(ct[j]) * D));
    for (std::size_t j = 1; j <= n; ++j) {
        const IntPoly p = encode(inst.v[j - 1]).shifted(ct[j]) * cofactor(inst.v, j - 1, inst.u);
        add(vc[j], -p);
        add(vc[j - 1], p);
    }

    GroupedForm out;
    out.multiplier = std::move(D);
    const std::set<std::int64_t> u_slopes(uc.begin(), uc.end());
    for (std::size_t j = 0; j <= n; ++j)
        if (!u_slopes.count(vc[j])) out.k_set.push_back(static_cast<std::int64_t>(j));
    // ensure every slope slot appears, even with zero coefficient
    for (auto sl : u_slopes) groups[sl] += IntPoly();
    for (const auto& [slope, coeff] : groups) out.terms.push_back({slope, coeff});
    if (out.terms.size() > m + n)
        throw std::logic_error("group_coefficients: more than m+n slope groups");
    return out;
}

struct ImpliesAllReport {
    bool holds_on_I;
    std::optional<bool> holds_for_all; // empty when undetermined
    std::optional<GroupedForm> certificate;
    std::vector<std::int64_t> failures; // exponents in I where U_i != V_i
};

/// Checks U_i = V_i on I by expansion; with |I| >= m+n successes, certifies
/// the identity for all i by the vanishing of the grouped coefficients.
inline ImpliesAllReport implies_all(const PeriodicityInstance& inst, const std::set<std::int64_t>& I) {
    ImpliesAllReport rep{true, std::nullopt, std::nullopt, {}};
    std::int64_t max_i = 0;
    for (auto i : I) {
        max_i = std::max(max_i, i);
        auto [ui, vi] = expand(inst, i);
        if (ui != vi) {
            rep.holds_on_I = false;
            rep.failures.push_back(i);
        }
    }
    if (!rep.holds_on_I) {
        rep.holds_for_all = false;
        return rep;
    }
    if (I.size() >= inst.m() + inst.n()) {
        GroupedForm grouped = group_coefficients(inst); // lengths match: forced by two equalities
        rep.holds_for_all = grouped.all_zero();
        rep.certificate = std::move(grouped);
        if (*rep.holds_for_all) {
            for (std::int64_t i = max_i + 1; i <= max_i + 10; ++i) {
                auto [ui, vi] = expand(inst, i);
                if (ui != vi) throw std::logic_error("implies_all: certificate contradicts expansion");
            }
        }
    }
    return rep;
}

} // namespace weq
