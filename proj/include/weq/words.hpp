#pragma once

/**
 * @file words.hpp
 * @brief Words over positive-integer alphabets and their polynomial encodings.
 *
 * A word a0 a1 ... a(n-1) is encoded as the polynomial
 * a0 + a1*X + ... + a(n-1)*X^(n-1). Letters must be >= 1, which makes the
 * encoding injective. On top of the encoding sit the classical facts this
 * library verifies computationally: unique primitive roots, the four-way
 * commutation equivalence, and the Fine and Wilf periodicity bound.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "weq/errors.hpp"
#include "weq/integer.hpp"
#include "weq/polyring.hpp"

namespace weq {

/// A letter is a positive integer of arbitrary magnitude.
using Letter = Int;

struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    const Letter& operator[](std::size_t i) const { return letters[i]; }

    Int count(const Letter& a) const {
        return static_cast<long long>(std::count(letters.begin(), letters.end(), a));
    }

    friend Word operator+(const Word& a, const Word& b) {
        Word r = a;
        r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
        return r;
    }

    Word repeated(std::int64_t k) const {
        Word r;
        r.letters.reserve(letters.size() * static_cast<std::size_t>(k > 0 ? k : 0));
        for (std::int64_t t = 0; t < k; ++t)
            r.letters.insert(r.letters.end(), letters.begin(), letters.end());
        return r;
    }

    Word prefix(std::size_t len) const {
        return Word(std::vector<Letter>(letters.begin(), letters.begin() + std::min(len, size())));
    }

    Word factor(std::size_t pos, std::size_t len) const {
        return Word(std::vector<Letter>(letters.begin() + pos, letters.begin() + pos + len));
    }

    bool is_prefix_of(const Word& w) const {
        return size() <= w.size() && std::equal(letters.begin(), letters.end(), w.letters.begin());
    }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return letters != o.letters; }
    bool operator<(const Word& o) const {
        return std::lexicographical_compare(letters.begin(), letters.end(), o.letters.begin(), o.letters.end());
    }

    /// Text form: digits for alphabets within 1..9, bracketed integers
    /// otherwise, e.g. "1212" or "[1,12,3]". The empty word prints as "".
    std::string to_text() const {
        bool small = true;
        for (const auto& a : letters)
            if (a > 9) small = false;
        std::ostringstream out;
        if (small) {
            for (const auto& a : letters) out << a.str();
        } else {
            out << "[";
            for (std::size_t i = 0; i < letters.size(); ++i) {
                if (i) out << ",";
                out << letters[i].str();
            }
            out << "]";
        }
        return out.str();
    }
};

/// P_w: coefficient of X^i is the letter at position i.
inline IntPoly encode(const Word& w) {
    IntPoly p;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1) throw invalid_alphabet_error("encode: letter < 1 at position " + std::to_string(i));
        p.add_term(static_cast<std::int64_t>(i), w[i]);
    }
    return p;
}

/// Inverse of encode. Every coefficient from 0 to deg(p) must be >= 1.
inline Word decode(const IntPoly& p) {
    Word w;
    const std::int64_t d = p.degree();
    for (std::int64_t i = 0; i <= d; ++i) {
        Int c = p.coeff(i);
        if (c < 1) throw not_a_word_image_error("decode: coefficient gap or nonpositive coefficient at X^" + std::to_string(i));
        w.letters.push_back(c);
    }
    return w;
}

/// P(w^k) via the closed formula P(w) * (X^(k|w|)-1)/(X^(|w|)-1).
inline IntPoly encode_power(const Word& w, std::int64_t k) {
    if (k < 0) throw domain_error("encode_power: negative exponent");
    if (k == 0) return IntPoly();
    if (w.empty()) throw domain_error("encode_power: empty word with positive exponent");
    const auto n = static_cast<std::int64_t>(w.size());
    return encode(w) * cyclic_quotient(k * n, n);
}

struct PrimitiveRoot {
    Word root;
    std::int64_t exponent;
};

/// The unique primitive root, found over ascending divisors of |w|.
inline PrimitiveRoot primitive_root(const Word& w) {
    if (w.empty()) throw domain_error("primitive_root: empty word");
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = (w[i] == w[i % d]);
        if (periodic) return {w.prefix(d), static_cast<std::int64_t>(n / d)};
    }
    return {w, 1}; // unreachable: d = n always succeeds
}

struct FineWilfReport {
    std::int64_t bound;
    std::int64_t common_prefix_len;
    bool applies;
    bool roots_equal;
};

/// Compares u^inf and v^inf on the first |u|+|v|-gcd(|u|,|v|) letters.
inline FineWilfReport fine_wilf_check(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw domain_error("fine_wilf_check: empty word");
    const auto lu = static_cast<std::int64_t>(u.size());
    const auto lv = static_cast<std::int64_t>(v.size());
    const std::int64_t bound = lu + lv - std::gcd(lu, lv);
    std::int64_t common = 0;
    while (common < bound &&
           u[static_cast<std::size_t>(common % lu)] == v[static_cast<std::size_t>(common % lv)])
        ++common;
    const bool applies = common >= bound;
    const bool roots_equal = primitive_root(u).root == primitive_root(v).root;
    return {bound, common, applies, roots_equal};
}

struct CommutationReport {
    bool rho_equal;
    bool all_equal_length_products_equal;
    bool nontrivial_relation_exists;
    bool rational_encodings_equal;

    bool all_agree() const {
        return rho_equal == all_equal_length_products_equal &&
               rho_equal == nontrivial_relation_exists &&
               rho_equal == rational_encodings_equal;
    }
};

/// The four equivalent commutation conditions, each computed independently:
/// equal primitive roots; equality of all equal-length {u,v}-products (up to
/// `product_factor_cap` factors); uv = vu; and the cross-multiplied equality
/// P(u)*(X^|v|-1) = P(v)*(X^|u|-1).
inline CommutationReport commutation_report(const Word& u, const Word& v, int product_factor_cap = 4) {
    if (u.empty() || v.empty()) throw domain_error("commutation_report: empty word");

    const bool rho = primitive_root(u).root == primitive_root(v).root;

    bool products_equal = true;
    {
        std::map<std::size_t, Word> first_of_length;
        std::vector<Word> level{Word{}};
        for (int k = 1; k <= product_factor_cap && products_equal; ++k) {
            std::vector<Word> next;
            next.reserve(level.size() * 2);
            for (const auto& base : level) {
                next.push_back(base + u);
                next.push_back(base + v);
            }
            for (const auto& p : next) {
                auto [it, inserted] = first_of_length.emplace(p.size(), p);
                if (!inserted && it->second != p) {
                    products_equal = false;
                    break;
                }
            }
            level = std::move(next);
        }
    }

    const bool relation = (u + v == v + u);

    const auto lu = static_cast<std::int64_t>(u.size());
    const auto lv = static_cast<std::int64_t>(v.size());
    const IntPoly xu = IntPoly::monomial(lu, 1) - IntPoly(1);
    const IntPoly xv = IntPoly::monomial(lv, 1) - IntPoly(1);
    const bool rational = (encode(u) * xv == encode(v) * xu);

    return {rho, products_equal, relation, rational};
}

} // namespace weq
