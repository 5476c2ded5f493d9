#include <catch_amalgamated.hpp>

#include <random>

#include "weq/dsl.hpp"
#include "weq/words.hpp"

using namespace weq;

namespace {

Word w(const std::string& text) { return parse_word(text); }

/// All words of length exactly `len` over {1..alphabet}.
std::vector<Word> words_of_length(std::size_t len, int alphabet) {
    std::vector<Word> out;
    std::vector<int> cur(len, 1);
    for (;;) {
        Word x;
        for (int c : cur) x.letters.push_back(c);
        out.push_back(std::move(x));
        std::size_t i = len;
        while (i > 0) {
            --i;
            if (cur[i] < alphabet) {
                ++cur[i];
                break;
            }
            cur[i] = 1;
            if (i == 0) return out;
        }
        if (len == 0) return out;
    }
}

std::vector<Word> words_up_to(std::size_t maxlen, int alphabet, std::size_t minlen = 1) {
    std::vector<Word> out;
    for (std::size_t l = minlen; l <= maxlen; ++l)
        for (auto& x : words_of_length(l, alphabet)) out.push_back(std::move(x));
    return out;
}

/// Independent primitive-root oracle: smallest period d with w = prefix(d)^(n/d),
/// verified by explicit repetition.
Word naive_root(const Word& x) {
    for (std::size_t d = 1; d <= x.size(); ++d) {
        if (x.size() % d != 0) continue;
        if (x.prefix(d).repeated(static_cast<std::int64_t>(x.size() / d)) == x) return x.prefix(d);
    }
    return x;
}

} // namespace

TEST_CASE("encode: positional read-off") {
    CHECK(encode(w("1212")) == IntPoly::from_coeffs({1, 2, 1, 2}));
    CHECK(encode(Word{}) == IntPoly());
    CHECK(encode(w("1221")) == IntPoly::from_coeffs({1, 2, 2, 1}));
    CHECK(decode(encode(w("1221"))) == w("1221"));
    CHECK(encode(w("1212")).to_string() == "1 + 2*X + X^2 + 2*X^3");
}

TEST_CASE("encode: rejects letters below 1") {
    Word bad;
    bad.letters = {Letter(1), Letter(0)};
    CHECK_THROWS_AS(encode(bad), invalid_alphabet_error);
}

TEST_CASE("decode: examples and gap detection") {
    CHECK(decode(IntPoly::from_coeffs({1, 2, 1, 2})) == w("1212"));
    CHECK(decode(IntPoly()) == Word{});
    CHECK_THROWS_AS(decode(IntPoly::from_coeffs({1, 0, 1})), not_a_word_image_error);
    CHECK_THROWS_AS(decode(IntPoly::from_coeffs({1, -2, 1})), not_a_word_image_error);
}

TEST_CASE("encode is injective: decode inverts it on all short words") {
    // injectivity follows from the exact round trip
    for (int alphabet : {9}) {
        for (std::size_t len = 0; len <= 4; ++len) {
            for (const auto& x : words_of_length(len, alphabet)) {
                REQUIRE(decode(encode(x)) == x);
            }
        }
    }
    for (const auto& x : words_up_to(6, 2)) REQUIRE(decode(encode(x)) == x);
}

TEST_CASE("encode: concatenation identity") {
    std::mt19937_64 rng(20260809);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t parts = 1 + rng() % 4;
        std::vector<Word> ws;
        Word cat;
        for (std::size_t i = 0; i < parts; ++i) {
            Word x;
            const std::size_t len = rng() % 5;
            for (std::size_t j = 0; j < len; ++j) x.letters.push_back(1 + static_cast<long long>(rng() % 9));
            cat = cat + x;
            ws.push_back(std::move(x));
        }
        IntPoly sum;
        std::int64_t shift = 0;
        for (const auto& x : ws) {
            sum += encode(x).shifted(shift);
            shift += static_cast<std::int64_t>(x.size());
        }
        REQUIRE(encode(cat) == sum);
    }
}

TEST_CASE("encode_power: closed formula equals repetition") {
    CHECK(encode_power(w("12"), 2) == encode(w("1212")));
    CHECK(encode_power(w("12"), 0) == IntPoly());
    CHECK(encode_power(w("1"), 3) == encode(w("111")));
    CHECK_THROWS_AS(encode_power(Word{}, 1), domain_error);
    for (const auto& x : words_up_to(4, 2)) {
        for (std::int64_t k = 0; k <= 4; ++k) {
            REQUIRE(encode_power(x, k) == encode(x.repeated(k)));
        }
    }
}

TEST_CASE("primitive_root: examples") {
    auto [r1, e1] = primitive_root(w("1212"));
    CHECK(r1 == w("12"));
    CHECK(e1 == 2);
    auto [r2, e2] = primitive_root(w("12"));
    CHECK(r2 == w("12"));
    CHECK(e2 == 1);
    auto [r3, e3] = primitive_root(w("111"));
    CHECK(r3 == w("1"));
    CHECK(e3 == 3);
    CHECK_THROWS_AS(primitive_root(Word{}), domain_error);
}

TEST_CASE("primitive_root: exhaustive against the naive oracle") {
    for (const auto& x : words_up_to(8, 2)) {
        const auto pr = primitive_root(x);
        REQUIRE(pr.root == naive_root(x));
        REQUIRE(pr.root.repeated(pr.exponent) == x);
        REQUIRE(pr.exponent == static_cast<std::int64_t>(x.size() / pr.root.size()));
        // the root itself is primitive
        REQUIRE(naive_root(pr.root) == pr.root);
    }
}

TEST_CASE("fine_wilf_check: examples") {
    const auto a = fine_wilf_check(w("12"), w("1212"));
    CHECK(a.bound == 4);
    CHECK(a.common_prefix_len == 4);
    CHECK(a.applies);
    CHECK(a.roots_equal);

    const auto b = fine_wilf_check(w("1"), w("1"));
    CHECK(b.bound == 1);
    CHECK(b.applies);
    CHECK(b.roots_equal);

    // 1212... and 2121... disagree at the first letter
    const auto c = fine_wilf_check(w("12"), w("21"));
    CHECK(c.bound == 2); // 2 + 2 - gcd(2, 2)
    CHECK(c.common_prefix_len == 0);
    CHECK_FALSE(c.applies);
    CHECK_FALSE(c.roots_equal);

    // 121121... vs 121212... agree on exactly 3 letters, below the bound 4
    const auto d = fine_wilf_check(w("121"), w("12"));
    CHECK(d.bound == 4);
    CHECK(d.common_prefix_len == 3);
    CHECK_FALSE(d.applies);
    CHECK_FALSE(d.roots_equal);

    CHECK_THROWS_AS(fine_wilf_check(Word{}, w("1")), domain_error);
}

TEST_CASE("fine_wilf_check: applies implies equal roots, exhaustively") {
    const auto all = words_up_to(5, 2);
    for (const auto& u : all) {
        for (const auto& v : all) {
            const auto rep = fine_wilf_check(u, v);
            if (rep.applies) REQUIRE(rep.roots_equal);
        }
    }
}

TEST_CASE("commutation_report: examples") {
    const auto a = commutation_report(w("12"), w("1212"));
    CHECK(a.rho_equal);
    CHECK(a.all_equal_length_products_equal);
    CHECK(a.nontrivial_relation_exists);
    CHECK(a.rational_encodings_equal);
    CHECK(a.all_agree());

    const auto b = commutation_report(w("1"), w("2"));
    CHECK_FALSE(b.rho_equal);
    CHECK_FALSE(b.all_equal_length_products_equal);
    CHECK_FALSE(b.nontrivial_relation_exists);
    CHECK_FALSE(b.rational_encodings_equal);

    const auto c = commutation_report(w("1"), w("1"));
    CHECK(c.all_agree());
    CHECK(c.rho_equal);

    CHECK_THROWS_AS(commutation_report(Word{}, w("1")), domain_error);
}

TEST_CASE("commutation_report: four-way equivalence, exhaustively") {
    const auto all = words_up_to(4, 2);
    for (const auto& u : all) {
        for (const auto& v : all) {
            REQUIRE(commutation_report(u, v).all_agree());
        }
    }
}

TEST_CASE("word text form round-trips") {
    for (const std::string s : {"", "1212", "9", "123456789"}) {
        CHECK(parse_word(s).to_text() == s);
    }
    CHECK(parse_word("[1,12,3]").to_text() == "[1,12,3]");
    CHECK(parse_word("[10]").letters == std::vector<Letter>{Letter(10)});
    Word big;
    big.letters = {Letter(1), Letter(12), Letter(3)};
    CHECK(big.to_text() == "[1,12,3]");
    CHECK(parse_word(big.to_text()) == big);
}
