#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "weq/lhp.hpp"

using namespace weq;

namespace {

LinearForm lf(std::vector<std::int64_t> cs) { return LinearForm(std::move(cs)); }

GenPoly mono(std::vector<std::int64_t> cs, long long c = 1) {
    return GenPoly::monomial(lf(std::move(cs)), c);
}

GenPoly rand_gp(std::mt19937_64& rng, std::size_t dim) {
    GenPoly g(dim);
    const std::size_t terms = rng() % 5;
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::int64_t> cs(dim);
        for (auto& c : cs) c = rng() % 3;
        g.add_term(lf(std::move(cs)), static_cast<long long>(rng() % 7) - 3);
    }
    return g;
}

/// Test-local multivariate multiplication through the isomorphism
/// X^{Xi} -> Yi: dense array over a small exponent box.
GenPoly iso_mul(const GenPoly& a, const GenPoly& b) {
    const std::size_t dim = a.dim();
    std::map<std::vector<std::int64_t>, Int> dense;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            std::vector<std::int64_t> e(dim);
            for (std::size_t i = 0; i < dim; ++i) e[i] = pa[i] + pb[i];
            dense[e] += ca * cb;
        }
    GenPoly r(dim);
    for (const auto& [e, c] : dense) r.add_term(LinearForm{std::vector<std::int64_t>(e)}, c);
    return r;
}

} // namespace

TEST_CASE("GenPoly arithmetic: four-term expansion") {
    // (1 - X^{X3}) * (X^{X1+X2} - 1)
    const GenPoly a = mono({0, 0, 0}) - mono({0, 0, 1});
    const GenPoly b = mono({1, 1, 0}) - mono({0, 0, 0});
    const GenPoly expect =
        mono({1, 1, 0}) - mono({1, 1, 1}) - mono({0, 0, 0}) + mono({0, 0, 1});
    CHECK(a * b == expect);
    CHECK((a * b).to_string() == "-1 + X^{X3} + X^{X1+X2} - X^{X1+X2+X3}");
}

TEST_CASE("GenPoly arithmetic: identities") {
    std::mt19937_64 rng(9);
    const GenPoly zero(3);
    for (int t = 0; t < 100; ++t) {
        const GenPoly a = rand_gp(rng, 3);
        CHECK(a + zero == a);
        CHECK(a - a == zero);
    }
    CHECK(mono({1, 0}) - mono({1, 0}) == GenPoly(2));
    CHECK_THROWS_AS(mono({1, 0}) + mono({1, 0, 0}), shape_error);
}

TEST_CASE("evaluate_at: substitution with collisions") {
    const GenPoly s1 = mono({0, 0, 0}) - mono({0, 0, 1}); // 1 - X^{X3}
    CHECK(evaluate_at(s1, {1, 1, 2}) == IntPoly::from_coeffs({1, 0, -1}));

    std::mt19937_64 rng(10);
    for (int t = 0; t < 50; ++t) {
        const GenPoly g = rand_gp(rng, 3);
        Int coeff_sum = 0;
        for (const auto& [p, c] : g.terms()) coeff_sum += c;
        REQUIRE(evaluate_at(g, {0, 0, 0}) == IntPoly(coeff_sum));
    }

    const GenPoly collide = mono({1, 0}) - mono({0, 1}); // X^{X1} - X^{X2}
    CHECK(evaluate_at(collide, {3, 3}).is_zero());

    CHECK_THROWS_AS(evaluate_at(collide, {3, -1}), domain_error);
    CHECK_THROWS_AS(evaluate_at(collide, {3, 3, 3}), shape_error);
}

TEST_CASE("evaluate_at is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const GenPoly a = rand_gp(rng, 3), b = rand_gp(rng, 3);
        LengthType L(3);
        for (auto& l : L) l = rng() % 5;
        REQUIRE(evaluate_at(a * b, L) == evaluate_at(a, L) * evaluate_at(b, L));
        REQUIRE(evaluate_at(a + b, L) == evaluate_at(a, L) + evaluate_at(b, L));
    }
}

TEST_CASE("multiplication agrees with the multivariate image") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const GenPoly a = rand_gp(rng, 3), b = rand_gp(rng, 3);
        REQUIRE(a * b == iso_mul(a, b));
    }
}

TEST_CASE("precedes: componentwise order") {
    CHECK(precedes(lf({1, 0, 0}), lf({1, 0, 1})));
    CHECK_FALSE(precedes(lf({1, 0}), lf({0, 1})));
    CHECK_FALSE(precedes(lf({0, 1}), lf({1, 0})));
    CHECK(precedes(lf({2, 1, 0}), lf({2, 2, 1})));
    CHECK_THROWS_AS(precedes(lf({1}), lf({1, 0})), shape_error);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::int64_t> p(3), q(3);
        for (std::size_t i = 0; i < 3; ++i) {
            p[i] = rng() % 4;
            q[i] = rng() % 4;
        }
        if (!precedes(lf(p), lf(q))) continue;
        LengthType L(3);
        for (auto& l : L) l = rng() % 10;
        REQUIRE(lf(p).evaluate(L) <= lf(q).evaluate(L));
    }
}

TEST_CASE("split_signs: multiplicity expansion and cancellation") {
    const auto empty = split_signs(GenPoly(3));
    CHECK(empty.positives.empty());
    CHECK(empty.negatives.empty());

    const GenPoly g = mono({1, 0}, 2) - mono({0, 1});
    const auto s = split_signs(g);
    REQUIRE(s.positives == std::vector<LinearForm>{lf({1, 0}), lf({1, 0})});
    REQUIRE(s.negatives == std::vector<LinearForm>{lf({0, 1})});
    // cancelled storage: no form on both sides
    for (const auto& p : s.positives)
        for (const auto& q : s.negatives) REQUIRE(p != q);
}

TEST_CASE("split_signs: the worked 8-term minor") {
    // s = X^{2X1+X2} + X^{2X1+2X2+X3} + X^{X1+2X3} + X^{X1+X2+X3}
    //   - X^{2X1+X2+X3} - X^{X1+X3} - X^{2X1+2X2} - X^{X1+X2+2X3}
    GenPoly s(3);
    s += mono({2, 1, 0}) + mono({2, 2, 1}) + mono({1, 0, 2}) + mono({1, 1, 1});
    s -= mono({2, 1, 1}) + mono({1, 0, 1}) + mono({2, 2, 0}) + mono({1, 1, 2});
    const auto split = split_signs(s);
    const std::vector<LinearForm> pos_expect{lf({1, 0, 2}), lf({1, 1, 1}), lf({2, 1, 0}), lf({2, 2, 1})};
    const std::vector<LinearForm> neg_expect{lf({1, 0, 1}), lf({1, 1, 2}), lf({2, 1, 1}), lf({2, 2, 0})};
    CHECK(split.positives == pos_expect);
    CHECK(split.negatives == neg_expect);
}

TEST_CASE("LinearForm text form") {
    CHECK(lf({0, 0, 0}).to_string() == "0");
    CHECK(lf({1, 0, 1}).to_string() == "X1+X3");
    CHECK(lf({2, 1, 0}).to_string() == "2X1+X2");
}
