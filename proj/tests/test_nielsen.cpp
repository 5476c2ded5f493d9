#include <catch_amalgamated.hpp>

#include "weq/dsl.hpp"
#include "weq/json_io.hpp"
#include "weq/nielsen.hpp"
#include "weq/oracle.hpp"
#include "sweep_util.hpp"

using namespace weq;

namespace {

Morphism morph(std::initializer_list<const char*> imgs) {
    Morphism h;
    for (const char* s : imgs) h.images.push_back(parse_word(s));
    return h;
}

using Kind = ElementaryTransformation::Kind;

std::size_t int_matrix_rank(const std::vector<std::vector<std::int64_t>>& a) {
    PolyMatrix m(a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m.at(i, j) = IntPoly(a[i][j]);
    return rank(m);
}

/// The full postcondition bundle checked on every decomposition.
void check_postconditions(const WordEquation& e, const Morphism& h) {
    const Decomposition d = decompose(e, h);
    // round trip
    REQUIRE(recompose(d) == h);
    // erased = empty images
    for (std::size_t x = 0; x < e.n; ++x) REQUIRE(d.erased.count(x) == h.images[x].empty());
    // principal solution solves E symbolically
    const IndexMorphism f = principal_solution(d);
    REQUIRE(f.apply(e.lhs) == f.apply(e.rhs));
    // rank accounting: rank(h) <= n - s - t
    const std::size_t s = d.erased.size(), t = d.singular_count();
    REQUIRE(s + t <= e.n);
    REQUIRE(rank_at_most(h, e.n - s - t));
    // residual identity h = g_k o f_k at every stage
    for (std::size_t k = 0; k <= d.steps.size(); ++k) {
        const IndexMorphism fk = stage_morphism(d, k);
        const Morphism gk = residual_morphism(d, k);
        for (std::size_t x = 0; x < e.n; ++x) {
            Word img;
            for (auto y : fk.images[x]) img = img + gk.images[y];
            REQUIRE(img == h.images[x]);
        }
    }
    // matrix evolution: regular steps preserve the rank of A_k, singular
    // steps drop it by at most one
    std::size_t prev = int_matrix_rank(occurrence_matrix(d, 0));
    REQUIRE(prev == e.n - s);
    for (std::size_t k = 1; k <= d.steps.size(); ++k) {
        const std::size_t cur = int_matrix_rank(occurrence_matrix(d, k));
        if (d.steps[k - 1].kind == Kind::regular) {
            REQUIRE(cur == prev);
        } else {
            REQUIRE(cur + 1 >= prev);
            REQUIRE(cur <= prev);
        }
        prev = cur;
    }
    REQUIRE(prev >= e.n - s - t);
    // coefficient identity at every stage: P(h(xi)) = sum_j B[i][j] P(g(xj))
    for (std::size_t k = 0; k <= d.steps.size(); ++k) {
        const PolyMatrix b = coefficient_matrix(d, k);
        const Morphism gk = residual_morphism(d, k);
        for (std::size_t i = 0; i < e.n; ++i) {
            IntPoly sum;
            for (std::size_t j = 0; j < e.n; ++j) sum += b.at(i, j) * encode(gk.images[j]);
            REQUIRE(sum == encode(h.images[i]));
        }
    }
}

} // namespace

TEST_CASE("decompose: the commuting worked example") {
    const WordEquation e(2, {0, 1}, {1, 0});
    const Morphism h = morph({"12", "1212"});
    const Decomposition d = decompose(e, h);

    REQUIRE(d.erased.empty());
    REQUIRE(d.steps.size() == 2);
    CHECK(d.steps[0] == ElementaryTransformation{Kind::regular, 1, 0});  // x2 -> x1 x2
    CHECK(d.steps[1] == ElementaryTransformation{Kind::singular, 1, 0}); // x2 -> x1
    CHECK(d.theta.images[0] == parse_word("12"));
    CHECK(recompose(d) == h);

    const IndexMorphism f = principal_solution(d);
    CHECK(f.images[0] == std::vector<std::size_t>{0});
    CHECK(f.images[1] == std::vector<std::size_t>{0, 0});

    // occurrence matrices
    CHECK(occurrence_matrix(d, 2) == std::vector<std::vector<std::int64_t>>{{1, 0}, {2, 0}});
    CHECK(occurrence_matrix(d, 0) == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
    CHECK(int_matrix_rank(occurrence_matrix(d, 2)) == 1);

    // final coefficient matrix [[1,0],[1+X^2,0]]
    const PolyMatrix b = coefficient_matrix(d, 2);
    CHECK(b.at(0, 0) == IntPoly(1));
    CHECK(b.at(0, 1).is_zero());
    CHECK(b.at(1, 0) == IntPoly::from_coeffs({1, 0, 1}));
    CHECK(b.at(1, 1).is_zero());
    CHECK(encode(parse_word("1212")) == IntPoly::from_coeffs({1, 0, 1}) * encode(parse_word("12")));

    // cone generators {(1,2), (0,0)}
    const auto cone = length_type_cone(d);
    CHECK(cone[0] == std::vector<std::int64_t>{1, 2});
    CHECK(cone[1] == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("decompose: trivial equation keeps theta = h") {
    const WordEquation e(2, {0, 1}, {0, 1});
    const Morphism h = morph({"121", "2"});
    const Decomposition d = decompose(e, h);
    CHECK(d.steps.empty());
    CHECK(d.theta == h);
    CHECK(recompose(d) == h);
    // stage 0 with no erasures: identity matrices
    CHECK(occurrence_matrix(d, 0) == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
    CHECK(coefficient_matrix(d, 0) == PolyMatrix::identity(2));
    const auto cone = length_type_cone(d);
    CHECK(cone[0] == std::vector<std::int64_t>{1, 0});
    CHECK(cone[1] == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("decompose: empty image goes to alpha") {
    const WordEquation e(2, {0, 1}, {1, 0});
    const Morphism h = morph({"1", ""});
    const Decomposition d = decompose(e, h);
    CHECK(d.erased == std::set<std::size_t>{1});
    CHECK(d.steps.empty());
    CHECK(recompose(d) == h);
    CHECK(occurrence_matrix(d, 0) == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 0}});
}

TEST_CASE("decompose: rejects non-solutions") {
    const WordEquation e(2, {0, 1}, {1, 0});
    CHECK_THROWS_AS(decompose(e, morph({"1", "2"})), not_a_solution_error);
}

TEST_CASE("stage indices are range-checked") {
    const WordEquation e(2, {0, 1}, {1, 0});
    const Decomposition d = decompose(e, morph({"12", "1212"}));
    CHECK_THROWS_AS(stage_morphism(d, 3), index_error);
    CHECK_THROWS_AS(residual_morphism(d, 5), index_error);
    CHECK_THROWS_AS(occurrence_matrix(d, 9), index_error);
}

TEST_CASE("decompose: rank-2 solution of the cyclic equation spans the plane") {
    const WordEquation e(3, {0, 1, 2}, {2, 0, 1}); // x1 x2 x3 = x3 x1 x2
    const Morphism h = morph({"1", "2", "12"});
    const Decomposition d = decompose(e, h);
    REQUIRE(recompose(d) == h);
    const auto cone = length_type_cone(d);
    // generators include (1,0,1) and (0,1,1): the plane X1 + X2 = X3
    std::size_t nonzero = 0;
    for (const auto& g : cone) {
        const bool zero = g == std::vector<std::int64_t>{0, 0, 0};
        if (!zero) {
            REQUIRE(g[0] + g[1] == g[2]);
            ++nonzero;
        }
    }
    REQUIRE(nonzero == 2);
    // and h's own length type lies in the cone span
    REQUIRE(h.length_type() == std::vector<std::int64_t>{1, 1, 2});
}

TEST_CASE("decompose: exhaustive postconditions on short equations") {
    for (std::size_t n = 1; n <= 2; ++n) {
        sweep::for_each_equation(n, 5, [&](const WordEquation& e) {
            sweep::for_each_morphism(n, 3, 2, [&](const Morphism& h) {
                if (!is_solution(h, e)) return;
                check_postconditions(e, h);
            });
        });
    }
    // a slice of three-unknown equations
    sweep::for_each_equation(3, 4, [&](const WordEquation& e) {
        sweep::for_each_morphism(3, 2, 2, [&](const Morphism& h) {
            if (!is_solution(h, e)) return;
            check_postconditions(e, h);
        });
    });
}

TEST_CASE("decomposition JSON round trip") {
    const WordEquation e(3, {0, 1, 2}, {2, 0, 1});
    const Morphism h = morph({"1", "2", "12"});
    const Decomposition d = decompose(e, h);
    const NameTable names = NameTable::indexed(3);
    const Json j = decomposition_to_json(d, names);
    const Decomposition back = decomposition_from_json(j, names);
    CHECK(back.erased == d.erased);
    CHECK(back.steps == d.steps);
    CHECK(back.theta == d.theta);
    CHECK(recompose(back) == h);
}
