#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "slopes/errors.hpp"
#include "slopes/polynomial.hpp"
#include "slopes/subspace.hpp"
#include "test_support.hpp"

using namespace slopes;

namespace {

SlopeMultiset ms(std::vector<SlopeMultiset::Entry> e) { return SlopeMultiset(std::move(e)); }

Poly ints(std::initializer_list<long> c) {
    Poly f;
    for (long x : c) f.emplace_back(x);
    return f;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
    const Rational a = Rational::parse("6/4");
    CHECK(a.str() == "3/2");
    CHECK(Rational::parse("-10/5").str() == "-2");
    CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("1.5"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse(""), InvalidInput);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational q = testing::small_rational(rng, 1000, 1000);
        CHECK(Rational::parse(q.str()) == q);
        CHECK(gcd(q.numerator(), q.denominator()) == 1);
        CHECK(q.denominator() > 0);
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(Rational(0), 5).is_infinite());
    CHECK(valuation(Rational(1), 3).value() == Rational(0));
    CHECK(valuation(Rational::parse("18/25"), 5).value() == Rational(-2));
    CHECK(valuation(Rational::parse("18/25"), 3).value() == Rational(2));
    CHECK_THROWS_AS(valuation(Rational(3), 4), InvalidInput);
    CHECK_THROWS_AS(valuation(Rational(3), 1), InvalidInput);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational x = testing::small_rational(rng, 200, 200);
        const Rational y = testing::small_rational(rng, 200, 200);
        if (x.is_zero() || y.is_zero()) continue;
        for (long p : {2L, 3L, 5L}) {
            CHECK(valuation(x * y, p).value() == valuation(x, p).value() + valuation(y, p).value());
        }
    }
}

TEST_CASE("newton polygon examples") {
    for (long p : {2L, 3L, 5L, 7L}) {
        const Rational P(p);
        CHECK(newton_polygon(ints({-1, 1}), p) == ms({{Rational(0), 1}}));
        CHECK(newton_polygon(Poly{-P, 0, 1}, p) == ms({{Rational(1, 2), 2}}));
        CHECK(newton_polygon(Poly{P, -(1 + P), 1}, p) == ms({{Rational(0), 1}, {Rational(1), 1}}));
    }
    CHECK_THROWS_AS(newton_polygon(Poly{}, 3), InvalidInput);
    CHECK_THROWS_AS(newton_polygon(Poly{0, 0}, 3), InvalidInput);
    CHECK_THROWS_AS(newton_polygon(Poly{0, 1}, 3), InvalidInput);
    CHECK_THROWS_AS(newton_polygon(Poly{1, 1, 0}, 3), InvalidInput);
}

TEST_CASE("newton polygon is multiplicative and sums to the degree") {
    std::mt19937_64 rng(2024);
    const long p = 3;
    auto random_poly = [&](std::size_t deg) {
        Poly f;
        for (std::size_t i = 0; i <= deg; ++i) {
            Rational c = testing::small_rational(rng, 30, 9);
            if ((i == 0 || i == deg) && c.is_zero()) c = Rational(p);
            f.push_back(c);
        }
        return f;
    };
    for (int iter = 0; iter < 150; ++iter) {
        const Poly f = random_poly(1 + iter % 4);
        const Poly g = random_poly(1 + (iter / 4) % 3);
        const auto nf = newton_polygon(f, p);
        const auto ng = newton_polygon(g, p);
        CHECK(nf.total() == poly_degree(f));
        CHECK(newton_polygon(poly_mul(f, g), p) == nf + ng);
    }
}

TEST_CASE("characteristic polynomial") {
    const long p = 5;
    CHECK(charpoly(RatMatrix::identity(2)) == ints({1, -2, 1}));
    CHECK(charpoly(RatMatrix::diagonal({1, p})) == ints({p, -(1 + p), 1}));
    CHECK(charpoly(companion(ints({-p, 0, 1}))) == ints({-p, 0, 1}));
    CHECK_THROWS_AS(charpoly(RatMatrix(2, 3)), InvalidInput);

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        const auto m = testing::random_matrix(rng, 1 + iter % 5);
        CHECK(charpoly(m) == testing::interpolated_charpoly(m));
        CHECK(m.det() == testing::laplace_det(m));
    }
}

TEST_CASE("charpoly vanishes at rational eigenvalues") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = 2 + iter % 3;
        RatMatrix t = testing::random_matrix(rng, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) t(i, j) = 0;
        const auto s = testing::random_invertible(rng, n);
        const RatMatrix a = s * t * s.inverse();
        const Poly chi = charpoly(a);
        for (std::size_t i = 0; i < n; ++i) CHECK(poly_eval(chi, t(i, i)).is_zero());
        const auto roots = rational_roots(chi);
        REQUIRE(roots.has_value());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::find(roots->begin(), roots->end(), t(i, i)) != roots->end());
    }
}

TEST_CASE("matrix and subspace helpers") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        const auto s = testing::random_invertible(rng, 3);
        CHECK(s * s.inverse() == RatMatrix::identity(3));
    }
    CHECK_THROWS_AS(RatMatrix::diagonal({1, 0}).inverse(), InvalidInput);

    const Subspace e1(2, {{1, 0}});
    const Subspace diag(2, {{1, 1}});
    CHECK(intersect(e1, diag).is_zero());
    CHECK((e1 + diag).is_whole());
    CHECK(e1.orthogonal() == Subspace(2, {{0, 1}}));
    CHECK(Subspace(3, {{2, 4, 6}, {1, 2, 3}}).dim() == 1);
    const RatMatrix phi = RatMatrix::diagonal({1, 5});
    CHECK(e1.is_stable(phi));
    CHECK(!diag.is_stable(phi));
    CHECK(e1.quotient(phi) == RatMatrix::diagonal({5}));
}

TEST_CASE("irreducibility certificates") {
    CHECK(provably_irreducible(ints({-3, 0, 1})));
    CHECK(!provably_irreducible(ints({-1, 0, 1})));
    CHECK(provably_irreducible(ints({-3, 0, 0, 0, 1})));   // Eisenstein at 3
    CHECK(provably_irreducible(ints({-27, 0, 0, 0, 1})));  // slope 3/4
    CHECK(!provably_irreducible(ints({-9, 0, 0, 0, 1})));  // (x^2-3)(x^2+3)
    CHECK(poly_squarefree(ints({-3, 0, 1})));
    CHECK(!poly_squarefree(ints({1, -2, 1})));
}
