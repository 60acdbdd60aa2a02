#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "slopes/errors.hpp"
#include "slopes/ff_sheaf.hpp"

using namespace slopes;

namespace {

FFSheaf O(Rational slope, std::int64_t copies = 1) { return FFSheaf::from_copies({{slope, copies}}); }

FFSheaf random_bundle(std::mt19937_64& rng) {
    std::vector<FFSheaf::Summand> s;
    const int pieces = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < pieces; ++k) {
        const long h = 1 + static_cast<long>(rng() % 4);
        const long d = static_cast<long>(rng() % 9) - 4;
        s.push_back({Rational(Integer(d), Integer(h)), 1 + static_cast<std::int64_t>(rng() % 2)});
    }
    return FFSheaf::from_copies(s);
}

}  // namespace

TEST_CASE("canonicalize") {
    CHECK(FFSheaf::canonicalize({{Rational(1, 2), 4}}) == O(Rational(1, 2), 2));
    CHECK(FFSheaf::canonicalize({{0, 3}}) == O(0, 3));
    CHECK_THROWS_AS(FFSheaf::canonicalize({{Rational(2, 3), 2}}), InvalidInput);
    const auto mixed = FFSheaf::canonicalize({{0, 1}, {Rational(1, 2), 2}, {0, 2}}, {{"infty", {1, 3}}});
    CHECK(mixed.bundle() == std::vector<FFSheaf::Summand>{{Rational(1, 2), 1}, {0, 3}});
    CHECK(mixed.torsion().at("infty") == std::vector<std::int64_t>{3, 1});
    CHECK(FFSheaf::canonicalize({{Rational(1, 2), 2}, {0, 3}}, mixed.torsion()) == mixed);
    CHECK(FFSheaf::from_copies(mixed.bundle(), mixed.torsion()) == mixed);
    CHECK_THROWS_AS(FFSheaf::from_copies({}, {{"infty", {0}}}), InvalidInput);
}

TEST_CASE("tensor products") {
    CHECK(tensor(O(Rational(1, 2)), O(Rational(1, 2))) == O(1, 4));
    CHECK(tensor(O(Rational(1, 2)), O(Rational(1, 3))) == O(Rational(5, 6)));
    const auto e = FFSheaf::from_copies({{Rational(1, 3), 2}, {-1, 1}});
    CHECK(tensor(O(0), e) == e);
    const auto tors = FFSheaf::from_copies({}, {{"infty", {2}}});
    CHECK_THROWS_AS(tensor(tors, tors), InvalidInput);
    CHECK(tensor(O(Rational(1, 2)), tors).torsion().at("infty") == std::vector<std::int64_t>{2, 2});

    std::mt19937_64 rng(1);
    for (int iter = 0; iter < 300; ++iter) {
        const auto a = random_bundle(rng);
        const auto b = random_bundle(rng);
        const auto t = tensor(a, b);
        CHECK(t.rank() == a.rank() * b.rank());
        CHECK(t.degree() == a.rank() * b.degree() + b.rank() * a.degree());
        CHECK(direct_sum(a, b).rank() == a.rank() + b.rank());
        CHECK(direct_sum(a, b).degree() == a.degree() + b.degree());
        CHECK(tensor(a, b) == tensor(b, a));
        CHECK(FFSheaf::canonicalize([&] {
                  std::vector<std::pair<Rational, std::int64_t>> raw;
                  for (const auto& [slope, mult] : a.slopes().entries()) raw.emplace_back(slope, mult);
                  return raw;
              }()) == a);
        // Stable tensor stable: slope adds.
        for (const auto& x : a.bundle())
            for (const auto& y : b.bundle()) {
                const auto xy = tensor(O(x.slope), O(y.slope));
                REQUIRE(xy.bundle().size() == 1);
                CHECK(xy.bundle().front().slope == x.slope + y.slope);
            }
    }
}

TEST_CASE("cohomology dimensions") {
    const auto half = cohomology_dim(O(Rational(1, 2)));
    CHECK(half.h0 == Dimension{1, 2});
    CHECK(half.h1.is_zero());
    CHECK_FALSE(half.h1_quotient_type);
    const auto neg = cohomology_dim(O(-1));
    CHECK(neg.h0.is_zero());
    CHECK(neg.h1 == Dimension{1, -1});
    CHECK(neg.h1_quotient_type);
    CHECK(cohomology_dim(FFSheaf::from_copies({}, {{"infty", {3}}})).h0 == Dimension{3, 0});
    CHECK(cohomology_dim(FFSheaf::from_copies({}, {{"x", {1, 2}}})).h0 == Dimension{3, 0});

    // Table: every coprime d/h with 0 <= d <= 4, 1 <= h <= 4, and its negation.
    for (long h = 1; h <= 4; ++h)
        for (long d = 0; d <= 4; ++d) {
            if (gcd(Integer(d), Integer(h)) != 1) continue;
            const auto c = cohomology_dim(O(Rational(Integer(d), Integer(h))));
            CHECK(c.h0 == Dimension{d, h});
            CHECK(c.h1.is_zero());
            if (d == 0) continue;
            const auto n = cohomology_dim(O(Rational(Integer(-d), Integer(h))));
            CHECK(n.h0.is_zero());
            CHECK(n.h1 == Dimension{d, -h});
        }

    // Euler characteristic: dim = degree, ht = rank.
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 300; ++iter) {
        const auto a = random_bundle(rng);
        const auto c = cohomology_dim(a);
        CHECK(c.h0.dim - c.h1.dim == a.degree());
        CHECK(c.h0.ht - c.h1.ht == a.rank());
    }
}

TEST_CASE("hom dimensions") {
    const auto end = hom_dim(O(Rational(1, 2)), O(Rational(1, 2)));
    CHECK(end.qp_dimension == 4);
    CHECK(end.kind == "division-algebra");
    const auto zero = hom_dim(O(1), O(0));
    CHECK(zero.dimension.is_zero());
    CHECK(zero.qp_dimension == 0);
    const auto xs = FFSheaf::from_copies({}, {{"x", {2}}});
    const auto inf = FFSheaf::from_copies({}, {{"infty", {2}}});
    CHECK(hom_dim(xs, inf).dimension.is_zero());
    const auto same = hom_dim(inf, FFSheaf::from_copies({}, {{"infty", {3, 1}}}));
    CHECK(same.kind == "torsion-module");
    CHECK(same.module_rank == 2);
    CHECK(same.dimension == Dimension{3, 0});
    CHECK(hom_dim(inf, O(0)).dimension.is_zero());
    CHECK(hom_dim(O(0), inf).dimension == Dimension{2, 0});
    // Hom(O(0), O(1/3)) = H^0(O(1/3)).
    CHECK(hom_dim(O(0), O(Rational(1, 3))).dimension == Dimension{1, 3});
    CHECK_FALSE(hom_dim(O(0), O(Rational(1, 3))).qp_dimension.has_value());
}
