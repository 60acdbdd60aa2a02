#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "slopes/cst.hpp"
#include "slopes/errors.hpp"
#include "test_support.hpp"

using namespace slopes;

namespace {

constexpr long kP = 3;

PhiModule diag_module(Vector d) {
    const std::size_t n = d.size();
    return PhiModule(kP, RatMatrix::diagonal(d), RatMatrix(n, n));
}

HodgeData fil1(Vector v) { return HodgeData::from_flag(v.size(), {{1, Subspace(v.size(), {v})}}); }

FFSheaf line_bundle(long d, std::int64_t copies = 1) { return FFSheaf::from_copies({{Rational(d), copies}}); }

DegreeData stein_like() { return {diag_module({1, kP}), HodgeData::from_weights({1, 1})}; }
DegreeData proper_like() { return {diag_module({1, kP}), fil1({0, 1})}; }
DegreeData failing() { return {diag_module({kP}), HodgeData::from_weights({0})}; }

void require_all(const BatteryReport& rep, Status st) {
    for (const Verdict* v : {&rep.a, &rep.b_rm1, &rep.b_r, &rep.cprime, &rep.d}) CHECK(v->status == st);
}

QBCObject qbc(std::vector<BCPiece> pieces, std::vector<std::int64_t> core = {}) {
    return {std::move(core), BCObject{std::move(pieces)}};
}

}  // namespace

TEST_CASE("modification of rank one and weakly admissible inputs") {
    CHECK(build_modification(diag_module({1}), HodgeData::from_weights({1}), 1) == line_bundle(1));
    CHECK(build_modification(diag_module({kP}), HodgeData::from_weights({0}), 1) == line_bundle(-1));
    const DegreeData wa = proper_like();
    CHECK(build_modification(wa.hk, wa.lattice, 1) == line_bundle(0, 2));
    CHECK_THROWS_AS(build_modification(diag_module({kP * kP}), HodgeData::from_weights({0}), 1), HypothesisViolation);
    CHECK_THROWS_AS(build_modification(diag_module({1}), HodgeData::from_weights({2}), 1), HypothesisViolation);
}

TEST_CASE("modification degree and rank match the filtered module") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const std::int64_t r = static_cast<std::int64_t>(rng() % 3);
        const DegreeData d = testing::random_window_degree(rng, kP, r);
        FFSheaf e;
        try {
            e = build_modification(d.hk, d.lattice, r);
        } catch (const Uncertified&) {
            continue;
        }
        CHECK(e.rank() == static_cast<std::int64_t>(d.hk.rank()));
        CHECK(Rational(e.degree()) == degree(FilteredPhiModule(d.hk, d.lattice)));
    }
}

TEST_CASE("battery worked examples") {
    SUBCASE("Stein-like input") {
        const BatteryReport rep = battery({1, std::nullopt, stein_like()});
        require_all(rep, Status::CertifiedTrue);
        CHECK(rep.consistent);
        CHECK(rep.overall == Status::CertifiedTrue);
        CHECK(rep.height == 2);
        CHECK(rep.dim_hdr == 2);
    }
    SUBCASE("weakly admissible proper-like input") {
        const BatteryReport rep = battery({1, std::nullopt, proper_like()});
        require_all(rep, Status::CertifiedTrue);
        CHECK(rep.height == 2);
    }
    SUBCASE("slope 1, weight 0") {
        const BatteryReport rep = battery({1, std::nullopt, failing()});
        CHECK(rep.b_rm1.status == Status::CertifiedTrue);  // zero module in degree r-1
        for (const Verdict* v : {&rep.a, &rep.b_r, &rep.cprime, &rep.d}) CHECK(v->status == Status::CertifiedFalse);
        CHECK(rep.b_r.witness.has_value());
        CHECK(rep.height == 0);
        CHECK(rep.consistent);
        CHECK(rep.overall == Status::CertifiedFalse);
    }
    SUBCASE("failure in degree r-1 lowers the height") {
        const BatteryReport rep = battery({2, failing(), stein_like()});
        CHECK(rep.b_rm1.status == Status::CertifiedFalse);
        CHECK(rep.b_r.status == Status::CertifiedTrue);
        CHECK(rep.d.status == Status::CertifiedFalse);
        CHECK(rep.height == 1);
        CHECK(rep.consistent);
    }
}

TEST_CASE("battery input validation") {
    CHECK_THROWS_AS(battery({0, failing(), stein_like()}), HypothesisViolation);
    CHECK_THROWS_AS(battery({0, std::nullopt, failing()}), HypothesisViolation);
    CHECK_THROWS_AS(battery({-1, std::nullopt, failing()}), HypothesisViolation);
    try {
        battery({1, std::nullopt, {diag_module({kP * kP}), HodgeData::from_weights({3})}});
        FAIL("expected a violation");
    } catch (const HypothesisViolation& e) {
        CHECK(e.violations().size() == 2);
    }
}

TEST_CASE("battery verdicts agree on random certified inputs") {
    std::mt19937_64 rng(2024);
    int certified = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t r = static_cast<std::int64_t>(rng() % 3);
        SyntheticCohomology s{r, std::nullopt, testing::random_window_degree(rng, kP, r)};
        if (r > 0 && rng() % 2 == 0) s.previous = testing::random_window_degree(rng, kP, r - 1);
        const BatteryReport rep = battery(s);
        CHECK(rep.consistent);
        if (rep.overall != Status::Uncertified) ++certified;
        if (rep.height) {
            CHECK(*rep.height <= rep.dim_hdr);
            CHECK((rep.d.status == Status::CertifiedTrue) == (*rep.height == rep.dim_hdr));
        }
    }
    CHECK(certified >= 150);
}

TEST_CASE("weights at the top of the window always pass") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 2);
        DegreeData top = testing::random_window_degree(rng, kP, r);
        top.lattice = HodgeData::from_weights(std::vector<std::int64_t>(top.hk.rank(), r));
        SyntheticCohomology s{r, std::nullopt, top};
        if (rng() % 2 == 0) {
            DegreeData prev = testing::random_window_degree(rng, kP, r - 1);
            prev.lattice = HodgeData::from_weights(std::vector<std::int64_t>(prev.hk.rank(), r - 1));
            s.previous = prev;
        }
        const BatteryReport rep = battery(s);
        require_all(rep, Status::CertifiedTrue);
        CHECK(rep.height == rep.dim_hdr);
    }
}

TEST_CASE("dichotomy") {
    using B = DichotomyResult::Branch;
    const DegreeData wa = proper_like(), stein = stein_like(), bad = failing();
    CHECK(dichotomy(wa.hk, wa.lattice, 1).branch == B::Surjective);
    CHECK(dichotomy(stein.hk, stein.lattice, 1).branch == B::Surjective);
    const DichotomyResult f = dichotomy(bad.hk, bad.lattice, 1);
    CHECK(f.branch == B::PositiveHeightImage);
    CHECK(f.deficit == 1);
    CHECK(to_string(B::Surjective) == "surjective");
    CHECK(to_string(B::PositiveHeightImage) == "positive-height-image");
    CHECK_THROWS_AS(dichotomy(bad.hk, bad.lattice, 0), HypothesisViolation);
}

TEST_CASE("dichotomy branch matches acyclicity in degree r") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t r = static_cast<std::int64_t>(rng() % 3);
        const DegreeData d = testing::random_window_degree(rng, kP, r);
        const Verdict acyclic = is_acyclic(FilteredPhiModule(d.hk, d.lattice));
        if (acyclic.status == Status::Uncertified) {
            CHECK_THROWS_AS(dichotomy(d.hk, d.lattice, r), Uncertified);
            continue;
        }
        const DichotomyResult res = dichotomy(d.hk, d.lattice, r);
        CHECK((res.branch == DichotomyResult::Branch::Surjective) == (acyclic.status == Status::CertifiedTrue));
        if (res.branch == DichotomyResult::Branch::PositiveHeightImage) CHECK(res.deficit.value_or(1) > 0);
    }
}

TEST_CASE("height comparison across two rows") {
    // 0 -> (1,2) -> (1,3) -> (1,2) -> (1,2) -> (0,2) -> (0,1) -> 0
    const MvRow b{{qbc({BCPiece::ueff(1, 2)}), qbc({BCPiece::ueff(1, 2), BCPiece::qp(1)}),
                   qbc({BCPiece::qp(1), BCPiece::ueff(1, 1)}), qbc({BCPiece::ueff(1, 1), BCPiece::qp(1)}),
                   qbc({BCPiece::qp(2)}), qbc({BCPiece::qp(1)})},
                  {}};
    // Same heights, with a torsion core on the left and only Q_p pieces at the middle.
    const MvRow a{{qbc({BCPiece::qp(2)}, {1}), qbc({BCPiece::qp(3)}, {1}), qbc({BCPiece::qp(2)}),
                   qbc({BCPiece::qp(2)}), qbc({BCPiece::qp(2)}), qbc({BCPiece::qp(1)})},
                  {}};

    SUBCASE("identical rows") {
        const MvResult res = mv_check(b, b, 1);
        CHECK(res.height == 2);
        CHECK(res.rank_a.certified);
    }
    SUBCASE("glued rows") {
        const MvResult res = mv_check(a, b, 1);
        CHECK(res.height == 2);
        CHECK(res.rank_a.rank == 2);
        CHECK(res.rank_b.rank == 2);
    }
    SUBCASE("height mismatch away from the middle") {
        MvRow c = a;
        c.nodes[1] = qbc({BCPiece::qp(4)}, {1});
        c.nodes[2] = qbc({BCPiece::qp(3)});
        try {
            mv_check(c, b, 1);
            FAIL("expected a violation");
        } catch (const HypothesisViolation& e) {
            REQUIRE(e.violations().size() == 2);
            CHECK(e.violations()[0].starts_with("index 1:"));
            CHECK(e.violations()[1].starts_with("index 2:"));
        }
    }
    SUBCASE("positive curvature in the middle") {
        MvRow c = a;
        c.nodes[3] = qbc({BCPiece::qp(2)});
        c.nodes[3].quotient.pieces.push_back(BCPiece::uquot(1, 1));
        c.nodes[4] = qbc({BCPiece::qp(2), BCPiece::uquot(1, 1)});
        CHECK_THROWS_AS(mv_check(c, b, 1), HypothesisViolation);
    }
    SUBCASE("wrong length and inexact rows") {
        CHECK_THROWS_AS(mv_check(a, b, 0), HypothesisViolation);
        MvRow c = a;
        c.nodes[5] = qbc({BCPiece::qp(2)});
        CHECK_THROWS_AS(mv_check(c, b, 1), HypothesisViolation);
        CHECK_THROWS_AS(mv_check(a, b, -1), HypothesisViolation);
    }
}

TEST_CASE("rows continuing past the window") {
    const SeqArrow out{std::nullopt, Dimension{0, 1}};
    const MvRow a{{qbc({BCPiece::qp(1)}), qbc({BCPiece::qp(2)}), qbc({BCPiece::qp(2)})}, {{}, {}, out}};
    const MvRow b{{qbc({BCPiece::ueff(1, 1)}), qbc({BCPiece::ueff(1, 1), BCPiece::qp(1)}), qbc({BCPiece::qp(2)})},
                  {{}, {}, out}};
    CHECK(mv_check(a, b, 0).height == 1);
    // Node heights on a row closed at the left already fix the outgoing image.
    MvRow c = b;
    c.arrows[2].image = Dimension{0, 2};
    try {
        mv_check(a, c, 0);
        FAIL("expected a violation");
    } catch (const HypothesisViolation& e) {
        CHECK(e.violations().front().starts_with("row B:"));
    }
}
