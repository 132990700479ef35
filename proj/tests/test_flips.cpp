#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "cohsys/flips.hpp"
#include "cohsys/invariants.hpp"
#include "cohsys/walls.hpp"
#include "oracles.hpp"

using namespace cohsys;

TEST_CASE("critical_alpha") {
    CHECK(critical_alpha(SystemType::make(1, 3, 0), SystemType::make(1, 2, 1)) == Rational(1));
    CHECK_FALSE(critical_alpha(SystemType::make(1, 2, 1), SystemType::make(1, 3, 1)).has_value());
    CHECK_FALSE(critical_alpha(SystemType::make(1, 2, 2), SystemType::make(1, 1, 1)).has_value());
}

TEST_CASE("enumerate_decompositions examples") {
    const auto t = SystemType::make(2, 5, 1);
    const auto a = enumerate_decompositions(t, Rational(1));
    REQUIRE(a.size() == 2);
    int plus = 0, minus = 0;
    for (const auto& dec : a) {
        if (dec.side == Side::plus) {
            ++plus;
            CHECK(dec.t1 == SystemType::make(1, 3, 0));
            CHECK(dec.t2 == SystemType::make(1, 2, 1));
        } else {
            ++minus;
            CHECK(dec.t1 == SystemType::make(1, 2, 1));
            CHECK(dec.t2 == SystemType::make(1, 3, 0));
        }
    }
    CHECK(plus == 1);
    CHECK(minus == 1);

    CHECK(enumerate_decompositions(SystemType::make(1, 4, 2), Rational(1)).empty());

    const auto b = enumerate_decompositions(t, Rational(3));
    REQUIRE(b.size() == 2);
    for (const auto& dec : b) {
        if (dec.side == Side::plus) CHECK(dec.t1 == SystemType::make(1, 4, 0));
        if (dec.side == Side::minus) CHECK(dec.t1 == SystemType::make(1, 1, 1));
    }
}

TEST_CASE("decomposition invariants") {
    for (std::int64_t n = 2; n <= 4; ++n)
        for (std::int64_t d = -4; d <= 12; ++d)
            for (std::int64_t k = 1; k <= 5; ++k) {
                const auto t = SystemType::make(n, d, k);
                for (const auto& w : enumerate_walls(t).wall_values()) {
                    const auto decs = enumerate_decompositions(3, t, w);
                    REQUIRE_FALSE(decs.empty());
                    for (const auto& dec : decs) {
                        CHECK(dec.t1 + dec.t2 == t);
                        CHECK(dec.t1.n > 0);
                        CHECK(dec.t1.n < n);
                        CHECK(alpha_slope(dec.t1, w) == alpha_slope(t, w));
                        CHECK(alpha_slope(dec.t2, w) == alpha_slope(t, w));
                        CHECK(critical_alpha(dec.t1, dec.t2) == w);
                        const bool below = Rational(dec.t1.k, dec.t1.n) < Rational(k, n);
                        CHECK((dec.side == Side::plus) == below);
                        REQUIRE(dec.counts.has_value());
                        CHECK(dec.counts->euler_identity_holds());
                        CHECK(dec.counts->c12 == oracle::c12(3, dec.t1, dec.t2));
                        // swapping the pieces gives the opposite side
                        bool mirrored = false;
                        for (const auto& other : decs) {
                            mirrored = mirrored || (other.t1 == dec.t2 && other.t2 == dec.t1 && other.side != dec.side);
                        }
                        CHECK(mirrored);
                    }
                }
            }
}

TEST_CASE("k=1 plus-side C12 has the closed form n1 n2 (g-1) + n1 alpha") {
    for (std::int64_t g = 2; g <= 5; ++g)
        for (std::int64_t n = 2; n <= 5; ++n)
            for (std::int64_t d = 1; d <= 15; ++d) {
                const auto t = SystemType::make(n, d, 1);
                for (const auto& w : enumerate_walls(t).wall_values())
                    for (const auto& dec : enumerate_decompositions(g, t, w)) {
                        if (dec.side != Side::plus) continue;
                        const Rational expected =
                            Rational(dec.t1.n * dec.t2.n * (g - 1)) + Rational(dec.t1.n) * w;
                        CHECK(Rational(dec.counts->c12) == expected);
                        CHECK(dec.counts->c12 > 0);
                    }
            }
}

TEST_CASE("codim_bounds") {
    const auto a = codim_bounds(2, SystemType::make(2, 5, 1), Rational(1));
    CHECK(a.decompositions.size() == 2);
    CHECK(a.codim_plus_lb == Integer(2));
    CHECK(a.codim_minus_lb == Integer(2));
    CHECK(a.caveats.size() == 2);
    CHECK(a.verdict.kind == FlipVerdict::Kind::bounds_only);

    const auto b = codim_bounds(2, SystemType::make(2, 5, 1), Rational(3));
    CHECK(b.codim_plus_lb == Integer(4));
    CHECK(b.codim_minus_lb == Integer(1));

    const auto none = codim_bounds(2, SystemType::make(2, 5, 1), Rational(2));
    CHECK(none.decompositions.empty());
    CHECK_FALSE(none.codim_plus_lb.has_value());
    CHECK(none.verdict.kind == FlipVerdict::Kind::not_applicable);
}

TEST_CASE("good_flip_verdict") {
    for (const auto& w : enumerate_walls(SystemType::make(3, 4, 1)).wall_values()) {
        const auto r = good_flip_verdict(CurveContext(2, false), SystemType::make(3, 4, 1), w);
        CHECK(r.verdict.kind == FlipVerdict::Kind::good_proved);
        CHECK(r.verdict.provenance == "classification(k=1)");
    }

    const auto t = SystemType::make(2, 5, 5);
    bool saw_partial = false;
    for (const auto& w : enumerate_walls(t).wall_values()) {
        const auto decs = enumerate_decompositions(t, w);
        bool has_split = false;
        for (const auto& dec : decs) has_split = has_split || (dec.t1.n == 1 && dec.t1.k == 2);
        const auto r = good_flip_verdict(CurveContext(3, true), t, w);
        if (has_split) {
            saw_partial = true;
            CHECK(r.verdict.kind == FlipVerdict::Kind::partially_good_proved);
            CHECK(r.verdict.lambda == Rational(3));
            CHECK(r.verdict.n1 == 1);
        } else {
            CHECK(r.verdict.kind == FlipVerdict::Kind::bounds_only);
        }
    }
    CHECK(saw_partial);

    const auto four = SystemType::make(4, 9, 4);
    const auto walls = enumerate_walls(four).wall_values();
    REQUIRE_FALSE(walls.empty());
    CHECK(good_flip_verdict(CurveContext(2, true), four, walls.front()).verdict.kind ==
          FlipVerdict::Kind::bounds_only);

    const auto k2 = SystemType::make(3, 5, 2);
    const auto w2 = enumerate_walls(k2).wall_values().front();
    CHECK(good_flip_verdict(CurveContext(4, true), k2, w2).verdict.kind == FlipVerdict::Kind::good_proved);
    const auto unproved = good_flip_verdict(CurveContext(4, false), k2, w2);
    CHECK(unproved.verdict.kind == FlipVerdict::Kind::bounds_only);
    CHECK(unproved.caveats.size() == 3);
}

TEST_CASE("rank-two wall filter") {
    const CurveContext g4(4, true);
    for (const auto& w : enumerate_walls(SystemType::make(2, 6, 3)).wall_values()) {
        CHECK_FALSE(n2_actual_wall_filter(g4, SystemType::make(2, 6, 3), w));
    }
    const auto t = SystemType::make(2, 9, 3);
    bool any = false;
    for (const auto& w : enumerate_walls(t).wall_values()) any = any || n2_actual_wall_filter(CurveContext(2, true), t, w);
    CHECK(any);
    CHECK_FALSE(n2_actual_wall_filter(CurveContext(2, true), SystemType::make(2, 3, 1), Rational(1)));
    CHECK_THROWS_AS(n2_actual_wall_filter(g4, SystemType::make(3, 6, 3), Rational(1)), std::invalid_argument);
}

TEST_CASE("rank-two filter rejects every wall when d <= g+2") {
    for (std::int64_t g = 2; g <= 6; ++g)
        for (std::int64_t d = -4; d <= g + 2; ++d)
            for (std::int64_t k = 1; k <= 6; ++k) {
                const auto t = SystemType::make(2, d, k);
                for (const auto& w : enumerate_walls(t).wall_values()) {
                    CHECK_FALSE(n2_actual_wall_filter(CurveContext(g, true), t, w));
                }
            }
}

TEST_CASE("hopf_bound") {
    CHECK(hopf_bound(1, 7) == 0);
    CHECK(hopf_bound(3, 4) == 6);
    CHECK(hopf_bound(2, 0) == 0);
    CHECK_THROWS_AS(hopf_bound(0, 3), std::invalid_argument);
}

TEST_CASE("stratified good-flip checkers") {
    const std::vector<StratumData> strata{{Integer(1), Integer(0), Integer(0), Integer(0)},
                                          {Integer(3), Integer(1), Integer(0), Integer(2)}};
    CHECK(flip_good_on_component(Integer(3), Integer(0), strata));
    CHECK_FALSE(flip_good_on_component(Integer(2), Integer(0), strata));
    CHECK(flip_good_on_component(Integer(2), Integer(1), strata));

    const std::vector<CriteriaStratum> plus{{Integer(2), Integer(1)}};
    const std::vector<CriteriaStratum> minus{{Integer(0), Integer(0)}};
    CHECK(flip_criteria_hold(Integer(2), Integer(1), plus, minus));
    CHECK_FALSE(flip_criteria_hold(Integer(1), Integer(1), plus, minus));
    CHECK_FALSE(flip_criteria_hold(Integer(2), Integer(0), plus, minus));
}
