#include <doctest.h>

#include <stdexcept>

#include "cohsys/bn_loci.hpp"
#include "cohsys/invariants.hpp"

using namespace cohsys;

namespace {

// Non-emptiness cases for k = 2, 3 on a Petri curve, transcribed row by row.
bool table(std::int64_t g, std::int64_t n, std::int64_t d, std::int64_t k) {
    if (k == 2 && n == 2) return d >= 3;
    if (k == 2 && n >= 3) return d >= 1;
    if (k == 3 && n == 2) return 3 * d >= 2 * g + 6;
    if (k == 3 && n == 3) return d >= 4;
    if (k == 3 && n == 4) return (g == 2 && d >= 2) || (g >= 3 && d >= 1);
    return d >= 1;  // k = 3, n >= 5
}

}  // namespace

TEST_CASE("bn_equals_full") {
    CHECK(bn_equals_full(2, SystemType::make(2, 4, 2)));
    CHECK_FALSE(bn_equals_full(2, SystemType::make(2, 3, 2)));
    CHECK(bn_equals_full(3, SystemType::make(2, 4, 0)));
    CHECK(bn_equals_full(3, SystemType::make(2, -7, 0)));
    CHECK_THROWS_AS(bn_equals_full(1, SystemType::make(2, 4, 2)), std::invalid_argument);
}

TEST_CASE("equals_full matches the beta formulation") {
    for (std::int64_t g = 2; g <= 6; ++g)
        for (std::int64_t n = 1; n <= 5; ++n)
            for (std::int64_t d = -30; d <= 30; ++d)
                for (std::int64_t k = 0; k <= 6; ++k) {
                    const auto t = SystemType::make(n, d, k);
                    const bool by_beta = brill_noether_number(g, t) >= Integer(n) * n * (g - 1) + 1;
                    REQUIRE(bn_equals_full(g, t) == by_beta);
                }
}

TEST_CASE("bn_nonempty examples") {
    CHECK(bn_nonempty(CurveContext(2, true), SystemType::make(2, 3, 2)).is_yes());
    CHECK(bn_nonempty(CurveContext(2, true), SystemType::make(4, 1, 3)).is_no());
    CHECK(bn_nonempty(CurveContext(3, true), SystemType::make(4, 1, 3)).is_yes());
    CHECK(bn_nonempty(CurveContext(3, false), SystemType::make(4, 1, 3)).is_yes());
    CHECK(bn_nonempty(CurveContext(5, false), SystemType::make(2, 6, 3)).is_conditional());
    CHECK(bn_nonempty(CurveContext(3, true), SystemType::make(3, 2, 1)).is_yes());
    CHECK(bn_nonempty(CurveContext(3, true), SystemType::make(3, 0, 1)).is_no());
    CHECK(bn_nonempty(CurveContext(3, true), SystemType::make(2, 5, 5)).is_unknown());
}

TEST_CASE("bn_nonempty reproduces the k=2,3 table") {
    for (std::int64_t g = 2; g <= 7; ++g)
        for (std::int64_t n = 2; n <= 7; ++n)
            for (std::int64_t k = 2; k <= 3; ++k)
                for (std::int64_t d = -3; d <= 12; ++d) {
                    const auto t = SystemType::make(n, d, k);
                    const auto v = bn_nonempty(CurveContext(g, true), t);
                    const bool expected = bn_equals_full(g, t) || table(g, n, d, k);
                    INFO("g=" << g << " " << t.to_string());
                    CHECK(v.is_yes() == expected);
                    CHECK(v.is_no() == !expected);
                }
}

TEST_CASE("bn_structure") {
    const auto a = bn_structure(CurveContext(3, false), SystemType::make(3, 4, 1));
    CHECK(a.irreducible.is_yes());
    CHECK(a.dimension == Integer(16));
    CHECK(a.smooth_locus_note == "smooth outside B(3,4,2)");
    REQUIRE(a.structure.has_value());
    CHECK(a.structure->base->to_string() == "M(2,4)");
    CHECK(a.structure->fibre.to_string() == "P^7");
    CHECK(a.structure->relation == Relation::birational);

    const auto b = bn_structure(CurveContext(2, true), SystemType::make(3, 2, 2));
    CHECK(b.irreducible.is_yes());
    CHECK(b.dimension == brill_noether_number(2, SystemType::make(3, 2, 2)));
    REQUIRE(b.structure.has_value());
    CHECK(b.structure->base->to_string() == "M(1,2)");
    CHECK(b.structure->fibre.to_string() == "Gr(2,3)");

    const auto c = bn_structure(CurveContext(2, true), SystemType::make(2, 4, 2));
    CHECK(c.equals_full_moduli);
    CHECK_FALSE(c.structure.has_value());
    CHECK(c.nonempty.is_yes());

    const auto open = bn_structure(CurveContext(3, true), SystemType::make(2, 5, 5));
    CHECK(open.irreducible.is_unknown());
    CHECK_FALSE(open.dimension.has_value());
}

TEST_CASE("picard_statement") {
    CHECK_FALSE(picard_statement(CurveContext(3, true), SystemType::make(3, 4, 1)).has_value());
    CHECK(picard_statement(CurveContext(3, true), SystemType::make(3, 5, 1)).has_value());
    CHECK_FALSE(picard_statement(CurveContext(3, false), SystemType::make(3, 5, 1)).has_value());
    CHECK_FALSE(picard_statement(CurveContext(2, true), SystemType::make(2, 2, 1)).has_value());
    CHECK_FALSE(picard_statement(CurveContext(3, true), SystemType::make(3, 6, 1)).has_value());
    CHECK_FALSE(picard_statement(CurveContext(3, true), SystemType::make(3, 7, 1)).has_value());  // 7 > 6
}

TEST_CASE("desingularization_check") {
    const auto a = desingularization_check(CurveContext(3, false), SystemType::make(3, 5, 1));
    REQUIRE(a.has_value());
    CHECK(a->conclusion == Desingularization::Conclusion::resolves_locus);
    CHECK(a->g0_irreducible.is_yes());
    CHECK(a->g0_smooth.is_yes());

    const auto b = desingularization_check(CurveContext(2, true), SystemType::make(2, 5, 1));
    REQUIRE(b.has_value());
    CHECK(b->conclusion == Desingularization::Conclusion::equals_full_moduli);

    const auto c = desingularization_check(CurveContext(2, true), SystemType::make(2, 0, 1));
    REQUIRE(c.has_value());
    CHECK(c->conclusion == Desingularization::Conclusion::conditions_fail);
    CHECK_FALSE(c->notes.empty());

    const auto d = desingularization_check(CurveContext(3, false), SystemType::make(4, 6, 1));
    REQUIRE(d.has_value());
    CHECK(d->conclusion == Desingularization::Conclusion::resolves_closure);  // gcd(4,6) = 2

    CHECK_FALSE(desingularization_check(CurveContext(1, true), SystemType::make(2, 3, 1)).has_value());
}
