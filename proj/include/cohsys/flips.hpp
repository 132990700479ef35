#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohsys/invariants.hpp"
#include "cohsys/rational.hpp"
#include "cohsys/types.hpp"

namespace cohsys {

/// Plus: k1/n1 < k/n, the pattern that destabilises below the wall (G_i^+).
/// Minus: k1/n1 > k/n (G_i^-).
enum class Side { plus, minus };

/// Numerical splitting t = t1 + t2 whose three alpha-slopes agree at alpha.
struct Decomposition {
    SystemType t1;
    SystemType t2;
    Rational alpha;
    Side side = Side::plus;
    std::optional<DecompositionCounts> counts;
};

struct FlipVerdict {
    enum class Kind { good_proved, partially_good_proved, bounds_only, not_applicable };
    Kind kind = Kind::not_applicable;
    std::string provenance;
    /// (lambda, n1) for which the flip is proved good, partial verdicts only.
    std::optional<Rational> lambda;
    std::optional<std::int64_t> n1;

    std::string to_string() const;
};

struct FlipReport {
    Rational alpha;
    std::vector<Decomposition> decompositions;
    std::optional<Integer> codim_plus_lb;
    std::optional<Integer> codim_minus_lb;
    std::vector<std::string> caveats;
    FlipVerdict verdict;
};

/// The unique alpha > 0 at which t1 balances inside t1 + t2, if any.
std::optional<Rational> critical_alpha(const SystemType& t1, const SystemType& t2);

/// Every integral splitting balanced at alpha, without extension counts.
std::vector<Decomposition> enumerate_decompositions(const SystemType& t, const Rational& alpha);

/// Same, with C12/C21 and the Brill-Noether numbers for genus g filled in.
std::vector<Decomposition> enumerate_decompositions(std::int64_t g, const SystemType& t, const Rational& alpha);

/// Lower bounds min C12 over each side. These only hold when the moduli
/// involved have their expected dimensions and H^2_21 vanishes; the report
/// says so in its caveats.
FlipReport codim_bounds(std::int64_t g, const SystemType& t, const Rational& alpha);

/// codim_bounds plus whatever good-flip result covers (g, t).
FlipReport good_flip_verdict(const CurveContext& ctx, const SystemType& t, const Rational& alpha);

/// Rank two only. True iff some n1 = n2 = 1 splitting at alpha with k2 >= 2
/// sections in the quotient satisfies d1 > d2 >= (k2-1)g/k2 + k2 - 1, the
/// condition for the quotient line bundle system to exist on a Petri curve.
/// Splittings with k2 < 2 are outside the test and never make it return true.
/// Throws std::invalid_argument when n != 2.
bool n2_actual_wall_filter(const CurveContext& ctx, const SystemType& t, const Rational& alpha);

/// (k2-1)(h0_dual-1), or 0 when h0_dual = 0 (then H^2_21 vanishes).
/// Throws std::invalid_argument when k2 == 0.
Integer hopf_bound(std::int64_t k2, std::int64_t h0_dual);

/// One stratum S_t of G(n1,d1,k1) x G(n2,d2,k2) on which dim H^2_21 is
/// constant, with the excess dimensions of the components it meets.
struct StratumData {
    Integer h2_21;
    Integer excess_1;
    Integer excess_2;
    Integer codim;
};

/// C12 > dim H^2_21 + e1 + e2 - e - codim S_t on every supplied stratum.
bool flip_good_on_component(const Integer& c12, const Integer& excess, std::span<const StratumData> strata);

/// C12 > dim H^2_21 - codim S_t^+ and C21 > dim H^2_12 - codim S_t^-.
struct CriteriaStratum {
    Integer h2;
    Integer codim;
};
bool flip_criteria_hold(const Integer& c12, const Integer& c21, std::span<const CriteriaStratum> plus_strata,
                        std::span<const CriteriaStratum> minus_strata);

}  // namespace cohsys
