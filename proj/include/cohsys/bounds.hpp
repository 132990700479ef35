#pragma once

#include <cstdint>
#include <string>

#include "cohsys/rational.hpp"
#include "cohsys/types.hpp"

namespace cohsys {

/// h0(E) <= d/2 + n + (n-1) k alpha for alpha-semistable (E,V).
struct CliffordBound {
    enum class Regime {
        high_slope,      // mu >= 2g-2 and h1(E) > 0
        low_slope,       // 0 <= mu < 2g-2
        classical,       // alpha = 0
        not_covered,     // mu < 0
    };
    Rational value;
    Regime regime = Regime::classical;

    std::string regime_label() const;
};

/// Throws std::invalid_argument for negative alpha.
CliffordBound clifford_bound(std::int64_t g, const SystemType& t, const Rational& alpha);

/// Codimension of S_t = {h0(L) = t} inside G(1,d,k) on a Petri curve.
struct StratumCodim {
    std::int64_t generic_sections = 0;  // h0(L) for a generic point
    std::int64_t excess = 0;            // j = t - generic
    Integer codim;
    /// beta(1,d,t) < 0: the stratum is expected to be empty.
    bool possibly_empty = false;
};

/// Throws std::invalid_argument when t is below the generic section count.
StratumCodim rank1_strata_codim(std::int64_t g, std::int64_t d, std::int64_t k, std::int64_t t);

/// 2(n(g-1)-d)+1, bounding 2h0(F^* (x) K) - codim S_t on M(n,d).
/// Throws std::invalid_argument when d > n(g-1).
Integer stable_bundle_strata_bound(std::int64_t g, std::int64_t n, std::int64_t d);

}  // namespace cohsys
