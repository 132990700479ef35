#include "cohsys/bounds.hpp"

#include <stdexcept>

#include "cohsys/invariants.hpp"

namespace cohsys {

std::string CliffordBound::regime_label() const {
    switch (regime) {
        case Regime::high_slope: return "mu >= 2g-2 with h1>0";
        case Regime::low_slope: return "0 <= mu < 2g-2";
        case Regime::classical: return "classical alpha=0";
        case Regime::not_covered: return "mu < 0, not covered";
    }
    return "?";
}

CliffordBound clifford_bound(std::int64_t g, const SystemType& t, const Rational& alpha) {
    if (alpha.sign() < 0) {
        throw std::invalid_argument("clifford bound needs alpha >= 0, got " + alpha.to_string());
    }
    CliffordBound out;
    out.value = Rational(big(t.d), Integer(2)) + Rational(t.n) + Rational(big(t.n - 1) * t.k) * alpha;
    const Rational mu(big(t.d), big(t.n));
    if (alpha.is_zero()) {
        out.regime = CliffordBound::Regime::classical;
    } else if (mu.sign() < 0) {
        out.regime = CliffordBound::Regime::not_covered;
    } else if (mu >= Rational(2 * g - 2)) {
        out.regime = CliffordBound::Regime::high_slope;
    } else {
        out.regime = CliffordBound::Regime::low_slope;
    }
    return out;
}

StratumCodim rank1_strata_codim(std::int64_t g, std::int64_t d, std::int64_t k, std::int64_t t) {
    StratumCodim out;
    const bool few_sections = d <= g - 1 + k;
    out.generic_sections = few_sections ? k : d - g + 1;
    if (t < out.generic_sections) {
        throw std::invalid_argument("stratum h0=" + std::to_string(t) + " is below the generic count " +
                                    std::to_string(out.generic_sections));
    }
    const Integer j = t - out.generic_sections;
    out.excess = t - out.generic_sections;
    out.codim = few_sections ? j * (Integer(g) - d - 1 + k + j) : j * (Integer(d) - g + 1 - k + j);
    out.possibly_empty = brill_noether_number(g, SystemType{1, d, t}) < 0;
    return out;
}

Integer stable_bundle_strata_bound(std::int64_t g, std::int64_t n, std::int64_t d) {
    const Integer top = Integer(n) * (g - 1);
    if (Integer(d) > top) {
        throw std::invalid_argument("strata bound needs d <= n(g-1)");
    }
    return 2 * (top - d) + 1;
}

}  // namespace cohsys
