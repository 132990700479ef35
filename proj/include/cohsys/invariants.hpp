#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cohsys/rational.hpp"
#include "cohsys/types.hpp"

namespace cohsys {

/// Extension counts for a splitting t = t1 + t2, together with the
/// Brill-Noether numbers of the three types. The fields satisfy
/// beta_total == beta_1 + beta_2 + c12 + c21 - 1.
struct DecompositionCounts {
    Integer c12;
    Integer c21;
    Integer beta_total;
    Integer beta_1;
    Integer beta_2;

    bool euler_identity_holds() const { return beta_total == beta_1 + beta_2 + c12 + c21 - 1; }
};

/// mu_alpha = d/n + alpha * k/n.
Rational alpha_slope(const SystemType& t, const Rational& alpha);

/// n^2(g-1) + 1 - k(k - d + n(g-1)). Defined for every integer input; it is
/// the expected dimension only where the moduli are non-empty.
Integer brill_noether_number(std::int64_t g, const SystemType& t);

/// C21 by the expanded polynomial; C12 by swapping the roles of t1 and t2.
DecompositionCounts c_counts(std::int64_t g, const SystemType& t1, const SystemType& t2);

/// Always true; a false return means the counts are miscomputed.
bool euler_identity_holds(std::int64_t g, const SystemType& t1, const SystemType& t2);

/// (n,d,k) -> (k-n,d,k); throws std::invalid_argument unless k > n.
SystemType dual_type(const SystemType& t);

struct BundleModuliDim {
    std::optional<Integer> value;
    std::string note;
};

/// n^2(g-1)+1 for g >= 2, g for line bundles. Rank >= 2 on genus 0 or 1 is
/// flagged and left without a value.
BundleModuliDim bundle_moduli_dim(std::int64_t g, std::int64_t n, std::int64_t d);

}  // namespace cohsys
