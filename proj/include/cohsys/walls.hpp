#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cohsys/rational.hpp"
#include "cohsys/types.hpp"

namespace cohsys {

/// k < n: the moduli are empty for alpha > d/(n-k); walls lie strictly below.
struct BoundedCap {
    Rational limit;
};

/// k >= n: stability no longer changes above d(n-1). Walls are enumerated up
/// to max{d(n-1), d(k-n-1)}; the ones above d(n-1) are flagged.
struct StabilizedCap {
    Rational semistability_bound;
    Rational enumeration_bound;
};

/// Rank one or no sections: stability does not depend on alpha at all.
struct NoWalls {};

using Cap = std::variant<BoundedCap, StabilizedCap, NoWalls>;

struct Wall {
    Rational value;
    bool beyond_semistability_bound = false;

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// Open interval (lower, upper) of alpha; upper is absent for the unbounded
/// terminal chamber.
struct Chamber {
    std::size_t index = 0;
    Rational lower;
    std::optional<Rational> upper;

    /// A rational strictly inside the chamber (midpoint, or lower + 1 when
    /// unbounded).
    Rational sample() const;
};

struct WallStructure {
    SystemType type;
    std::vector<Wall> walls;  // strictly increasing, all > 0
    Cap cap;
    std::vector<Chamber> chambers;  // empty when the admissible alpha-range is empty

    std::vector<Rational> wall_values() const;
    bool has_wall(const Rational& alpha) const;
};

/// All virtual critical values of t below its cap. Genus-independent.
WallStructure enumerate_walls(const SystemType& t);

struct AlphaAdmissibility {
    bool semistable_requires_d_nonneg = true;
    bool stable_requires_d_positive = true;
    bool exception_case = false;  // (n,d,k) = (1,0,1)
    bool semistable_possible = true;
    bool stable_possible = true;
    Cap cap;
};

AlphaAdmissibility alpha_admissibility(const SystemType& t);

/// d(n-1)/k: above this alpha the sections generically generate E.
/// Throws std::invalid_argument unless k >= n and k > 0.
Rational generically_generated_bound(const SystemType& t);

/// max{d(n-1), d(k-n-1)}. Throws std::invalid_argument unless k >= n.
Rational stabilization_bound(const SystemType& t);

}  // namespace cohsys
