#include "cohsys/walls.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cohsys {

namespace {

Cap cap_for(const SystemType& t) {
    if (t.n == 1 || t.k == 0) {
        return NoWalls{};
    }
    if (t.k < t.n) {
        return BoundedCap{Rational(big(t.d), big(t.n - t.k))};
    }
    return StabilizedCap{Rational(big(t.d) * (t.n - 1)), stabilization_bound(t)};
}

// Smallest integer x with x > r (strict) or x >= r.
Integer lower_integer(const Rational& r, bool strict) { return strict ? r.floor() + 1 : r.ceil(); }

// Largest integer x with x < r (strict) or x <= r.
Integer upper_integer(const Rational& r, bool strict) { return strict ? r.ceil() - 1 : r.floor(); }

}  // namespace

Rational Chamber::sample() const {
    if (upper) {
        return (lower + *upper) / Rational(2);
    }
    return lower + Rational(1);
}

std::vector<Rational> WallStructure::wall_values() const {
    std::vector<Rational> out;
    out.reserve(walls.size());
    for (const auto& w : walls) out.push_back(w.value);
    return out;
}

bool WallStructure::has_wall(const Rational& alpha) const {
    return std::any_of(walls.begin(), walls.end(), [&](const Wall& w) { return w.value == alpha; });
}

WallStructure enumerate_walls(const SystemType& t) {
    WallStructure out{t, {}, cap_for(t), {}};

    std::optional<Rational> limit;
    bool strict_limit = true;
    std::optional<Rational> flag_above;
    if (const auto* b = std::get_if<BoundedCap>(&out.cap)) {
        limit = b->limit;
    } else if (const auto* s = std::get_if<StabilizedCap>(&out.cap)) {
        limit = s->enumeration_bound;
        strict_limit = false;
        flag_above = s->semistability_bound;
    }

    std::set<Rational> values;
    if (limit && limit->sign() > 0) {
        const Integer n = t.n, d = t.d;
        for (std::int64_t np = 1; np < t.n; ++np) {
            for (std::int64_t kp = 0; kp <= t.k; ++kp) {
                const Integer delta = Integer(np) * t.k - n * kp;
                if (delta == 0) continue;
                // value(d') = (n d' - n' d) / delta must lie in (0, limit).
                const Rational centre(Integer(np) * d, n);
                const Rational reach = *limit * Rational(abs(delta), n);
                Integer lo, hi;
                if (delta > 0) {
                    lo = lower_integer(centre, true);
                    hi = upper_integer(centre + reach, strict_limit);
                } else {
                    lo = lower_integer(centre - reach, strict_limit);
                    hi = upper_integer(centre, true);
                }
                for (Integer dp = lo; dp <= hi; ++dp) {
                    values.insert(Rational(n * dp - Integer(np) * d, delta));
                }
            }
        }
    }

    for (const auto& v : values) {
        out.walls.push_back({v, flag_above && v > *flag_above});
    }

    const bool empty_range = limit && std::holds_alternative<BoundedCap>(out.cap) && limit->sign() <= 0;
    if (!empty_range) {
        Rational lower(0);
        std::size_t index = 0;
        for (const auto& w : out.walls) {
            out.chambers.push_back({index++, lower, w.value});
            lower = w.value;
        }
        std::optional<Rational> top;
        if (const auto* b = std::get_if<BoundedCap>(&out.cap)) top = b->limit;
        out.chambers.push_back({index, lower, top});
    }
    return out;
}

AlphaAdmissibility alpha_admissibility(const SystemType& t) {
    AlphaAdmissibility out;
    out.cap = cap_for(t);
    out.exception_case = (t.n == 1 && t.d == 0 && t.k == 1);
    if (t.k == 0) {
        // Systems with no sections are just bundles; alpha plays no role.
        out.semistable_requires_d_nonneg = false;
        out.stable_requires_d_positive = false;
        return out;
    }
    out.stable_requires_d_positive = !out.exception_case;
    out.semistable_possible = t.d >= 0;
    out.stable_possible = t.d > 0 || out.exception_case;
    return out;
}

Rational generically_generated_bound(const SystemType& t) {
    if (t.k < t.n || t.k == 0) {
        throw std::invalid_argument("generic generation bound needs k >= n and k > 0, got " +
                                    t.to_string());
    }
    return Rational(big(t.d) * (t.n - 1), big(t.k));
}

Rational stabilization_bound(const SystemType& t) {
    if (t.k < t.n) {
        throw std::invalid_argument("stabilization bound needs k >= n, got " + t.to_string());
    }
    const Integer a = big(t.d) * (t.n - 1);
    const Integer b = big(t.d) * (t.k - t.n - 1);
    return Rational(std::max(a, b));
}

}  // namespace cohsys
