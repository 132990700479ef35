#include "cohsys/invariants.hpp"

#include <stdexcept>

namespace cohsys {

namespace {

// k2*chi(E1) - chi(E2^* (x) E1) - k1*k2, expanded.
Integer c21_expanded(std::int64_t g, const SystemType& t1, const SystemType& t2) {
    const Integer n1 = t1.n, d1 = t1.d, k1 = t1.k;
    const Integer n2 = t2.n, d2 = t2.d, k2 = t2.k;
    const Integer gm1 = Integer(g) - 1;
    return n1 * n2 * gm1 - d1 * n2 + d2 * n1 + k2 * d1 - k2 * n1 * gm1 - k1 * k2;
}

}  // namespace

Rational alpha_slope(const SystemType& t, const Rational& alpha) {
    return Rational(big(t.d), big(t.n)) + alpha * Rational(big(t.k), big(t.n));
}

Integer brill_noether_number(std::int64_t g, const SystemType& t) {
    const Integer n = t.n, d = t.d, k = t.k;
    const Integer gm1 = Integer(g) - 1;
    return n * n * gm1 + 1 - k * (k - d + n * gm1);
}

DecompositionCounts c_counts(std::int64_t g, const SystemType& t1, const SystemType& t2) {
    DecompositionCounts out;
    out.c21 = c21_expanded(g, t1, t2);
    out.c12 = c21_expanded(g, t2, t1);
    out.beta_total = brill_noether_number(g, t1 + t2);
    out.beta_1 = brill_noether_number(g, t1);
    out.beta_2 = brill_noether_number(g, t2);
    return out;
}

bool euler_identity_holds(std::int64_t g, const SystemType& t1, const SystemType& t2) {
    return c_counts(g, t1, t2).euler_identity_holds();
}

SystemType dual_type(const SystemType& t) {
    if (t.k <= t.n) {
        throw std::invalid_argument("dual type needs k > n, got " + t.to_string());
    }
    return {t.k - t.n, t.d, t.k};
}

BundleModuliDim bundle_moduli_dim(std::int64_t g, std::int64_t n, std::int64_t /*d*/) {
    if (n == 1) {
        return {Integer(g), "Jacobian"};
    }
    if (g >= 2) {
        return {Integer(n) * n * (g - 1) + 1, ""};
    }
    return {std::nullopt, "not covered: rank >= 2 on genus " + std::to_string(g)};
}

}  // namespace cohsys
