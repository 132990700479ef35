#include "cohsys/flips.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohsys {

std::string FlipVerdict::to_string() const {
    switch (kind) {
        case Kind::good_proved: return "good [" + provenance + "]";
        case Kind::partially_good_proved:
            return "(lambda=" + lambda->to_string() + ", n1=" + std::to_string(*n1) + ")-good [" + provenance + "]";
        case Kind::bounds_only: return "bounds only";
        case Kind::not_applicable: return "not applicable";
    }
    return "?";
}

std::optional<Rational> critical_alpha(const SystemType& t1, const SystemType& t2) {
    if (t1.n <= 0 || t2.n <= 0) return std::nullopt;
    const SystemType t = t1 + t2;
    // mu_a(t1) - mu_a(t) = (n d1 - n1 d)/(n n1) + a (n k1 - n1 k)/(n n1)
    const Integer slope_gap = Integer(t.n) * t1.k - Integer(t1.n) * t.k;
    if (slope_gap == 0) return std::nullopt;
    const Rational alpha(Integer(t1.n) * t.d - Integer(t.n) * t1.d, slope_gap);
    if (alpha.sign() <= 0) return std::nullopt;
    return alpha;
}

std::vector<Decomposition> enumerate_decompositions(const SystemType& t, const Rational& alpha) {
    std::vector<Decomposition> out;
    const Rational mu = alpha_slope(t, alpha);
    for (std::int64_t n1 = 1; n1 < t.n; ++n1) {
        for (std::int64_t k1 = 0; k1 <= t.k; ++k1) {
            const Integer lhs = Integer(k1) * t.n;
            const Integer rhs = Integer(t.k) * n1;
            if (lhs == rhs) continue;
            const Rational d1 = mu * Rational(n1) - alpha * Rational(k1);
            if (!d1.is_integer()) continue;
            const auto d1v = static_cast<std::int64_t>(d1.numerator());
            Decomposition dec;
            dec.t1 = {n1, d1v, k1};
            dec.t2 = {t.n - n1, t.d - d1v, t.k - k1};
            dec.alpha = alpha;
            dec.side = lhs < rhs ? Side::plus : Side::minus;
            out.push_back(std::move(dec));
        }
    }
    return out;
}

std::vector<Decomposition> enumerate_decompositions(std::int64_t g, const SystemType& t, const Rational& alpha) {
    auto out = enumerate_decompositions(t, alpha);
    for (auto& dec : out) dec.counts = c_counts(g, dec.t1, dec.t2);
    return out;
}

FlipReport codim_bounds(std::int64_t g, const SystemType& t, const Rational& alpha) {
    FlipReport report;
    report.alpha = alpha;
    report.decompositions = enumerate_decompositions(g, t, alpha);
    for (const auto& dec : report.decompositions) {
        auto& slot = dec.side == Side::plus ? report.codim_plus_lb : report.codim_minus_lb;
        if (!slot || dec.counts->c12 < *slot) slot = dec.counts->c12;
    }
    if (report.decompositions.empty()) {
        report.verdict.kind = FlipVerdict::Kind::not_applicable;
        return report;
    }
    report.caveats = {
        "codimension bounds assume the moduli of t, t1 and t2 have their expected dimensions near the wall",
        "codimension bounds assume H^2_21 vanishes for every relevant pair",
    };
    report.verdict.kind = FlipVerdict::Kind::bounds_only;
    return report;
}

FlipReport good_flip_verdict(const CurveContext& ctx, const SystemType& t, const Rational& alpha) {
    FlipReport report = codim_bounds(ctx.genus(), t, alpha);
    if (report.decompositions.empty()) return report;

    const std::int64_t g = ctx.genus();
    const std::int64_t n = t.n, k = t.k;
    std::string theorem;
    bool needs_petri = true;
    if (g >= 2 && n >= 2) {
        if (k == 1) {
            theorem = "classification(k=1)";
            needs_petri = false;
        } else if (k == 2) {
            theorem = "classification(k=2)";
        } else if (k == 3) {
            theorem = n == 2 ? "classification(n=2)" : "classification(k=3)";
        } else if (n == 2 && k == 4) {
            theorem = "classification(n=2)";
        }
    }
    if (!theorem.empty()) {
        if (!needs_petri || ctx.petri()) {
            report.verdict = {FlipVerdict::Kind::good_proved, theorem, std::nullopt, std::nullopt};
        } else {
            report.caveats.push_back("flip is good on a Petri curve [" + theorem + "]; Petri not assumed");
        }
        return report;
    }

    const bool has_k1_two = std::any_of(report.decompositions.begin(), report.decompositions.end(),
                                        [](const Decomposition& dec) { return dec.t1.n == 1 && dec.t1.k == 2; });
    if (g >= 2 && n == 2 && k > 4 && has_k1_two) {
        if (ctx.petri()) {
            report.verdict = {FlipVerdict::Kind::partially_good_proved, "partial-flip(n=2,k1=2)",
                              Rational(k - 2), std::int64_t{1}};
        } else {
            report.caveats.push_back(
                "on a Petri curve the flip is (lambda=k-2, n1=1)-good on the lower side "
                "[partial-flip(n=2,k1=2)]; Petri not assumed");
        }
    }
    return report;
}

bool n2_actual_wall_filter(const CurveContext& ctx, const SystemType& t, const Rational& alpha) {
    if (t.n != 2) {
        throw std::invalid_argument("rank-two wall filter called on " + t.to_string());
    }
    const Integer g = ctx.genus();
    for (const auto& dec : enumerate_decompositions(t, alpha)) {
        if (dec.side != Side::plus) continue;  // minus-side splittings are the swaps
        const Integer d1 = dec.t1.d, d2 = dec.t2.d, k2 = dec.t2.k;
        if (k2 < 2) continue;
        // d2 >= (k2-1)g/k2 + k2 - 1, cleared of denominators.
        if (d1 > d2 && k2 * d2 >= (k2 - 1) * g + k2 * (k2 - 1)) return true;
    }
    return false;
}

Integer hopf_bound(std::int64_t k2, std::int64_t h0_dual) {
    if (k2 <= 0) {
        throw std::invalid_argument("hopf bound needs k2 > 0");
    }
    if (h0_dual < 0) {
        throw std::invalid_argument("hopf bound needs h0 >= 0");
    }
    if (h0_dual == 0) return 0;
    return Integer(k2 - 1) * (h0_dual - 1);
}

bool flip_good_on_component(const Integer& c12, const Integer& excess, std::span<const StratumData> strata) {
    return std::all_of(strata.begin(), strata.end(), [&](const StratumData& s) {
        return c12 > s.h2_21 + s.excess_1 + s.excess_2 - excess - s.codim;
    });
}

bool flip_criteria_hold(const Integer& c12, const Integer& c21, std::span<const CriteriaStratum> plus_strata,
                        std::span<const CriteriaStratum> minus_strata) {
    const bool plus_ok = std::all_of(plus_strata.begin(), plus_strata.end(),
                                     [&](const CriteriaStratum& s) { return c12 > s.h2 - s.codim; });
    const bool minus_ok = std::all_of(minus_strata.begin(), minus_strata.end(),
                                      [&](const CriteriaStratum& s) { return c21 > s.h2 - s.codim; });
    return plus_ok && minus_ok;
}

}  // namespace cohsys
