#include "cohsys/scan.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "cohsys/bn_loci.hpp"
#include "cohsys/flips.hpp"
#include "cohsys/invariants.hpp"
#include "cohsys/parallel.hpp"
#include "cohsys/walls.hpp"

namespace cohsys {

namespace {

struct Outcome {
    std::uint64_t checks = 0;
    std::optional<std::string> violation;
};

using Check = std::function<Outcome(const CurveContext&, const SystemType&, const SweepRanges&)>;

std::string context(const CurveContext& ctx, const SystemType& t) {
    return "g=" + std::to_string(ctx.genus()) + " " + t.to_string();
}

std::string value(const Integer& v) { return v.str(); }

Outcome check_euler(const CurveContext& ctx, const SystemType& t1, const SweepRanges& r) {
    Outcome out;
    const std::int64_t g = ctx.genus();
    for (std::int64_t n2 = r.n.lo; n2 <= r.n.hi; ++n2)
        for (std::int64_t d2 = r.d.lo; d2 <= r.d.hi; ++d2)
            for (std::int64_t k2 = r.k.lo; k2 <= r.k.hi; ++k2) {
                const SystemType t2 = SystemType::make(n2, d2, k2);
                const DecompositionCounts c = c_counts(g, t1, t2);
                const Integer lhs = brill_noether_number(g, t1 + t2);
                const Integer rhs = brill_noether_number(g, t1) + brill_noether_number(g, t2) + c.c12 + c.c21 - 1;
                ++out.checks;
                if (lhs != rhs) {
                    out.violation = context(ctx, t1) + " + " + t2.to_string() + ": beta=" + value(lhs) +
                                    " but beta1+beta2+C12+C21-1=" + value(rhs);
                    return out;
                }
            }
    return out;
}

Outcome check_duality(const CurveContext& ctx, const SystemType& t, const SweepRanges&) {
    Outcome out;
    if (t.k <= t.n) return out;
    const SystemType dual = dual_type(t);
    const Integer a = brill_noether_number(ctx.genus(), t);
    const Integer b = brill_noether_number(ctx.genus(), dual);
    out.checks = 1;
    if (a != b) {
        out.violation = context(ctx, t) + ": beta=" + value(a) + " but beta" + dual.to_string() + "=" + value(b);
    }
    return out;
}

// Every wall of (n,d,1) is s/m with 0 < m < n and 0 < s < d.
Outcome check_k1_wall_form(const CurveContext& ctx, const SystemType& t, const SweepRanges&) {
    Outcome out;
    if (t.k != 1 || t.n < 2) return out;
    for (const Rational& w : enumerate_walls(t).wall_values()) {
        ++out.checks;
        bool found = false;
        for (std::int64_t m = 1; m < t.n && !found; ++m) {
            const Rational s = w * Rational(m);
            found = s.is_integer() && s.sign() > 0 && s < Rational(t.d);
        }
        if (!found) {
            out.violation = context(ctx, t) + ": wall " + w.to_string() + " is not s/m with 0<m<n, 0<s<d";
            return out;
        }
    }
    return out;
}

// Rank two with d <= g+2: the existence test rejects every wall.
Outcome check_no_flips(const CurveContext& ctx, const SystemType& t, const SweepRanges&) {
    Outcome out;
    if (t.n != 2 || ctx.genus() < 2 || t.d > ctx.genus() + 2) return out;
    for (const Rational& w : enumerate_walls(t).wall_values()) {
        ++out.checks;
        if (n2_actual_wall_filter(ctx, t, w)) {
            out.violation = context(ctx, t) + ": wall " + w.to_string() + " passes the existence test";
            return out;
        }
    }
    return out;
}

Outcome check_beta_specializations(const CurveContext& ctx, const SystemType& t, const SweepRanges&) {
    Outcome out;
    const std::int64_t g = ctx.genus(), n = t.n, d = t.d, k = t.k;
    const Integer beta = brill_noether_number(g, t);
    auto expect = [&](bool applies, const Integer& closed, const char* label) {
        if (!applies || out.violation) return;
        ++out.checks;
        if (beta != closed) {
            out.violation = context(ctx, t) + ": beta=" + value(beta) + " but " + label + " gives " + value(closed);
        }
    };
    const Integer G(g), N(n), D(d);
    expect(k == 1, (N * N - N) * (G - 1) + D, "(n^2-n)(g-1)+d");
    expect(n == 2 && k == 2, 2 * D - 3, "2d-3");
    expect(n == 2 && k == 3, 3 * D - 2 * G - 6, "3d-2g-6");
    expect(k == 3, (N * N - 3 * N) * (G - 1) + 3 * D - 8, "(n^2-3n)(g-1)+3d-8");
    expect(k == n, D * N - N * N + 1, "dn-n^2+1");
    return out;
}

Outcome check_equals_full(const CurveContext& ctx, const SystemType& t, const SweepRanges&) {
    Outcome out;
    const std::int64_t g = ctx.genus();
    const Integer beta = brill_noether_number(g, t);
    const bool by_beta = beta >= Integer(t.n) * t.n * (g - 1) + 1;
    if (t.k >= 1) {
        ++out.checks;
        const bool by_degree = Integer(t.d) - Integer(t.n) * (g - 1) >= t.k;
        if (by_degree != by_beta) {
            out.violation = context(ctx, t) + ": d-n(g-1)>=k is " + (by_degree ? "true" : "false") +
                            " but beta>=n^2(g-1)+1 is " + (by_beta ? "true" : "false");
            return out;
        }
    }
    if (g >= 2) {
        ++out.checks;
        if (bn_equals_full(g, t) != by_beta) {
            out.violation = context(ctx, t) + ": bn_equals_full disagrees with beta>=n^2(g-1)+1";
        }
    }
    return out;
}

// Each wall is the critical value of some balanced splitting, and every splitting
// reported at a wall has that wall as its critical value.
Outcome check_critical_alpha(const CurveContext& ctx, const SystemType& t, const SweepRanges&) {
    Outcome out;
    for (const Rational& w : enumerate_walls(t).wall_values()) {
        ++out.checks;
        const auto decs = enumerate_decompositions(t, w);
        if (decs.empty()) {
            out.violation = context(ctx, t) + ": wall " + w.to_string() + " has no balanced splitting";
            return out;
        }
        for (const auto& dec : decs) {
            const auto a = critical_alpha(dec.t1, dec.t2);
            if (!a || *a != w) {
                out.violation = context(ctx, t) + ": splitting " + dec.t1.to_string() + " + " + dec.t2.to_string() +
                                " at wall " + w.to_string() + " has a different critical value";
                return out;
            }
        }
    }
    return out;
}

// Every dimension the sweep reports equals beta.
Outcome check_dimension_beta(const CurveContext& ctx, const SystemType& t, const SweepRanges&) {
    Outcome out;
    const SweepRow row = sweep_row(ctx, t);
    for (const auto& [label, dim] : {std::pair{"terminal", row.terminal_dim}, std::pair{"G_0", row.g0_dim},
                                     std::pair{"B", row.bn_dim}}) {
        if (!dim) continue;
        ++out.checks;
        if (*dim != row.beta) {
            out.violation = context(ctx, t) + ": " + label + " dimension " + value(*dim) + " differs from beta=" +
                            value(row.beta);
            return out;
        }
    }
    return out;
}

SweepRanges ranges(IntRange g, IntRange n, IntRange d, IntRange k) { return SweepRanges{g, n, d, k}; }

struct Entry {
    ScanIdentity identity;
    Check check;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"euler", "beta(t1+t2) = beta1 + beta2 + C12 + C21 - 1", ranges({0, 5}, {1, 4}, {-10, 10}, {0, 5})},
         check_euler},
        {{"duality", "beta(n,d,k) = beta(k-n,d,k) for k > n", ranges({0, 5}, {1, 4}, {-10, 10}, {0, 5})},
         check_duality},
        {{"k1-wall-form", "walls of (n,d,1) have the form s/m, 0<m<n, 0<s<d", ranges({2, 2}, {2, 5}, {1, 20}, {1, 1})},
         check_k1_wall_form},
        {{"no-flips", "rank two, d <= g+2: no wall passes the existence test", ranges({2, 6}, {2, 2}, {-5, 8}, {1, 6})},
         check_no_flips},
        {{"beta-specializations", "beta agrees with each closed form that applies",
          ranges({0, 6}, {1, 6}, {-20, 20}, {0, 6})},
         check_beta_specializations},
        {{"equals-full", "d-n(g-1) >= k <=> beta >= n^2(g-1)+1 (k >= 1)", ranges({0, 6}, {1, 6}, {-20, 20}, {0, 6})},
         check_equals_full},
        {{"critical-alpha", "walls coincide with critical values of balanced splittings",
          ranges({2, 2}, {2, 5}, {1, 20}, {0, 6})},
         check_critical_alpha},
        {{"dimension-beta", "every reported dimension equals beta", ranges({0, 4}, {1, 4}, {-5, 12}, {0, 4})},
         check_dimension_beta},
    };
    return table;
}

const Entry& find_entry(const std::string& name) {
    for (const auto& e : entries()) {
        if (e.identity.name == name) return e;
    }
    throw std::invalid_argument("unknown identity '" + name + "'");
}

}  // namespace

const std::vector<ScanIdentity>& scan_registry() {
    static const std::vector<ScanIdentity> list = [] {
        std::vector<ScanIdentity> out;
        for (const auto& e : entries()) out.push_back(e.identity);
        return out;
    }();
    return list;
}

const ScanIdentity& find_identity(const std::string& name) { return find_entry(name).identity; }

ScanResult run_scan(const std::string& identity, const SweepRanges& r, bool petri, unsigned jobs) {
    const Entry& entry = find_entry(identity);
    validate_ranges(r);
    const auto tuples = sweep_tuples(r);
    const auto outcomes = parallel_map(tuples.size(), jobs, [&](std::size_t i) {
        const CurveContext ctx(tuples[i].first, petri);
        return entry.check(ctx, tuples[i].second, r);
    });
    ScanResult result;
    result.identity = identity;
    result.ranges = r;
    result.tuples = tuples.size();
    for (const auto& o : outcomes) {
        result.checks += o.checks;
        if (o.violation) {
            result.violation = o.violation;
            break;
        }
    }
    return result;
}

std::string ScanResult::to_text() const {
    std::ostringstream os;
    os << "identity " << identity << " over g=" << ranges.g.to_string() << " n=" << ranges.n.to_string()
       << " d=" << ranges.d.to_string() << " k=" << ranges.k.to_string() << "\n";
    if (violation) {
        os << "violation: " << *violation << "\n";
        os << "checks before violation: " << checks << "\n";
    } else {
        os << "no violations (" << tuples << " tuples, " << checks << " checks)\n";
    }
    return os.str();
}

}  // namespace cohsys
