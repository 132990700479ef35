#include "cohsys/bn_loci.hpp"

#include <numeric>
#include <stdexcept>

#include "cohsys/invariants.hpp"

namespace cohsys {

std::string Desingularization::conclusion_text() const {
    switch (conclusion) {
        case Conclusion::equals_full_moduli: return "B(n,d,k) = M(n,d)";
        case Conclusion::conditions_fail: return "conditions not established";
        case Conclusion::irreducible: return "B irreducible with dim B = dim G_0";
        case Conclusion::isomorphic_over_open: return "G_0 -> B is an isomorphism over B(n,d,k) - B(n,d,k+1)";
        case Conclusion::resolves_closure: return "G_0 is a desingularisation of the closure of B";
        case Conclusion::resolves_locus: return "B is projective and G_0 is a desingularisation of B";
    }
    return "?";
}

bool bn_equals_full(std::int64_t g, const SystemType& t) {
    if (g < 2) {
        throw std::invalid_argument("Brill-Noether loci are only treated for g >= 2");
    }
    if (t.k == 0) return true;
    return Integer(t.d) - Integer(t.n) * (g - 1) >= t.k;
}

namespace {

// Non-emptiness table for k = 2, 3 and n >= 2 on a curve of genus >= 2.
bool table_nonempty(std::int64_t g, const SystemType& t) {
    const std::int64_t n = t.n, d = t.d, k = t.k;
    if (k == 2) return n == 2 ? d >= 3 : d >= 1;
    if (n == 2) return 3 * d >= 2 * g + 6;
    if (n == 3) return d >= 4;
    if (n == 4) return g == 2 ? d >= 2 : d >= 1;
    return d >= 1;
}

TriState rank1_locus_nonempty(const CurveContext& ctx, const SystemType& t) {
    if (t.k == 0 || (t.d == 0 && t.k == 1)) return TriState::yes();
    return TriState::under_petri(ctx.petri(), brill_noether_number(ctx.genus(), t) >= 0);
}

}  // namespace

TriState bn_nonempty(const CurveContext& ctx, const SystemType& t) {
    if (t.n == 1) return rank1_locus_nonempty(ctx, t);
    const std::int64_t g = ctx.genus();
    if (g < 2) return TriState::unknown();
    if (t.k == 0 || bn_equals_full(g, t)) return TriState::yes();
    if (t.k == 1) return TriState::of(t.d >= 1);
    if (t.k == 2 || t.k == 3) {
        const bool value = table_nonempty(g, t);
        const bool needs_petri = t.k == 3 && t.n == 2;
        return needs_petri ? TriState::under_petri(ctx.petri(), value) : TriState::of(value);
    }
    return TriState::unknown();
}

std::optional<PicardStatement> picard_statement(const CurveContext& ctx, const SystemType& t) {
    const std::int64_t g = ctx.genus();
    const std::int64_t n = t.n, d = t.d;
    if (g < 2 || !ctx.petri() || t.k != 1 || n < 3) return std::nullopt;
    if (d <= 0 || Integer(d) > Integer(n) * (g - 1)) return std::nullopt;
    if (std::gcd(n - 1, d) != 1 || std::gcd(n, d) != 1) return std::nullopt;
    return PicardStatement{"Pic(B(" + std::to_string(n) + "," + std::to_string(d) + ",1) - B(" + std::to_string(n) +
                               "," + std::to_string(d) + ",2)) = Pic(M(" + std::to_string(n - 1) + "," +
                               std::to_string(d) + ")) x Z",
                           "bn-picard(k=1)"};
}

std::optional<Desingularization> desingularization_check(const CurveContext& ctx, const SystemType& t) {
    const std::int64_t g = ctx.genus();
    if (g < 2) return std::nullopt;
    Desingularization out;
    const Integer beta = brill_noether_number(g, t);
    out.beta_at_most_bundle_dim = beta <= Integer(t.n) * t.n * (g - 1);
    out.gcd_ndk_one = std::gcd(std::gcd(t.n, t.d), t.k) == 1;
    out.gcd_nd_one = std::gcd(t.n, t.d) == 1;
    out.b_nonempty = bn_nonempty(ctx, t);

    if (t.d == 0 && t.k > 0 && t.k < t.n) {
        out.notes.push_back("d=0, 0<k<n: the semistable G_0 is empty while the semistable locus is not");
    }
    const auto chambers = classify_all_chambers(ctx, t);
    if (chambers.empty()) {
        out.g0_irreducible = TriState::no();
        out.g0_smooth = TriState::no();
    } else {
        out.g0_irreducible = chambers.front().verdict.irreducible;
        out.g0_smooth = chambers.front().verdict.smooth;
    }
    if (!out.beta_at_most_bundle_dim) {
        out.conclusion = Desingularization::Conclusion::equals_full_moduli;
        return out;
    }


    using C = Desingularization::Conclusion;
    if (!(out.g0_irreducible.is_yes() && out.b_nonempty.is_yes())) {
        out.conclusion = C::conditions_fail;
        return out;
    }
    out.conclusion = C::irreducible;
    if (!out.g0_smooth.is_yes()) return out;
    out.conclusion = C::isomorphic_over_open;
    if (out.gcd_nd_one) {
        out.conclusion = C::resolves_locus;
    } else if (out.gcd_ndk_one) {
        out.conclusion = C::resolves_closure;
    }
    return out;
}

BNVerdict bn_structure(const CurveContext& ctx, const SystemType& t) {
    BNVerdict v;
    const std::int64_t g = ctx.genus();
    const std::int64_t n = t.n, d = t.d, k = t.k;
    const Integer beta = brill_noether_number(g, t);
    v.nonempty = bn_nonempty(ctx, t);

    if (n == 1) {
        v.provenance = "rank-one-petri";
        const bool full = Integer(d) - (g - 1) >= k;
        v.equals_full_moduli = full;
        if (full || k == 0) {
            v.irreducible = TriState::yes();
            v.notes.push_back("B(1,d,k) is the whole Jacobian");
        } else if (d == 0 && k == 1) {
            v.dimension = beta;
            v.irreducible = TriState::yes();
            v.structure = Structure{std::nullopt, Fibre::point(), Relation::isomorphism};
            v.notes.push_back("only the trivial bundle");
        } else if (beta >= 0) {
            v.dimension = beta;
            v.irreducible = beta > 0 ? TriState::under_petri(ctx.petri(), true) : TriState::unknown();
            if (!ctx.petri()) v.notes.push_back("dimension holds for a Petri curve; Petri not assumed");
        } else {
            v.irreducible = TriState::no().require_petri(ctx.petri());
        }
        return v;
    }
    if (g < 2) {
        v.provenance = "none";
        v.notes.push_back("Brill-Noether loci are only treated for g >= 2");
        return v;
    }

    v.equals_full_moduli = bn_equals_full(g, t);
    v.desingularization = desingularization_check(ctx, t);
    v.picard = picard_statement(ctx, t);
    if (v.equals_full_moduli) {
        v.provenance = "bn-equals-full";
        v.irreducible = TriState::yes();
        v.notes.push_back("B(n,d,k) = M(n,d), of dimension " + bundle_moduli_dim(g, n, d).value->str());
        return v;
    }
    if (k == 1) {
        v.provenance = "bn-structure(k=1)";
        if (d <= 0) {
            v.irreducible = TriState::no();
            return v;
        }
        v.irreducible = TriState::yes();
        v.dimension = beta;
        v.smooth_locus_note = "smooth outside B(" + std::to_string(n) + "," + std::to_string(d) + ",2)";
        v.structure = Structure{Base{Base::Kind::bundle_moduli, n - 1, d},
                                Fibre::projective_space(Integer(d) + Integer(n - 1) * (g - 1) - 1),
                                Relation::birational};
        if (std::gcd(n - 1, d) == 1) v.notes.push_back("(n-1,d)=1: birational to the product");
        return v;
    }

    if (k == 2 || k == 3) {
        v.provenance = "bn-structure(k=2,3)";
        if (v.nonempty.is_no() || (v.nonempty.is_conditional() && !v.nonempty.value_if_petri())) {
            v.irreducible = v.nonempty;
            return v;
        }
        v.irreducible = TriState::under_petri(ctx.petri(), true);
        v.dimension = beta;
        if (!ctx.petri()) v.notes.push_back("irreducibility and dimension hold for a Petri curve; Petri not assumed");
        if (k < n) {
            v.structure = Structure{Base{Base::Kind::bundle_moduli, n - k, d},
                                    Fibre::grassmannian(k, Integer(d) + Integer(n - k) * (g - 1)),
                                    Relation::birational};
            if (std::gcd(n - k, d) == 1) v.notes.push_back("(n-k,d)=1: birational to the product");
        }
        return v;
    }

    v.provenance = "none";
    v.notes.push_back("no structure result for k >= 4");
    return v;
}

}  // namespace cohsys
