#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohsys/moduli_verdicts.hpp"
#include "cohsys/types.hpp"

namespace cohsys {

struct PicardStatement {
    std::string text;
    std::string provenance;
};

/// How far the G_0 -> B(n,d,k) comparison goes for a given type.
struct Desingularization {
    enum class Conclusion {
        equals_full_moduli,     // B = M(n,d); nothing to resolve
        conditions_fail,        // one of the three conditions fails or is undecided
        irreducible,            // conditions hold: B irreducible, dim B = dim G_0
        isomorphic_over_open,   // + G_0 smooth: psi iso over B(k) - B(k+1)
        resolves_closure,       // + gcd(n,d,k) = 1: G_0 desingularises the closure of B
        resolves_locus,         // + gcd(n,d) = 1: B projective, G_0 desingularises B
    };

    bool beta_at_most_bundle_dim = false;  // beta <= n^2(g-1)
    TriState g0_irreducible = TriState::unknown();
    TriState b_nonempty = TriState::unknown();
    TriState g0_smooth = TriState::unknown();
    bool gcd_ndk_one = false;
    bool gcd_nd_one = false;
    Conclusion conclusion = Conclusion::conditions_fail;
    std::vector<std::string> notes;

    std::string conclusion_text() const;
};

struct BNVerdict {
    TriState nonempty = TriState::unknown();
    bool equals_full_moduli = false;
    TriState irreducible = TriState::unknown();
    std::optional<Integer> dimension;
    std::string smooth_locus_note;
    std::optional<Structure> structure;
    std::optional<PicardStatement> picard;
    std::optional<Desingularization> desingularization;
    std::string provenance;
    std::vector<std::string> notes;
};

/// B(n,d,k) = M(n,d) iff d - n(g-1) >= k, and always for k = 0. Throws std::invalid_argument for g < 2.
bool bn_equals_full(std::int64_t g, const SystemType& t);

TriState bn_nonempty(const CurveContext& ctx, const SystemType& t);

/// Full verdict, including the Picard and desingularisation records.
BNVerdict bn_structure(const CurveContext& ctx, const SystemType& t);

std::optional<PicardStatement> picard_statement(const CurveContext& ctx, const SystemType& t);

/// Absent for g < 2, where Brill-Noether theory is trivial.
std::optional<Desingularization> desingularization_check(const CurveContext& ctx, const SystemType& t);

}  // namespace cohsys
