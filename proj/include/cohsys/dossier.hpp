#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohsys/bn_loci.hpp"
#include "cohsys/bounds.hpp"
#include "cohsys/flips.hpp"
#include "cohsys/moduli_verdicts.hpp"
#include "cohsys/walls.hpp"

#include <json.hpp>

namespace cohsys {

inline constexpr const char* kDossierSchema = "cohsys.dossier/1";

struct WallAnalysis {
    Wall wall;
    FlipReport flip;
    /// Rank two only: whether a line-bundle splitting passes the existence test.
    std::optional<bool> rank_two_candidate;
};

struct CliffordSample {
    std::size_t chamber = 0;
    Rational alpha;
    CliffordBound bound;
};

/// Everything the library can say about one type on one curve.
struct Dossier {
    std::int64_t genus = 0;
    bool petri = false;
    SystemType type;
    Integer beta;
    AlphaAdmissibility admissibility;
    WallStructure walls;
    std::vector<WallAnalysis> wall_analyses;
    ModuliVerdict terminal;
    std::vector<ChamberVerdict> chambers;
    BNVerdict brill_noether;
    std::vector<CliffordSample> clifford;
    std::vector<std::string> cited;  // sorted, unique
};

/// Per-wall analyses run on up to `jobs` threads; the result does not depend on it.
Dossier build_dossier(const CurveContext& ctx, const SystemType& t, unsigned jobs = 1);

nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json integer_json(const Integer& v);
nlohmann::ordered_json to_json(const TriState& s);
nlohmann::ordered_json to_json(const ModuliVerdict& v);
nlohmann::ordered_json to_json(const Dossier& d);

std::string render_text(const Dossier& d);
std::string render_json(const Dossier& d);

}  // namespace cohsys
