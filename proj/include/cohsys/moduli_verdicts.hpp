#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohsys/types.hpp"
#include "cohsys/walls.hpp"

namespace cohsys {

struct Fibre {
    enum class Kind { grassmannian, projective_space, symmetric_power, single_point };
    Kind kind = Kind::single_point;
    Integer a;  // Gr(a, b), P^a, S^a X
    Integer b;

    static Fibre grassmannian(Integer k, Integer n) { return {Kind::grassmannian, std::move(k), std::move(n)}; }
    static Fibre projective_space(Integer n) { return {Kind::projective_space, std::move(n), 0}; }
    static Fibre symmetric_power(Integer n) { return {Kind::symmetric_power, std::move(n), 0}; }
    static Fibre point() { return {Kind::single_point, 0, 0}; }

    std::string to_string() const;
    friend bool operator==(const Fibre&, const Fibre&) = default;
};

/// Where a fibration lives: the moduli M(rank, degree) of stable bundles, or
/// the curve X itself.
struct Base {
    enum class Kind { bundle_moduli, curve };
    Kind kind = Kind::bundle_moduli;
    std::int64_t rank = 0;
    std::int64_t degree = 0;

    std::string to_string() const;
    friend bool operator==(const Base&, const Base&) = default;
};

enum class Relation { isomorphism, birational };

struct Structure {
    std::optional<Base> base;
    Fibre fibre;
    Relation relation = Relation::isomorphism;

    /// e.g. "birational to a fibration over M(1,5) with fibre Gr(2,6)".
    std::string to_string() const;
    friend bool operator==(const Structure&, const Structure&) = default;
};

struct ModuliVerdict {
    TriState nonempty = TriState::unknown();
    TriState irreducible = TriState::unknown();
    TriState smooth = TriState::unknown();
    std::optional<Integer> dimension;
    Integer expected_dimension;
    std::optional<Structure> structure;
    std::string provenance;
    std::vector<std::string> notes;
    /// Moduli of S-equivalence classes of semistable systems, when it differs.
    std::shared_ptr<const ModuliVerdict> semistable_variant;
};

struct ChamberVerdict {
    Chamber chamber;
    ModuliVerdict verdict;
};

/// The moduli space for alpha in the last chamber.
ModuliVerdict classify_terminal(const CurveContext& ctx, const SystemType& t);

/// One verdict per chamber of enumerate_walls(t). Chambers not covered by a
/// classification result are Unknown, apart from the terminal one.
std::vector<ChamberVerdict> classify_all_chambers(const CurveContext& ctx, const SystemType& t);

/// G(1,d,k): stability is vacuous in rank one, so this holds for every alpha.
ModuliVerdict rank1_moduli(const CurveContext& ctx, std::int64_t d, std::int64_t k);

}  // namespace cohsys
