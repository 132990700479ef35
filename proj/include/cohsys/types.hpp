#pragma once

#include <cstdint>
#include <string>

#include "cohsys/rational.hpp"

namespace cohsys {

/// Numerical type (n, d, k) of a coherent system: rank, degree, and the
/// dimension of the subspace of sections.
struct SystemType {
    std::int64_t n = 1;
    std::int64_t d = 0;
    std::int64_t k = 0;

    /// Throws std::invalid_argument unless n >= 1 and k >= 0.
    static SystemType make(std::int64_t n, std::int64_t d, std::int64_t k);

    friend bool operator==(const SystemType&, const SystemType&) = default;
    friend SystemType operator+(const SystemType& a, const SystemType& b) {
        return {a.n + b.n, a.d + b.d, a.k + b.k};
    }

    std::string to_string() const;
};

/// Genus of the curve and whether it is assumed to be Petri. Every curve of
/// genus <= 2 is Petri, so the flag is forced on there.
class CurveContext {
public:
    /// Throws std::invalid_argument when g < 0.
    CurveContext(std::int64_t genus, bool petri);

    std::int64_t genus() const { return genus_; }
    bool petri() const { return petri_; }

private:
    std::int64_t genus_;
    bool petri_;
};

/// Yes / No / Unknown, or a verdict that holds only under the Petri
/// hypothesis (the value it would take is carried along).
class TriState {
public:
    enum class Kind { yes, no, unknown, conditional_on_petri };

    static TriState yes() { return TriState(Kind::yes, true); }
    static TriState no() { return TriState(Kind::no, false); }
    static TriState unknown() { return TriState(Kind::unknown, false); }
    static TriState conditional(bool value_if_petri) {
        return TriState(Kind::conditional_on_petri, value_if_petri);
    }
    static TriState of(bool value) { return value ? yes() : no(); }

    /// Definite value when the hypothesis holds, conditional otherwise.
    static TriState under_petri(bool petri, bool value) {
        return petri ? of(value) : conditional(value);
    }

    Kind kind() const { return kind_; }
    bool is_yes() const { return kind_ == Kind::yes; }
    bool is_no() const { return kind_ == Kind::no; }
    bool is_unknown() const { return kind_ == Kind::unknown; }
    bool is_conditional() const { return kind_ == Kind::conditional_on_petri; }
    /// The carried value for conditional verdicts.
    bool value_if_petri() const { return value_; }

    /// Downgrades a definite verdict to ConditionalOnPetri when petri is false.
    TriState require_petri(bool petri) const;

    /// "yes", "no", "unknown", "if-petri:yes", "if-petri:no".
    std::string to_string() const;

    friend bool operator==(const TriState&, const TriState&) = default;

private:
    TriState(Kind kind, bool value) : kind_(kind), value_(value) {}
    Kind kind_;
    bool value_;
};

inline Integer big(std::int64_t v) { return Integer(v); }

}  // namespace cohsys
