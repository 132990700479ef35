#include "cohsys/types.hpp"

#include <stdexcept>

namespace cohsys {

SystemType SystemType::make(std::int64_t n, std::int64_t d, std::int64_t k) {
    if (n < 1) {
        throw std::invalid_argument("system type: rank must be >= 1, got " + std::to_string(n));
    }
    if (k < 0) {
        throw std::invalid_argument("system type: section count must be >= 0, got " +
                                    std::to_string(k));
    }
    return {n, d, k};
}

std::string SystemType::to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(k) + ")";
}

CurveContext::CurveContext(std::int64_t genus, bool petri) : genus_(genus), petri_(petri || genus <= 2) {
    if (genus < 0) {
        throw std::invalid_argument("curve: genus must be >= 0, got " + std::to_string(genus));
    }
}

TriState TriState::require_petri(bool petri) const {
    if (petri) return *this;
    switch (kind_) {
        case Kind::yes: return conditional(true);
        case Kind::no: return conditional(false);
        default: return *this;
    }
}

std::string TriState::to_string() const {
    switch (kind_) {
        case Kind::yes: return "yes";
        case Kind::no: return "no";
        case Kind::unknown: return "unknown";
        case Kind::conditional_on_petri: return value_ ? "if-petri:yes" : "if-petri:no";
    }
    return "unknown";
}

}  // namespace cohsys
