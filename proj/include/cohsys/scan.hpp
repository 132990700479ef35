#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohsys/sweep.hpp"

namespace cohsys {

struct ScanIdentity {
    std::string name;
    std::string description;
    SweepRanges defaults;
};

/// Fixed registry, in a stable order.
const std::vector<ScanIdentity>& scan_registry();

/// Throws std::invalid_argument for an unknown name.
const ScanIdentity& find_identity(const std::string& name);

struct ScanResult {
    std::string identity;
    SweepRanges ranges;
    std::uint64_t tuples = 0;
    std::uint64_t checks = 0;
    std::optional<std::string> violation;  // first failing tuple in lexicographic order

    bool ok() const { return !violation.has_value(); }
    std::string to_text() const;
};

ScanResult run_scan(const std::string& identity, const SweepRanges& ranges, bool petri = false, unsigned jobs = 1);

}  // namespace cohsys
