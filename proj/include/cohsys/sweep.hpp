#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohsys/types.hpp"

#include <json.hpp>

namespace cohsys {

inline constexpr const char* kSweepSchema = "cohsys.sweep/1";

/// Inclusive integer range; lo > hi means empty.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    /// Accepts "a" or "a..b". Throws std::invalid_argument otherwise.
    static IntRange parse(const std::string& text);
    bool empty() const { return lo > hi; }
    std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
    std::string to_string() const;
};

struct SweepRanges {
    IntRange g, n, d, k;
};

/// Throws std::invalid_argument if a nonempty range reaches g < 0, n < 1 or k < 0.
void validate_ranges(const SweepRanges& r);

/// All (g,n,d,k) in lexicographic order.
std::vector<std::pair<std::int64_t, SystemType>> sweep_tuples(const SweepRanges& r);

struct SweepRow {
    std::int64_t g = 0;
    SystemType type;
    bool petri = false;
    Integer beta;
    std::vector<Rational> walls;
    TriState terminal_nonempty = TriState::unknown();
    std::optional<Integer> terminal_dim;
    TriState g0_nonempty = TriState::unknown();
    std::optional<Integer> g0_dim;
    TriState bn_nonempty = TriState::unknown();
    std::optional<bool> bn_equals_full;  // absent for g < 2 and n >= 2
    std::optional<Integer> bn_dim;
};

SweepRow sweep_row(const CurveContext& ctx, const SystemType& t);

/// True when G_L, G_0 or B(n,d,k) is known to be nonempty.
bool row_nonempty(const SweepRow& row);

struct SweepOptions {
    SweepRanges ranges;
    bool petri = false;  // forced on for g <= 2 by CurveContext
    bool only_nonempty = false;
    unsigned jobs = 1;
};

std::vector<SweepRow> run_sweep(const SweepOptions& opts);

inline constexpr const char* kSweepCsvHeader =
    "g,n,d,k,petri,beta,walls,terminal_nonempty,terminal_dim,g0_nonempty,g0_dim,bn_nonempty,bn_equals_full,bn_dim";

std::string csv_row(const SweepRow& row);
nlohmann::ordered_json json_row(const SweepRow& row);

}  // namespace cohsys
