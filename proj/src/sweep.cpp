#include "cohsys/sweep.hpp"

#include <regex>
#include <stdexcept>

#include "cohsys/bn_loci.hpp"
#include "cohsys/dossier.hpp"
#include "cohsys/invariants.hpp"
#include "cohsys/moduli_verdicts.hpp"
#include "cohsys/parallel.hpp"
#include "cohsys/walls.hpp"

namespace cohsys {

IntRange IntRange::parse(const std::string& text) {
    static const std::regex pattern(R"(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw std::invalid_argument("bad range '" + text + "', expected a or a..b");
    }
    try {
        IntRange r;
        r.lo = std::stoll(m[1].str());
        r.hi = m[2].matched ? std::stoll(m[2].str()) : r.lo;
        return r;
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("range '" + text + "' out of bounds");
    }
}

std::string IntRange::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

void validate_ranges(const SweepRanges& r) {
    if (!r.g.empty() && r.g.lo < 0) throw std::invalid_argument("genus range must be >= 0");
    if (!r.n.empty() && r.n.lo < 1) throw std::invalid_argument("rank range must be >= 1");
    if (!r.k.empty() && r.k.lo < 0) throw std::invalid_argument("sections range must be >= 0");
}

std::vector<std::pair<std::int64_t, SystemType>> sweep_tuples(const SweepRanges& r) {
    std::vector<std::pair<std::int64_t, SystemType>> out;
    for (std::int64_t g = r.g.lo; g <= r.g.hi; ++g)
        for (std::int64_t n = r.n.lo; n <= r.n.hi; ++n)
            for (std::int64_t d = r.d.lo; d <= r.d.hi; ++d)
                for (std::int64_t k = r.k.lo; k <= r.k.hi; ++k) out.emplace_back(g, SystemType::make(n, d, k));
    return out;
}

SweepRow sweep_row(const CurveContext& ctx, const SystemType& t) {
    SweepRow row;
    row.g = ctx.genus();
    row.type = t;
    row.petri = ctx.petri();
    row.beta = brill_noether_number(ctx.genus(), t);
    row.walls = enumerate_walls(t).wall_values();
    const ModuliVerdict terminal = classify_terminal(ctx, t);
    row.terminal_nonempty = terminal.nonempty;
    row.terminal_dim = terminal.dimension;
    const auto chambers = classify_all_chambers(ctx, t);
    if (!chambers.empty()) {
        row.g0_nonempty = chambers.front().verdict.nonempty;
        row.g0_dim = chambers.front().verdict.dimension;
    } else {
        row.g0_nonempty = TriState::no();
    }
    const BNVerdict bn = bn_structure(ctx, t);
    row.bn_nonempty = bn.nonempty;
    if (ctx.genus() >= 2 || t.n == 1) row.bn_equals_full = bn.equals_full_moduli;
    row.bn_dim = bn.dimension;
    return row;
}

bool row_nonempty(const SweepRow& row) {
    return row.terminal_nonempty.is_yes() || row.g0_nonempty.is_yes() || row.bn_nonempty.is_yes();
}

std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
    validate_ranges(opts.ranges);
    const auto tuples = sweep_tuples(opts.ranges);
    auto rows = parallel_map(tuples.size(), opts.jobs, [&](std::size_t i) {
        const CurveContext ctx(tuples[i].first, opts.petri);
        return sweep_row(ctx, tuples[i].second);
    });
    if (opts.only_nonempty) std::erase_if(rows, [](const SweepRow& r) { return !row_nonempty(r); });
    return rows;
}

namespace {

std::string cell(const std::optional<Integer>& v) { return v ? v->str() : std::string(); }

}  // namespace

std::string csv_row(const SweepRow& row) {
    std::string walls;
    for (std::size_t i = 0; i < row.walls.size(); ++i) walls += (i ? " " : "") + row.walls[i].to_string();
    std::string out = std::to_string(row.g) + "," + std::to_string(row.type.n) + "," + std::to_string(row.type.d) +
                      "," + std::to_string(row.type.k) + "," + (row.petri ? "yes" : "no") + "," + row.beta.str() +
                      "," + walls + "," + row.terminal_nonempty.to_string() + "," + cell(row.terminal_dim) + "," +
                      row.g0_nonempty.to_string() + "," + cell(row.g0_dim) + "," + row.bn_nonempty.to_string() + ",";
    if (row.bn_equals_full) out += *row.bn_equals_full ? "yes" : "no";
    out += "," + cell(row.bn_dim);
    return out;
}

nlohmann::ordered_json json_row(const SweepRow& row) {
    using nlohmann::ordered_json;
    auto opt = [](const std::optional<Integer>& v) { return v ? integer_json(*v) : ordered_json(nullptr); };
    ordered_json walls = ordered_json::array();
    for (const auto& w : row.walls) walls.push_back(rational_json(w));
    return ordered_json{{"schema", kSweepSchema},
                        {"g", row.g},
                        {"n", row.type.n},
                        {"d", row.type.d},
                        {"k", row.type.k},
                        {"petri", row.petri},
                        {"beta", integer_json(row.beta)},
                        {"walls", std::move(walls)},
                        {"terminal_nonempty", row.terminal_nonempty.to_string()},
                        {"terminal_dim", opt(row.terminal_dim)},
                        {"g0_nonempty", row.g0_nonempty.to_string()},
                        {"g0_dim", opt(row.g0_dim)},
                        {"bn_nonempty", row.bn_nonempty.to_string()},
                        {"bn_equals_full", row.bn_equals_full ? ordered_json(*row.bn_equals_full) : ordered_json(nullptr)},
                        {"bn_dim", opt(row.bn_dim)}};
}

}  // namespace cohsys
