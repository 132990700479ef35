#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohsys/dossier.hpp"
#include "cohsys/scan.hpp"
#include "cohsys/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
    file << text;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Replaces "--config FILE" by the file's key=value pairs as flags. Keys already
// given on the command line are skipped, so the command line wins.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    auto given = [&](const std::string& flag) {
        return std::any_of(args.begin(), args.end(),
                           [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
    };
    std::vector<std::string> extra;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string flag = "--" + key;
        if (given(flag)) continue;
        if (value == "true" || value == "yes") {
            extra.push_back(flag);
        } else if (value == "false" || value == "no") {
            continue;
        } else {
            extra.push_back(flag + "=" + value);
        }
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

struct ReportArgs {
    std::int64_t genus = 0, rank = 0, degree = 0, sections = 0;
    bool petri = false;
    std::string format = "text";
    std::string out;
    unsigned jobs = 1;
};

struct RangeArgs {
    std::string genus, rank, degree, sections;
    bool petri = false;
    std::string format;
    std::string out;
    unsigned jobs = 1;
    bool only_nonempty = false;
    std::string identity;
    bool list = false;
};

cohsys::IntRange pick(const std::string& text, const cohsys::IntRange& fallback) {
    return text.empty() ? fallback : cohsys::IntRange::parse(text);
}

int run_report(const ReportArgs& a) {
    const cohsys::CurveContext ctx(a.genus, a.petri);
    const cohsys::SystemType t = cohsys::SystemType::make(a.rank, a.degree, a.sections);
    const cohsys::Dossier d = cohsys::build_dossier(ctx, t, a.jobs);
    emit(a.format == "json" ? cohsys::render_json(d) : cohsys::render_text(d), a.out);
    return kExitOk;
}

int run_sweep(const RangeArgs& a) {
    cohsys::SweepOptions opts;
    const cohsys::IntRange none{};
    opts.ranges = {pick(a.genus, none), pick(a.rank, none), pick(a.degree, none), pick(a.sections, none)};
    if (a.genus.empty() || a.rank.empty() || a.degree.empty() || a.sections.empty()) {
        throw std::invalid_argument("sweep needs --genus, --rank, --degree and --sections ranges");
    }
    opts.petri = a.petri;
    opts.only_nonempty = a.only_nonempty;
    opts.jobs = a.jobs;
    const auto rows = cohsys::run_sweep(opts);
    std::ostringstream os;
    if (a.format == "json") {
        for (const auto& row : rows) os << cohsys::json_row(row).dump() << "\n";
    } else {
        os << cohsys::kSweepCsvHeader << "\n";
        for (const auto& row : rows) os << cohsys::csv_row(row) << "\n";
    }
    emit(os.str(), a.out);
    return kExitOk;
}

int run_scan(const RangeArgs& a) {
    if (a.list) {
        std::ostringstream os;
        for (const auto& id : cohsys::scan_registry()) {
            const auto& r = id.defaults;
            os << id.name << ": " << id.description << " (g=" << r.g.to_string() << " n=" << r.n.to_string()
               << " d=" << r.d.to_string() << " k=" << r.k.to_string() << ")\n";
        }
        emit(os.str(), a.out);
        return kExitOk;
    }
    if (a.identity.empty()) throw std::invalid_argument("scan needs --identity (see --list)");
    const cohsys::ScanIdentity& id = cohsys::find_identity(a.identity);
    const cohsys::SweepRanges ranges{pick(a.genus, id.defaults.g), pick(a.rank, id.defaults.n),
                                     pick(a.degree, id.defaults.d), pick(a.sections, id.defaults.k)};
    const cohsys::ScanResult result = cohsys::run_scan(a.identity, ranges, a.petri, a.jobs);
    if (a.format == "json") {
        nlohmann::ordered_json j{{"schema", "cohsys.scan/1"},
                                 {"identity", result.identity},
                                 {"ranges",
                                  {{"g", ranges.g.to_string()},
                                   {"n", ranges.n.to_string()},
                                   {"d", ranges.d.to_string()},
                                   {"k", ranges.k.to_string()}}},
                                 {"tuples", result.tuples},
                                 {"checks", result.checks},
                                 {"violation", result.violation ? nlohmann::ordered_json(*result.violation)
                                                                : nlohmann::ordered_json(nullptr)}};
        emit(j.dump(2) + "\n", a.out);
    } else {
        emit(result.to_text(), a.out);
    }
    return result.ok() ? kExitOk : kExitViolation;
}

void add_range_options(CLI::App* sub, RangeArgs& a) {
    sub->add_option("--genus", a.genus, "genus range a..b");
    sub->add_option("--rank", a.rank, "rank range a..b");
    sub->add_option("--degree", a.degree, "degree range a..b");
    sub->add_option("--sections", a.sections, "section-count range a..b");
    sub->add_flag("--petri", a.petri, "assume a Petri curve (automatic for g <= 2)");
    sub->add_option("--out", a.out, "write output to a file");
    sub->add_option("--jobs", a.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--config", "key=value file; command-line flags win");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wall-crossing calculator for coherent systems on curves"};
    app.require_subcommand(1);

    ReportArgs report;
    CLI::App* rep = app.add_subcommand("report", "dossier for one type (g, n, d, k)");
    rep->add_option("--genus", report.genus, "genus g")->required()->check(CLI::NonNegativeNumber);
    rep->add_option("--rank", report.rank, "rank n")->required()->check(CLI::PositiveNumber);
    rep->add_option("--degree", report.degree, "degree d")->required();
    rep->add_option("--sections", report.sections, "section count k")->required()->check(CLI::NonNegativeNumber);
    rep->add_flag("--petri", report.petri, "assume a Petri curve (automatic for g <= 2)");
    rep->add_option("--format", report.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    rep->add_option("--out", report.out, "write output to a file");
    rep->add_option("--jobs", report.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    rep->add_option("--config", "key=value file; command-line flags win");

    RangeArgs sweep;
    sweep.format = "csv";
    CLI::App* swp = app.add_subcommand("sweep", "one row per type over inclusive ranges");
    add_range_options(swp, sweep);
    swp->add_option("--format", sweep.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    swp->add_flag("--only-nonempty", sweep.only_nonempty, "keep rows with a moduli space known to be nonempty");

    RangeArgs scan;
    scan.format = "text";
    CLI::App* scn = app.add_subcommand("scan", "check a named identity over ranges");
    add_range_options(scn, scan);
    scn->add_option("--format", scan.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    scn->add_option("--identity", scan.identity, "identity name");
    scn->add_flag("--list", scan.list, "list identities with default ranges");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = expand_config(std::move(args));
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*rep) return run_report(report);
        if (*swp) return run_sweep(sweep);
        return run_scan(scan);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
