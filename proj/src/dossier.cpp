#include "cohsys/dossier.hpp"

#include <set>
#include <sstream>

#include "cohsys/invariants.hpp"
#include "cohsys/parallel.hpp"

namespace cohsys {

using nlohmann::ordered_json;

Dossier build_dossier(const CurveContext& ctx, const SystemType& t, unsigned jobs) {
    Dossier d;
    d.genus = ctx.genus();
    d.petri = ctx.petri();
    d.type = t;
    d.beta = brill_noether_number(ctx.genus(), t);
    d.admissibility = alpha_admissibility(t);
    d.walls = enumerate_walls(t);
    d.wall_analyses = parallel_map(d.walls.walls.size(), jobs, [&](std::size_t i) {
        const Wall& w = d.walls.walls[i];
        WallAnalysis a{w, good_flip_verdict(ctx, t, w.value), std::nullopt};
        if (t.n == 2) a.rank_two_candidate = n2_actual_wall_filter(ctx, t, w.value);
        return a;
    });
    d.terminal = classify_terminal(ctx, t);
    d.chambers = classify_all_chambers(ctx, t);
    d.brill_noether = bn_structure(ctx, t);
    for (const auto& c : d.walls.chambers) {
        const Rational alpha = c.sample();
        d.clifford.push_back({c.index, alpha, clifford_bound(ctx.genus(), t, alpha)});
    }

    std::set<std::string> cited;
    auto cite = [&](const std::string& p) {
        if (!p.empty() && p != "none") cited.insert(p);
    };
    cite(d.terminal.provenance);
    for (const auto& c : d.chambers) cite(c.verdict.provenance);
    for (const auto& a : d.wall_analyses) cite(a.flip.verdict.provenance);
    cite(d.brill_noether.provenance);
    if (d.brill_noether.picard) cite(d.brill_noether.picard->provenance);
    d.cited.assign(cited.begin(), cited.end());
    return d;
}

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

ordered_json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

ordered_json to_json(const TriState& s) { return s.to_string(); }

namespace {

ordered_json type_json(const SystemType& t) { return ordered_json{{"n", t.n}, {"d", t.d}, {"k", t.k}}; }

ordered_json optional_integer(const std::optional<Integer>& v) { return v ? integer_json(*v) : ordered_json(nullptr); }

ordered_json structure_json(const std::optional<Structure>& s) {
    if (!s) return nullptr;
    ordered_json out;
    if (s->base) {
        out["base"] = s->base->to_string();
    } else {
        out["base"] = nullptr;
    }
    out["fibre"] = s->fibre.to_string();
    out["relation"] = s->relation == Relation::isomorphism ? "isomorphism" : "birational";
    out["description"] = s->to_string();
    return out;
}

ordered_json cap_json(const Cap& cap) {
    ordered_json out;
    if (const auto* b = std::get_if<BoundedCap>(&cap)) {
        out["kind"] = "bounded";
        out["limit"] = rational_json(b->limit);
    } else if (const auto* s = std::get_if<StabilizedCap>(&cap)) {
        out["kind"] = "stabilized";
        out["semistability_bound"] = rational_json(s->semistability_bound);
        out["enumeration_bound"] = rational_json(s->enumeration_bound);
    } else {
        out["kind"] = "no_walls";
    }
    return out;
}

ordered_json chamber_json(const Chamber& c) {
    return ordered_json{{"index", c.index},
                        {"lower", rational_json(c.lower)},
                        {"upper", c.upper ? rational_json(*c.upper) : ordered_json(nullptr)}};
}

const char* side_name(Side s) { return s == Side::plus ? "plus" : "minus"; }

const char* flip_kind_name(FlipVerdict::Kind k) {
    switch (k) {
        case FlipVerdict::Kind::good_proved: return "good_proved";
        case FlipVerdict::Kind::partially_good_proved: return "partially_good_proved";
        case FlipVerdict::Kind::bounds_only: return "bounds_only";
        case FlipVerdict::Kind::not_applicable: return "not_applicable";
    }
    return "?";
}

ordered_json flip_json(const FlipReport& f) {
    ordered_json decs = ordered_json::array();
    for (const auto& dec : f.decompositions) {
        ordered_json j{{"t1", type_json(dec.t1)}, {"t2", type_json(dec.t2)}, {"side", side_name(dec.side)}};
        if (dec.counts) {
            j["c12"] = integer_json(dec.counts->c12);
            j["c21"] = integer_json(dec.counts->c21);
            j["beta_1"] = integer_json(dec.counts->beta_1);
            j["beta_2"] = integer_json(dec.counts->beta_2);
        }
        decs.push_back(std::move(j));
    }
    ordered_json verdict{{"kind", flip_kind_name(f.verdict.kind)}, {"provenance", f.verdict.provenance}};
    if (f.verdict.lambda) verdict["lambda"] = rational_json(*f.verdict.lambda);
    if (f.verdict.n1) verdict["n1"] = *f.verdict.n1;
    return ordered_json{{"alpha", rational_json(f.alpha)},
                        {"decompositions", std::move(decs)},
                        {"codim_plus_lb", optional_integer(f.codim_plus_lb)},
                        {"codim_minus_lb", optional_integer(f.codim_minus_lb)},
                        {"caveats", f.caveats},
                        {"verdict", std::move(verdict)}};
}

ordered_json desing_json(const std::optional<Desingularization>& ds) {
    if (!ds) return nullptr;
    return ordered_json{{"beta_at_most_bundle_dim", ds->beta_at_most_bundle_dim},
                        {"g0_irreducible", to_json(ds->g0_irreducible)},
                        {"b_nonempty", to_json(ds->b_nonempty)},
                        {"g0_smooth", to_json(ds->g0_smooth)},
                        {"gcd_ndk_one", ds->gcd_ndk_one},
                        {"gcd_nd_one", ds->gcd_nd_one},
                        {"conclusion", ds->conclusion_text()},
                        {"notes", ds->notes}};
}

ordered_json bn_json(const BNVerdict& v, bool equals_full_defined) {
    ordered_json out{{"nonempty", to_json(v.nonempty)},
                     {"equals_full_moduli", equals_full_defined ? ordered_json(v.equals_full_moduli) : ordered_json(nullptr)},
                     {"irreducible", to_json(v.irreducible)},
                     {"dimension", optional_integer(v.dimension)},
                     {"smooth_locus_note", v.smooth_locus_note},
                     {"structure", structure_json(v.structure)}};
    out["picard"] = v.picard ? ordered_json{{"statement", v.picard->text}, {"provenance", v.picard->provenance}}
                             : ordered_json(nullptr);
    out["desingularization"] = desing_json(v.desingularization);
    out["provenance"] = v.provenance;
    out["notes"] = v.notes;
    return out;
}

}  // namespace

ordered_json to_json(const ModuliVerdict& v) {
    ordered_json out{{"nonempty", to_json(v.nonempty)},
                     {"irreducible", to_json(v.irreducible)},
                     {"smooth", to_json(v.smooth)},
                     {"dimension", optional_integer(v.dimension)},
                     {"expected_dimension", integer_json(v.expected_dimension)},
                     {"structure", structure_json(v.structure)},
                     {"provenance", v.provenance},
                     {"notes", v.notes}};
    out["semistable_variant"] = v.semistable_variant ? to_json(*v.semistable_variant) : ordered_json(nullptr);
    return out;
}

ordered_json to_json(const Dossier& d) {
    ordered_json out;
    out["schema"] = kDossierSchema;
    out["input"] = ordered_json{{"g", d.genus}, {"n", d.type.n}, {"d", d.type.d}, {"k", d.type.k}, {"petri", d.petri}};
    out["beta"] = integer_json(d.beta);
    out["admissibility"] = ordered_json{{"semistable_possible", d.admissibility.semistable_possible},
                                        {"stable_possible", d.admissibility.stable_possible},
                                        {"exception_case", d.admissibility.exception_case}};
    ordered_json walls = ordered_json::array();
    for (const auto& w : d.walls.walls) {
        walls.push_back(ordered_json{{"alpha", rational_json(w.value)},
                                     {"beyond_semistability_bound", w.beyond_semistability_bound}});
    }
    ordered_json chambers = ordered_json::array();
    for (const auto& c : d.walls.chambers) chambers.push_back(chamber_json(c));
    out["walls"] = ordered_json{{"cap", cap_json(d.walls.cap)}, {"values", std::move(walls)}, {"chambers", std::move(chambers)}};

    ordered_json flips = ordered_json::array();
    for (const auto& a : d.wall_analyses) {
        ordered_json j = flip_json(a.flip);
        j["rank_two_candidate"] = a.rank_two_candidate ? ordered_json(*a.rank_two_candidate) : ordered_json(nullptr);
        flips.push_back(std::move(j));
    }
    out["flips"] = std::move(flips);
    out["terminal"] = to_json(d.terminal);
    ordered_json cv = ordered_json::array();
    for (const auto& c : d.chambers) {
        cv.push_back(ordered_json{{"chamber", chamber_json(c.chamber)}, {"verdict", to_json(c.verdict)}});
    }
    out["chambers"] = std::move(cv);
    out["brill_noether"] = bn_json(d.brill_noether, d.genus >= 2 || d.type.n == 1);
    ordered_json cl = ordered_json::array();
    for (const auto& c : d.clifford) {
        cl.push_back(ordered_json{{"chamber", c.chamber},
                                  {"alpha", rational_json(c.alpha)},
                                  {"bound", rational_json(c.bound.value)},
                                  {"regime", c.bound.regime_label()}});
    }
    out["clifford"] = std::move(cl);
    out["cited"] = d.cited;
    return out;
}

std::string render_json(const Dossier& d) { return to_json(d).dump(2) + "\n"; }

namespace {

std::string interval_text(const Chamber& c) {
    return "(" + c.lower.to_string() + ", " + (c.upper ? c.upper->to_string() : std::string("inf")) + ")";
}

std::string cite(const std::string& provenance) {
    return provenance.empty() || provenance == "none" ? std::string() : " [" + provenance + "]";
}

void verdict_lines(std::ostringstream& os, const ModuliVerdict& v, const std::string& indent) {
    os << indent << "nonempty=" << v.nonempty.to_string() << " irreducible=" << v.irreducible.to_string()
       << " smooth=" << v.smooth.to_string() << " dim=" << (v.dimension ? v.dimension->str() : std::string("-"))
       << " expected=" << v.expected_dimension.str() << cite(v.provenance) << "\n";
    if (v.structure) os << indent << "structure: " << v.structure->to_string() << "\n";
    for (const auto& n : v.notes) os << indent << "note: " << n << "\n";
    if (v.semistable_variant) {
        os << indent << "semistable moduli:\n";
        verdict_lines(os, *v.semistable_variant, indent + "  ");
    }
}

}  // namespace

std::string render_text(const Dossier& d) {
    std::ostringstream os;
    const SystemType& t = d.type;
    os << "coherent systems dossier (" << kDossierSchema << ")\n";
    os << "input: g=" << d.genus << " n=" << t.n << " d=" << t.d << " k=" << t.k
       << " petri=" << (d.petri ? "yes" : "no") << "\n";
    os << "beta" << t.to_string() << " = " << d.beta.str() << "\n";

    os << "\nalpha range\n";
    if (const auto* b = std::get_if<BoundedCap>(&d.walls.cap)) {
        os << "  empty above d/(n-k) = " << b->limit.to_string() << "\n";
    } else if (const auto* s = std::get_if<StabilizedCap>(&d.walls.cap)) {
        os << "  stable above d(n-1) = " << s->semistability_bound.to_string()
           << "; walls enumerated up to " << s->enumeration_bound.to_string() << "\n";
    } else {
        os << "  independent of alpha\n";
    }
    os << "  semistable possible: " << (d.admissibility.semistable_possible ? "yes" : "no")
       << ", stable possible: " << (d.admissibility.stable_possible ? "yes" : "no") << "\n";
    if (d.admissibility.exception_case) os << "  exception case (1,0,1): stable with d = 0\n";

    os << "\nwalls (virtual critical values): ";
    if (d.walls.walls.empty()) os << "none";
    for (std::size_t i = 0; i < d.walls.walls.size(); ++i) {
        os << (i ? ", " : "") << d.walls.walls[i].value.to_string();
        if (d.walls.walls[i].beyond_semistability_bound) os << "*";
    }
    os << "\n";
    if (std::any_of(d.walls.walls.begin(), d.walls.walls.end(),
                    [](const Wall& w) { return w.beyond_semistability_bound; })) {
        os << "  * beyond the semistability bound d(n-1)\n";
    }

    os << "\nflips\n";
    if (d.wall_analyses.empty()) os << "  none\n";
    for (const auto& a : d.wall_analyses) {
        const FlipReport& f = a.flip;
        os << "  alpha=" << f.alpha.to_string() << ": " << f.verdict.to_string();
        os << "; codim+ >= " << (f.codim_plus_lb ? f.codim_plus_lb->str() : std::string("-"));
        os << ", codim- >= " << (f.codim_minus_lb ? f.codim_minus_lb->str() : std::string("-"));
        if (a.rank_two_candidate) {
            os << "; line-bundle flip candidate: " << (*a.rank_two_candidate ? "yes" : "no");
        }
        os << "\n";
        for (const auto& dec : f.decompositions) {
            os << "    " << (dec.side == Side::plus ? "+ " : "- ") << dec.t1.to_string() << " + "
               << dec.t2.to_string();
            if (dec.counts) os << "  C12=" << dec.counts->c12.str() << " C21=" << dec.counts->c21.str();
            os << "\n";
        }
        for (const auto& c : f.caveats) os << "    caveat: " << c << "\n";
    }

    os << "\nterminal moduli G_L\n";
    verdict_lines(os, d.terminal, "  ");

    os << "\nchambers\n";
    if (d.chambers.empty()) os << "  none (admissible alpha-range is empty)\n";
    for (const auto& c : d.chambers) {
        os << "  G_" << c.chamber.index << " on " << interval_text(c.chamber) << "\n";
        verdict_lines(os, c.verdict, "    ");
    }

    const BNVerdict& bn = d.brill_noether;
    os << "\nBrill-Noether locus B" << t.to_string() << "\n";
    const char* equals_m = d.genus < 2 && t.n > 1 ? "-" : (bn.equals_full_moduli ? "yes" : "no");
    os << "  nonempty=" << bn.nonempty.to_string() << " equals_M=" << equals_m
       << " irreducible=" << bn.irreducible.to_string()
       << " dim=" << (bn.dimension ? bn.dimension->str() : std::string("-")) << cite(bn.provenance) << "\n";
    if (!bn.smooth_locus_note.empty()) os << "  " << bn.smooth_locus_note << "\n";
    if (bn.structure) os << "  structure: " << bn.structure->to_string() << "\n";
    for (const auto& n : bn.notes) os << "  note: " << n << "\n";
    if (bn.picard) os << "  picard: " << bn.picard->text << cite(bn.picard->provenance) << "\n";
    if (bn.desingularization) {
        const auto& ds = *bn.desingularization;
        os << "  desingularisation: " << ds.conclusion_text() << "\n";
        os << "    beta <= n^2(g-1): " << (ds.beta_at_most_bundle_dim ? "yes" : "no")
           << ", G_0 irreducible: " << ds.g0_irreducible.to_string()
           << ", B nonempty: " << ds.b_nonempty.to_string() << ", G_0 smooth: " << ds.g0_smooth.to_string()
           << ", gcd(n,d,k)=1: " << (ds.gcd_ndk_one ? "yes" : "no")
           << ", gcd(n,d)=1: " << (ds.gcd_nd_one ? "yes" : "no") << "\n";
        for (const auto& n : ds.notes) os << "    note: " << n << "\n";
    }

    os << "\nclifford bounds h0 <= d/2 + n + (n-1)k*alpha\n";
    for (const auto& c : d.clifford) {
        os << "  G_" << c.chamber << " at alpha=" << c.alpha.to_string() << ": " << c.bound.value.to_string()
           << " (" << c.bound.regime_label() << ")\n";
    }

    os << "\ncited results:";
    for (const auto& c : d.cited) os << " " << c;
    os << "\n";
    return os.str();
}

}  // namespace cohsys
