#include "cohsys/moduli_verdicts.hpp"

#include <numeric>

#include "cohsys/invariants.hpp"

namespace cohsys {

std::string Fibre::to_string() const {
    switch (kind) {
        case Kind::grassmannian: return "Gr(" + a.str() + "," + b.str() + ")";
        case Kind::projective_space: return "P^" + a.str();
        case Kind::symmetric_power: return "S^" + a.str() + " X";
        case Kind::single_point: return "point";
    }
    return "?";
}

std::string Base::to_string() const {
    if (kind == Kind::curve) return "X";
    return "M(" + std::to_string(rank) + "," + std::to_string(degree) + ")";
}

std::string Structure::to_string() const {
    const std::string rel = relation == Relation::isomorphism ? "isomorphic to " : "birational to ";
    if (!base) {
        return fibre.kind == Fibre::Kind::single_point ? "a single point" : rel + fibre.to_string();
    }
    if (fibre.kind == Fibre::Kind::single_point) {
        return rel + base->to_string();
    }
    return rel + "a fibration over " + base->to_string() + " with fibre " + fibre.to_string();
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

ModuliVerdict empty_verdict(const Integer& beta, std::string provenance, std::string note = {}) {
    ModuliVerdict v;
    v.nonempty = TriState::no();
    v.irreducible = TriState::no();
    v.smooth = TriState::no();
    v.expected_dimension = beta;
    v.provenance = std::move(provenance);
    if (!note.empty()) v.notes.push_back(std::move(note));
    return v;
}

ModuliVerdict unknown_verdict(const Integer& beta, std::string provenance, std::string note = {}) {
    ModuliVerdict v;
    v.expected_dimension = beta;
    v.provenance = std::move(provenance);
    if (!note.empty()) v.notes.push_back(std::move(note));
    return v;
}

// Smooth, irreducible, of dimension beta.
ModuliVerdict good_verdict(const Integer& beta, std::string provenance) {
    ModuliVerdict v;
    v.nonempty = TriState::yes();
    v.irreducible = TriState::yes();
    v.smooth = TriState::yes();
    v.dimension = beta;
    v.expected_dimension = beta;
    v.provenance = std::move(provenance);
    return v;
}

ModuliVerdict with_petri(ModuliVerdict v, bool petri) {
    v.nonempty = v.nonempty.require_petri(petri);
    v.irreducible = v.irreducible.require_petri(petri);
    v.smooth = v.smooth.require_petri(petri);
    if (!petri) v.notes.push_back("holds for a Petri curve; Petri not assumed");
    return v;
}

// k = 0: coherent systems are stable bundles for every alpha.
ModuliVerdict bundle_verdict(const CurveContext& ctx, const SystemType& t) {
    const std::int64_t g = ctx.genus();
    const Integer beta = brill_noether_number(g, t);
    const std::string prov = "stable-bundles(k=0)";
    if (g >= 2) {
        auto v = good_verdict(beta, prov);
        v.structure = Structure{Base{Base::Kind::bundle_moduli, t.n, t.d}, Fibre::point(), Relation::isomorphism};
        return v;
    }
    if (g == 1) {
        if (gcd64(t.n, t.d) != 1) {
            return empty_verdict(beta, prov, "genus 1: M(n,d) is empty unless (n,d)=1");
        }
        auto v = good_verdict(beta, prov);
        v.structure = Structure{Base{Base::Kind::curve, 0, 0}, Fibre::point(), Relation::isomorphism};
        return v;
    }
    return empty_verdict(beta, prov, "genus 0: no stable bundles of rank >= 2");
}

ModuliVerdict terminal_k_less_n(const CurveContext& ctx, const SystemType& t, const Integer& beta) {
    const std::int64_t g = ctx.genus();
    const std::int64_t n = t.n, d = t.d, k = t.k;
    if (d <= 0) {
        return empty_verdict(beta, "alpha-range(k<n)", "stable systems with k<n need d>0");
    }
    if (g >= 2) {
        const Integer fibre_dim = Integer(d) + Integer(n - k) * (g - 1);
        const std::string prov = "terminal-moduli(k<n)";
        if (Integer(k) > fibre_dim) {
            return empty_verdict(beta, prov, "non-empty iff k <= d+(n-k)(g-1)");
        }
        auto v = good_verdict(beta, prov);
        const bool coprime = gcd64(n - k, d) == 1;
        v.structure = Structure{Base{Base::Kind::bundle_moduli, n - k, d}, Fibre::grassmannian(k, fibre_dim),
                                coprime ? Relation::isomorphism : Relation::birational};
        v.notes.push_back(coprime ? "(n-k,d)=1: the birational equivalence is an isomorphism"
                                  : "birational; isomorphism if (n-k,d)=1");
        return v;
    }
    if (g == 0) {
        const std::string prov = "terminal-moduli(g=0)";
        if (k == n - 1) {
            if (d < n) return empty_verdict(beta, prov, "genus 0, k=n-1: non-empty iff d >= n");
            auto v = good_verdict(beta, prov);
            v.structure = Structure{std::nullopt, Fibre::grassmannian(n - 1, d - 1), Relation::isomorphism};
            return v;
        }
        if (d % (n - k) != 0) {
            return empty_verdict(beta, prov, "genus 0, k<=n-2: empty when n-k does not divide d");
        }
        if (d < n) {
            return empty_verdict(beta, prov, "genus 0, k<=n-2, (n-k)|d: empty when d<n");
        }
        return unknown_verdict(beta, prov, "genus 0, k<=n-2, (n-k)|d, d>=n: a more detailed analysis is required");
    }
    // g == 1
    const std::string prov = "terminal-moduli(g=1)";
    if (gcd64(n - k, d) != 1) {
        return unknown_verdict(beta, prov, "genus 1, (n-k,d)!=1: a more detailed analysis is required");
    }
    if (d < k) return empty_verdict(beta, prov, "genus 1, (n-k,d)=1: non-empty iff d >= k");
    auto v = good_verdict(beta, prov);
    v.structure = Structure{Base{Base::Kind::curve, 0, 0}, Fibre::grassmannian(k, d), Relation::isomorphism};
    return v;
}

ModuliVerdict terminal_k_equals_n(const SystemType& t, const Integer& beta) {
    const std::int64_t n = t.n, d = t.d;
    const std::string prov = "terminal-moduli(k=n)";
    if (d < 0) return empty_verdict(beta, prov, "k>=n needs d>=0");
    if (d > n) {
        auto v = good_verdict(beta, prov);
        auto ss = good_verdict(beta, prov);
        ss.smooth = TriState::unknown();
        ss.notes.push_back("semistable moduli irreducible");
        v.semistable_variant = std::make_shared<const ModuliVerdict>(std::move(ss));
        return v;
    }
    auto v = empty_verdict(beta, prov);
    if (d == 0) {
        ModuliVerdict ss;
        ss.nonempty = TriState::yes();
        ss.irreducible = TriState::yes();
        ss.smooth = TriState::yes();
        ss.dimension = Integer(0);
        ss.expected_dimension = beta;
        ss.structure = Structure{std::nullopt, Fibre::point(), Relation::isomorphism};
        ss.provenance = prov;
        ss.notes.push_back("the only semistable system is (O^n, C^n)");
        v.semistable_variant = std::make_shared<const ModuliVerdict>(std::move(ss));
    } else if (d == n) {
        ModuliVerdict ss;
        ss.nonempty = TriState::yes();
        ss.irreducible = TriState::yes();
        ss.dimension = Integer(n);
        ss.expected_dimension = beta;
        ss.structure = Structure{std::nullopt, Fibre::symmetric_power(n), Relation::isomorphism};
        ss.provenance = prov;
        ss.notes.push_back("not of the expected dimension");
        ss.notes.push_back("independent of alpha");
        v.semistable_variant = std::make_shared<const ModuliVerdict>(std::move(ss));
    } else {
        v.notes.push_back("0<d<n: no alpha-semistable systems");
        v.semistable_variant = std::make_shared<const ModuliVerdict>(empty_verdict(beta, prov));
    }
    return v;
}

ModuliVerdict terminal_dual_span(const CurveContext& ctx, const SystemType& t, const Integer& beta) {
    const std::string prov = "dual-span(k=n+1)";
    if (beta < 0) {
        return with_petri(empty_verdict(beta, prov, "non-empty iff beta >= 0"), ctx.petri());
    }
    ModuliVerdict v;
    v.nonempty = TriState::yes();
    v.irreducible = beta > 0 ? TriState::yes() : TriState::unknown();
    v.smooth = TriState::unknown();
    v.dimension = beta;
    v.expected_dimension = beta;
    v.provenance = prov;
    v.notes.push_back("dual type " + dual_type(t).to_string() + " has the same beta");
    return with_petri(std::move(v), ctx.petri());
}

}  // namespace

ModuliVerdict rank1_moduli(const CurveContext& ctx, std::int64_t d, std::int64_t k) {
    const std::int64_t g = ctx.genus();
    const SystemType t{1, d, k};
    const Integer beta = brill_noether_number(g, t);
    if (k == 0) {
        auto v = good_verdict(beta, "rank-one");
        v.notes.push_back("the Jacobian of degree " + std::to_string(d) + " line bundles");
        return v;
    }
    const std::string prov = "rank-one-petri";
    ModuliVerdict v = beta < 0 ? empty_verdict(beta, prov, "non-empty iff beta >= 0") : good_verdict(beta, prov);
    if (beta == 0) v.irreducible = TriState::unknown();
    v = with_petri(std::move(v), ctx.petri());
    v.notes.push_back("stability is vacuous in rank one; independent of alpha");
    if (d == 0 && k == 1) {
        // Only the trivial bundle, on any curve.
        v.nonempty = TriState::yes();
        v.irreducible = TriState::yes();
        v.smooth = TriState::yes();
        v.structure = Structure{std::nullopt, Fibre::point(), Relation::isomorphism};
        v.notes.push_back("exception case (1,0,1): stable with d = 0");
    }
    return v;
}

ModuliVerdict classify_terminal(const CurveContext& ctx, const SystemType& t) {
    if (t.n == 1) return rank1_moduli(ctx, t.d, t.k);
    if (t.k == 0) return bundle_verdict(ctx, t);
    const Integer beta = brill_noether_number(ctx.genus(), t);
    if (t.k < t.n) return terminal_k_less_n(ctx, t, beta);
    if (t.k == t.n) return terminal_k_equals_n(t, beta);
    if (t.d <= 0) {
        return empty_verdict(beta, "degree-bound(k>=n)", "k>=n needs d>0 for stable systems");
    }
    if (t.k == t.n + 1) return terminal_dual_span(ctx, t, beta);
    auto v = unknown_verdict(beta, "open(k>n+1)", "no classification for k > n+1");
    v.notes.push_back("dual type " + dual_type(t).to_string() +
                      " has the same beta; large-alpha moduli are related by the dual span");
    return v;
}

namespace {

// Verdict shared by every chamber when a classification result applies.
std::optional<ModuliVerdict> chamber_theorem(const CurveContext& ctx, const SystemType& t) {
    const std::int64_t g = ctx.genus();
    const std::int64_t n = t.n, d = t.d, k = t.k;
    if (g < 2 || n < 2) return std::nullopt;
    const Integer beta = brill_noether_number(g, t);

    if (k == 1) {
        std::string prov = "classification(k=1)";
        if (d <= 0) return empty_verdict(beta, prov);
        auto v = good_verdict(beta, prov);
        v.notes.push_back("all chambers birationally equivalent");
        return v;
    }
    if (k == 2) {
        const std::string prov = "classification(k=2)";
        const bool nonempty = n == 2 ? d > 2 : d > 0;
        ModuliVerdict v = nonempty ? good_verdict(beta, prov) : empty_verdict(beta, prov);
        if (nonempty) v.smooth = TriState::unknown();
        if (n == 2 && d == 2) {
            v.notes.push_back("no flips; semistable terminal moduli irreducible of dimension 2");
        }
        return with_petri(std::move(v), ctx.petri());
    }
    if (k == 3) {
        const std::string prov = n == 2 ? "classification(n=2)" : "classification(k=3)";
        bool nonempty = false;
        if (n == 2) {
            nonempty = 3 * d >= 2 * g + 6;
        } else if (n == 3) {
            nonempty = d > 3;
        } else {
            nonempty = d > 0 && d >= n - (n - 3) * g;
        }
        ModuliVerdict v = nonempty ? good_verdict(beta, prov) : empty_verdict(beta, prov);
        if (nonempty) {
            v.smooth = TriState::unknown();
            if (n == 2 && beta == 0) v.irreducible = TriState::unknown();
        }
        return with_petri(std::move(v), ctx.petri());
    }
    return std::nullopt;
}

}  // namespace

namespace {

bool definite(const TriState& s) { return s.is_yes() || s.is_no(); }

// The last chamber is G_L itself, so definite facts about G_L carry over.
void refine_with_terminal(ModuliVerdict& v, const ModuliVerdict& terminal) {
    bool used = false;
    for (auto [mine, theirs] : {std::pair{&v.nonempty, &terminal.nonempty}, std::pair{&v.irreducible, &terminal.irreducible},
                                std::pair{&v.smooth, &terminal.smooth}}) {
        if (!definite(*mine) && definite(*theirs)) {
            *mine = *theirs;
            used = true;
        }
    }
    if (!v.dimension && terminal.dimension && v.nonempty.is_yes()) {
        v.dimension = terminal.dimension;
        used = true;
    }
    if (!v.structure && terminal.structure) {
        v.structure = terminal.structure;
        used = true;
    }
    if (used) v.notes.push_back("terminal chamber: refined by [" + terminal.provenance + "]");
    v.semistable_variant = terminal.semistable_variant;
}

}  // namespace

std::vector<ChamberVerdict> classify_all_chambers(const CurveContext& ctx, const SystemType& t) {
    const WallStructure ws = enumerate_walls(t);
    const ModuliVerdict terminal = classify_terminal(ctx, t);
    const std::optional<ModuliVerdict> shared = chamber_theorem(ctx, t);
    const Integer beta = brill_noether_number(ctx.genus(), t);
    const bool alpha_free = t.n == 1 || t.k == 0;

    std::vector<ChamberVerdict> out;
    out.reserve(ws.chambers.size());
    for (const auto& chamber : ws.chambers) {
        const bool is_terminal = chamber.index + 1 == ws.chambers.size();
        ModuliVerdict v;
        if (alpha_free) {
            v = terminal;
        } else if (shared) {
            v = *shared;
            if (is_terminal) refine_with_terminal(v, terminal);
        } else if (is_terminal) {
            v = terminal;
        } else if (t.n == 2 && t.k == 4 && ctx.genus() >= 2) {
            v = unknown_verdict(beta, "classification(n=2)", "chambers mutually birational");
            if (!ctx.petri()) v.notes.push_back("holds for a Petri curve; Petri not assumed");
        } else {
            v = unknown_verdict(beta, "none", "no classification result covers this chamber");
        }
        out.push_back({chamber, std::move(v)});
    }
    return out;
}

}  // namespace cohsys
