#include "cofix/theorems.hpp"

#include <algorithm>

#include "cofix/solver.hpp"

namespace cofix {

const char* to_string(Preset p) {
    switch (p) {
        case Preset::T33: return "t33";
        case Preset::T35: return "t35";
        case Preset::C51: return "c51";
        case Preset::RR: return "rr";
        case Preset::NRL: return "nrl";
    }
    return "?";
}

Preset preset_from_string(const std::string& s) {
    if (s == "t33") return Preset::T33;
    if (s == "t35") return Preset::T35;
    if (s == "c51") return Preset::C51;
    if (s == "rr") return Preset::RR;
    if (s == "nrl") return Preset::NRL;
    throw Error(Errc::ParseError, "unknown theorem preset: " + s);
}

namespace {

bool single_map_preset(Preset p) { return p == Preset::C51 || p == Preset::RR || p == Preset::NRL; }

std::string pair_witness(const FiniteSpace& space, const std::optional<std::pair<int, int>>& p) {
    if (!p) return "";
    return "(" + space.label(p->first) + "," + space.label(p->second) + ")";
}

void add_contraction_entry(HypothesisReport& rep, const FiniteSpace& space,
                           const FinitePair& pair) {
    AlphaEstimate est = estimate_alpha(space, pair);
    PredicateResult fib = fiber_constancy(space, pair);
    if (!fib.passed()) {
        rep.add("contraction", Verdict::Fails, pair_witness(space, fib.pair),
                "equal g-values with distinct f-values admit no alpha");
        return;
    }
    if (est.vacuous) {
        rep.add("contraction", Verdict::Vacuous, "alpha=0",
                "no pair with comparable distinct g-values");
        return;
    }
    if (!est.holds) {
        rep.add("contraction", Verdict::Fails, pair_witness(space, est.argmax),
                "ratio " + rat_str(est.alpha) + " >= 1");
        return;
    }
    rep.add("contraction", Verdict::Holds, "alpha=" + rat_str(est.alpha),
            "exact maximum over comparable distinct g-pairs");
}

void add_start_entry(HypothesisReport& rep, const FiniteSpace& space, const FinitePair& pair) {
    auto x0 = find_start(space, pair);
    if (x0)
        rep.add("start_exists", Verdict::Holds, space.label(*x0));
    else
        rep.add("start_exists", Verdict::Fails, "", "no x with g(x) comparable to f(x)");
}

void add_identity_gate(HypothesisReport& rep, const FiniteSpace& space, const FinitePair& pair) {
    for (int i = 0; i < space.size(); ++i)
        if (pair.gx(i) != i) {
            rep.add("g_is_identity", Verdict::Fails, space.label(i),
                    "single-map preset requires g = identity");
            return;
        }
    rep.add("g_is_identity", Verdict::Holds);
}

}  // namespace

HypothesisReport check_hypotheses(const FiniteInstance& inst, Preset preset) {
    const FiniteSpace& space = inst.space;
    const FinitePair& pair = inst.pair;
    HypothesisReport rep;

    if (single_map_preset(preset)) add_identity_gate(rep, space, pair);

    switch (preset) {
        case Preset::T33: {
            rep.add("space_complete", Verdict::Holds, "", "finite metric spaces are complete");
            auto ri = range_inclusion(space, pair);
            rep.add("range_inclusion", ri.verdict,
                    ri.witness ? space.label(*ri.witness) : "", ri.note);
            auto gc = is_g_comparable(space, pair);
            rep.add("g_comparable", gc.verdict, pair_witness(space, gc.pair), gc.note);
            auto comm = commutation_suite(space, pair);
            rep.add("compatible", comm.compatible.verdict,
                    pair_witness(space, comm.compatible.pair), comm.compatible.note);
            auto cont = continuity_suite(space, pair);
            rep.add("g_continuous", cont.g_continuous.verdict, "", cont.g_continuous.note);
            rep.add("f_continuous_or_g_tcc", Verdict::Holds, "",
                    "f continuous on a discrete space");
            add_start_entry(rep, space, pair);
            add_contraction_entry(rep, space, pair);
            break;
        }
        case Preset::T35: {
            std::vector<int> y = inst.Y ? *inst.Y : inst.g_image();
            auto ri = range_inclusion(space, pair, std::span<const int>(y));
            rep.add("sandwich", ri.verdict, ri.witness ? space.label(*ri.witness) : "",
                    inst.Y ? ri.note : "Y defaulted to g(X)");
            auto gc = is_g_comparable(space, pair);
            rep.add("g_comparable", gc.verdict, pair_witness(space, gc.pair), gc.note);
            bool f_onto = static_cast<int>(inst.f_image().size()) == space.size();
            bool g_onto = static_cast<int>(inst.g_image().size()) == space.size();
            std::string routes = "finite subspaces are complete";
            if (f_onto || g_onto)
                routes += std::string("; also via complete X with ") + (f_onto ? "f" : "g") +
                          " onto";
            routes += "; also via complete X with Y closed";
            rep.add("y_complete", Verdict::Holds, "", routes);
            rep.add("continuity_alternative", Verdict::Holds, "",
                    "f and g continuous on a discrete space");
            add_start_entry(rep, space, pair);
            add_contraction_entry(rep, space, pair);
            break;
        }
        case Preset::C51: {
            rep.add("space_complete", Verdict::Holds, "", "finite metric spaces are complete");
            auto cm = is_comparable_map(space, pair.f);
            rep.add("comparable_map", cm.verdict, pair_witness(space, cm.pair), cm.note);
            rep.add("f_continuous_or_tcc", Verdict::Holds, "",
                    "f continuous on a discrete space");
            add_start_entry(rep, space, pair);
            add_contraction_entry(rep, space, pair);
            break;
        }
        case Preset::RR:
        case Preset::NRL: {
            rep.add("space_complete", Verdict::Holds, "", "finite metric spaces are complete");
            auto mono = is_monotone(space, pair.f);
            rep.add("monotone", mono.verdict(),
                    mono.monotone() ? mono.kind()
                                    : pair_witness(space, mono.inc_break ? mono.inc_break
                                                                         : mono.dec_break),
                    mono.monotone() ? "" : "neither increasing nor decreasing");
            if (preset == Preset::RR)
                rep.add("f_continuous", Verdict::Holds, "", "discrete space");
            else
                rep.add("f_continuous_or_tcc", Verdict::Holds, "", "discrete space");
            add_start_entry(rep, space, pair);
            add_contraction_entry(rep, space, pair);
            SpaceConditions sc = space_conditions(space);
            if (preset == Preset::RR)
                rep.add("pair_lower_and_upper",
                        sc.pair_lower_and_upper ? Verdict::Holds : Verdict::Fails, "",
                        "every pair of elements has a lower and an upper bound");
            else
                rep.add("pair_lower_or_upper",
                        sc.pair_lower_or_upper ? Verdict::Holds : Verdict::Fails, "",
                        "every pair of elements has a lower or an upper bound");
            break;
        }
    }
    return rep;
}

namespace {

Verdict declared_verdict(std::optional<bool> flag) {
    if (!flag) return Verdict::Fails;
    return *flag ? Verdict::Asserted : Verdict::Fails;
}

std::string declared_note(std::optional<bool> flag) {
    return flag ? "declared" : "not declared";
}

void add_interval_contraction(HypothesisReport& rep, const IntervalInstance& inst) {
    const auto& d = inst.pair.declared;
    double sampled = sampled_alpha(inst.space, inst.pair, inst.grid_n);
    auto spot = spot_check_declared(inst.space, inst.pair, inst.grid_n);
    if (!spot.passed()) {
        rep.add("contraction", Verdict::Fails, "", spot.note);
        return;
    }
    if (d.alpha) {
        if (*d.alpha < 0 || *d.alpha >= 1) {
            rep.add("contraction", Verdict::Fails, "alpha=" + rat_str(*d.alpha),
                    "declared alpha outside [0,1)");
            return;
        }
        rep.add("contraction", Verdict::Asserted, "alpha=" + rat_str(*d.alpha),
                "declared; sampled estimate " + std::to_string(sampled));
        return;
    }
    if (sampled < 1.0)
        rep.add("contraction", Verdict::Asserted, "alpha~" + std::to_string(sampled),
                "sampled estimate only (grid " + std::to_string(inst.grid_n) + ")");
    else
        rep.add("contraction", Verdict::Fails, "alpha~" + std::to_string(sampled),
                "sampled ratio reaches 1");
}

}  // namespace

HypothesisReport check_hypotheses(const IntervalInstance& inst, Preset preset) {
    HypothesisReport rep;
    const auto& d = inst.pair.declared;
    const bool g_identity = inst.pair.g.kind() == BuiltinFn::Kind::Identity;

    if (single_map_preset(preset))
        rep.add("g_is_identity", g_identity ? Verdict::Holds : Verdict::Fails, "",
                g_identity ? "" : "single-map preset requires g = identity");

    auto add_range = [&](const char* id, bool sandwich) {
        auto [flo, fhi] = inst.pair.f.image(inst.space.lo(), inst.space.hi());
        auto [glo, ghi] = inst.pair.g.image(inst.space.lo(), inst.space.hi());
        bool ok = glo <= flo && fhi <= ghi;
        rep.add(id, ok ? Verdict::Holds : Verdict::Fails,
                "f(X)=[" + rat_str(flo) + "," + rat_str(fhi) + "]",
                std::string(sandwich ? "Y taken as g(X)=" : "g(X)=") + "[" + rat_str(glo) +
                    "," + rat_str(ghi) + "], exact interval image");
    };

    switch (preset) {
        case Preset::T33: {
            rep.add("space_complete", Verdict::Holds, "", "closed interval of the real line");
            add_range("range_inclusion", false);
            rep.add("g_comparable", Verdict::Holds, "", "total order: all pairs comparable");
            bool comm = builtins_commute(inst.pair.f, inst.pair.g);
            rep.add("compatible", comm ? Verdict::Holds : Verdict::Fails, "",
                    comm ? "built-in pair commutes"
                         : "compatibility undecided for non-commuting built-ins");
            rep.add("g_continuous", declared_verdict(d.g_continuous), "",
                    declared_note(d.g_continuous));
            if (d.f_continuous && *d.f_continuous)
                rep.add("f_continuous_or_g_tcc", Verdict::Asserted, "", "f continuous declared");
            else if (d.g_tcc && *d.g_tcc)
                rep.add("f_continuous_or_g_tcc", Verdict::Asserted, "", "g-TCC declared");
            else
                rep.add("f_continuous_or_g_tcc", Verdict::Fails, "", "neither branch declared");
            rep.add("start_exists", Verdict::Holds, "", "total order: any x0 works");
            add_interval_contraction(rep, inst);
            break;
        }
        case Preset::T35: {
            add_range("sandwich", true);
            rep.add("g_comparable", Verdict::Holds, "", "total order: all pairs comparable");
            rep.add("y_complete", Verdict::Holds, "",
                    "image of a closed interval under a built-in is closed");
            if (d.f_g_continuous && *d.f_g_continuous)
                rep.add("continuity_alternative", Verdict::Asserted, "",
                        "f g-continuous declared");
            else if (d.f_continuous && *d.f_continuous && d.g_continuous && *d.g_continuous)
                rep.add("continuity_alternative", Verdict::Asserted, "",
                        "f and g continuous declared");
            else if (d.tcc && *d.tcc)
                rep.add("continuity_alternative", Verdict::Asserted, "", "TCC declared");
            else
                rep.add("continuity_alternative", Verdict::Fails, "", "no branch declared");
            rep.add("start_exists", Verdict::Holds, "", "total order: any x0 works");
            add_interval_contraction(rep, inst);
            break;
        }
        case Preset::C51: {
            rep.add("space_complete", Verdict::Holds, "", "closed interval of the real line");
            rep.add("comparable_map", Verdict::Holds, "",
                    "total order: every self-map preserves comparability");
            if (d.f_continuous && *d.f_continuous)
                rep.add("f_continuous_or_tcc", Verdict::Asserted, "", "f continuous declared");
            else if (d.tcc && *d.tcc)
                rep.add("f_continuous_or_tcc", Verdict::Asserted, "", "TCC declared");
            else
                rep.add("f_continuous_or_tcc", Verdict::Fails, "", "neither branch declared");
            rep.add("start_exists", Verdict::Holds, "", "total order: any x0 works");
            add_interval_contraction(rep, inst);
            break;
        }
        case Preset::RR:
        case Preset::NRL: {
            rep.add("space_complete", Verdict::Holds, "", "closed interval of the real line");
            auto mono = inst.pair.f.monotone_on(inst.space.lo(), inst.space.hi());
            rep.add("monotone", mono.verdict(), mono.monotone() ? mono.kind() : "",
                    mono.monotone() ? "analytic" : "neither increasing nor decreasing");
            if (preset == Preset::RR)
                rep.add("f_continuous", declared_verdict(d.f_continuous), "",
                        declared_note(d.f_continuous));
            else if (d.f_continuous && *d.f_continuous)
                rep.add("f_continuous_or_tcc", Verdict::Asserted, "", "f continuous declared");
            else if (d.tcc && *d.tcc)
                rep.add("f_continuous_or_tcc", Verdict::Asserted, "", "TCC declared");
            else
                rep.add("f_continuous_or_tcc", Verdict::Fails, "", "neither branch declared");
            rep.add("start_exists", Verdict::Holds, "", "total order: any x0 works");
            add_interval_contraction(rep, inst);
            rep.add(preset == Preset::RR ? "pair_lower_and_upper" : "pair_lower_or_upper",
                    Verdict::Holds, "", "total order: min and max of the pair");
            break;
        }
    }
    return rep;
}

SpaceConditions space_conditions(const FiniteSpace& space) {
    const int n = space.size();
    SpaceConditions sc;
    sc.totally_ordered = true;
    sc.pair_lower_and_upper = true;
    sc.pair_lower_or_upper = true;
    sc.directed = true;

    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            if (!space.comparable(x, y)) sc.totally_ordered = false;
            bool lower = false, upper = false, common = false;
            for (int z = 0; z < n; ++z) {
                if (space.leq(z, x) && space.leq(z, y)) lower = true;
                if (space.leq(x, z) && space.leq(y, z)) upper = true;
                if (space.comparable(x, z) && space.comparable(y, z)) common = true;
            }
            if (!(lower && upper)) sc.pair_lower_and_upper = false;
            if (!(lower || upper)) sc.pair_lower_or_upper = false;
            if (!common) sc.directed = false;
        }

    // Connectivity of the comparability graph.
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (!seen[static_cast<std::size_t>(v)] && space.comparable(u, v)) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
    }
    sc.chain_connected = std::all_of(seen.begin(), seen.end(), [](std::uint8_t b) { return b; });
    return sc;
}

}  // namespace cofix
