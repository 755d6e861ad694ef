#include "cofix/commands.hpp"

#include <sstream>

#include "cofix/demos.hpp"
#include "cofix/io.hpp"
#include "cofix/oracle.hpp"
#include "cofix/uniqueness.hpp"

namespace cofix {

namespace {

using nlohmann::json;

Report error_report(const std::string& command, const Error& e) {
    Report rep;
    rep.exit_code = exit_code_for(e);
    rep.machine["command"] = command;
    rep.machine["error"] = {{"code", to_string(e.code())}, {"detail", e.what()}};
    if (!e.witness().empty()) rep.machine["error"]["witness"] = e.witness();
    rep.machine["exit_code"] = rep.exit_code;
    rep.text = command + ": " + e.what() + "\n";
    return rep;
}

int parse_finite_x0(const FiniteInstance& inst, const std::string& s) {
    for (int i = 0; i < inst.space.size(); ++i)
        if (inst.space.label(i) == s) return i;
    try {
        std::size_t pos = 0;
        int idx = std::stoi(s, &pos);
        if (pos == s.size() && idx >= 0 && idx < inst.space.size()) return idx;
    } catch (...) {
    }
    throw Error(Errc::UnknownElement, "x0=" + s + " is neither a label nor a valid index");
}

SolverConfig config_from_flags(const SolveFlags& flags) {
    SolverConfig config;
    config.preset = preset_from_string(flags.theorem == "t35" ? "t35" : flags.theorem);
    if (flags.max_iter) config.max_iter = *flags.max_iter;
    if (flags.tol) config.tol = *flags.tol;
    config.verify_hypotheses_first = !flags.no_verify;
    return config;
}

void apply_x0(Instance& inst, const std::optional<std::string>& x0) {
    if (!x0) return;
    if (std::holds_alternative<FiniteInstance>(inst)) {
        auto& fi = std::get<FiniteInstance>(inst);
        fi.x0 = parse_finite_x0(fi, *x0);
    } else {
        auto& ii = std::get<IntervalInstance>(inst);
        ii.x0 = parse_rat(*x0);
        if (!ii.space.contains(*ii.x0))
            throw Error(Errc::UnknownElement, "x0=" + *x0 + " outside the interval");
    }
}

/// Shared renderer for any solve outcome (solve, certify, demo).
void render_outcome(Report& rep, const Instance& inst, const SolveOutcome& out) {
    std::ostringstream text;
    rep.machine["preset"] = to_string(out.preset);
    rep.machine["hypotheses"] = hypotheses_to_json(out.report);
    text << "hypotheses (" << to_string(out.preset) << "):\n" << render_hypotheses(out.report);

    const bool have_trace = out.finite_trace || out.interval_trace;
    if (!out.gate_passed) {
        std::string ids;
        for (const auto& id : out.report.failing_ids()) ids += (ids.empty() ? "" : ", ") + id;
        rep.machine["gate"] = "failed";
        rep.machine["failed_hypotheses"] = out.report.failing_ids();
        if (!have_trace) {
            rep.exit_code = kExitHypothesesFailed;
            text << "hypotheses failed: " << ids << "\n";
            rep.text += text.str();
            return;
        }
        text << "hypotheses failed (" << ids << "); gate bypassed, sentinels armed\n";
    } else {
        rep.machine["gate"] = "passed";
    }

    if (out.finite_trace) {
        const auto& space = std::get<FiniteInstance>(inst).space;
        rep.machine["trace"] = trace_to_json(*out.finite_trace, space);
        text << "trace:\n" << render_trace_summary(*out.finite_trace, space);
        if (out.coincidence_point) {
            rep.machine["result"] = {
                {"coincidence_point", space.label(*out.coincidence_point)},
                {"point_of_coincidence", space.label(*out.point_of_coincidence)}};
        } else if (out.finite_trace->status == TraceStatus::HypothesisBroken) {
            rep.exit_code = kExitHypothesesFailed;
            text << "runtime sentinel: " << out.finite_trace->broken_reason << "\n";
        } else {
            rep.exit_code = kExitInternal;
            text << "no coincidence point found despite passing hypotheses\n";
        }
        if (out.oracle) {
            rep.machine["oracle"] = oracle_to_json(*out.oracle, space);
            rep.machine["oracle_cross_check"] = out.oracle_ok ? "ok" : "MISMATCH";
            text << "oracle: coincidence points {";
            for (std::size_t i = 0; i < out.oracle->coincidence_points.size(); ++i)
                text << (i ? "," : "") << space.label(out.oracle->coincidence_points[i]);
            text << "}, cross-check " << (out.oracle_ok ? "ok" : "MISMATCH") << "\n";
            if (!out.oracle_ok) rep.exit_code = kExitInternal;
        }
    }
    if (out.interval_trace) {
        rep.machine["trace"] = trace_to_json(*out.interval_trace);
        text << "trace:\n" << render_trace_summary(*out.interval_trace);
        if (out.fixed_value)
            rep.machine["result"] = {{"fixed_value", *out.fixed_value}};
        else if (out.interval_trace->status != TraceStatus::CoincidenceFound) {
            rep.exit_code = out.interval_trace->status == TraceStatus::HypothesisBroken
                                ? kExitHypothesesFailed
                                : kExitInternal;
            text << "iteration did not converge: " << to_string(out.interval_trace->status)
                 << "\n";
        }
    }
    rep.text += text.str();
}

UniquenessMode mode_from_string(const std::string& mode) {
    if (mode == "poc") return UniquenessMode::PointOfCoincidence;
    if (mode == "coincidence") return UniquenessMode::CoincidencePoint;
    if (mode == "common-fixed") return UniquenessMode::CommonFixedPoint;
    throw Error(Errc::ParseError, "unknown mode: " + mode + " (poc|coincidence|common-fixed)");
}

}  // namespace

Report cmd_validate(const std::string& path, bool from_hasse) {
    Report rep;
    rep.machine["command"] = "validate";
    try {
        Instance inst = load_instance(path, from_hasse);
        rep.machine["instance"] = instance_to_json(inst);
        rep.machine["valid"] = true;
        if (std::holds_alternative<FiniteInstance>(inst)) {
            const auto& fi = std::get<FiniteInstance>(inst);
            SpaceConditions sc = space_conditions(fi.space);
            rep.machine["space"] = {{"n", fi.space.size()},
                                    {"totally_ordered", sc.totally_ordered},
                                    {"chain_connected", sc.chain_connected}};
            rep.text = "valid finite instance: n=" + std::to_string(fi.space.size()) +
                       (sc.totally_ordered ? ", totally ordered" : "") + "\n";
        } else {
            const auto& ii = std::get<IntervalInstance>(inst);
            rep.text = "valid interval instance: [" + rat_str(ii.space.lo()) + "," +
                       rat_str(ii.space.hi()) + "], f=" + ii.pair.f.name() +
                       ", g=" + ii.pair.g.name() + "\n";
        }
    } catch (const Error& e) {
        return error_report("validate", e);
    }
    rep.machine["exit_code"] = rep.exit_code;
    return rep;
}

Report cmd_check(const std::string& path, bool from_hasse) {
    Report rep;
    rep.machine["command"] = "check";
    try {
        Instance inst = load_instance(path, from_hasse);
        std::ostringstream text;
        auto add_list = [&](const char* name, HypothesisReport hr) {
            rep.machine[name] = hypotheses_to_json(hr);
            text << name << ":\n" << render_hypotheses(hr);
        };
        if (std::holds_alternative<FiniteInstance>(inst)) {
            const auto& fi = std::get<FiniteInstance>(inst);
            HypothesisReport t33 = check_hypotheses(fi, Preset::T33);
            HypothesisReport t35 = check_hypotheses(fi, Preset::T35);
            auto u0 = check_u0(fi.space, fi.pair);
            auto comm = commutation_suite(fi.space, fi.pair);
            HypothesisReport t43 = t35;
            t43.add("u0", u0.verdict,
                    u0.failing_pair ? "(" + fi.space.label(u0.failing_pair->first) + "," +
                                          fi.space.label(u0.failing_pair->second) + ")"
                                    : "",
                    "chains between all f-value pairs inside g(X)");
            HypothesisReport t45 = t43;
            t45.add("u2", comm.weakly_compatible.verdict, "", comm.weakly_compatible.note);
            add_list("t33", t33);
            add_list("t35", t35);
            add_list("t43", t43);
            add_list("t45", t45);
        } else {
            const auto& ii = std::get<IntervalInstance>(inst);
            HypothesisReport t33 = check_hypotheses(ii, Preset::T33);
            HypothesisReport t35 = check_hypotheses(ii, Preset::T35);
            HypothesisReport t43 = t35;
            t43.add("u0", Verdict::Holds, "", "total order: 2-chains between any values");
            HypothesisReport t45 = t43;
            bool commute = builtins_commute(ii.pair.f, ii.pair.g);
            t45.add("u2", commute ? Verdict::Holds : Verdict::Fails, "",
                    commute ? "built-in pair commutes" : "built-ins do not commute");
            add_list("t33", t33);
            add_list("t35", t35);
            add_list("t43", t43);
            add_list("t45", t45);
        }
        rep.text = text.str();
    } catch (const Error& e) {
        return error_report("check", e);
    }
    rep.machine["exit_code"] = rep.exit_code;
    return rep;
}

Report cmd_solve(const std::string& path, const SolveFlags& flags) {
    Report rep;
    rep.machine["command"] = "solve";
    try {
        Instance inst = load_instance(path, flags.from_hasse);
        apply_x0(inst, flags.x0);
        SolveOutcome out = solve(inst, config_from_flags(flags));
        render_outcome(rep, inst, out);
    } catch (const Error& e) {
        return error_report("solve", e);
    }
    rep.machine["exit_code"] = rep.exit_code;
    return rep;
}

Report cmd_certify(const std::string& path, const std::string& mode, const SolveFlags& flags) {
    Report rep;
    rep.machine["command"] = "certify";
    try {
        UniquenessMode m = mode_from_string(mode);
        Instance inst = load_instance(path, flags.from_hasse);
        apply_x0(inst, flags.x0);
        SolveOutcome out = solve(inst, config_from_flags(flags));
        render_outcome(rep, inst, out);
        if (rep.exit_code != kExitOk) {
            rep.machine["exit_code"] = rep.exit_code;
            return rep;
        }

        if (std::holds_alternative<FiniteInstance>(inst)) {
            const auto& fi = std::get<FiniteInstance>(inst);
            UniquenessCertificate cert = certify(fi, m, *out.coincidence_point);
            rep.machine["certificate"] = certificate_to_json(cert, &fi.space);
            rep.text += "certificate: " + std::string(to_string(cert.conclusion)) + " at " +
                        fi.space.label(cert.unique_point ? *cert.unique_point
                                                         : cert.unique_value) +
                        " (" + cert.note + ")\n";
        } else {
            const auto& ii = std::get<IntervalInstance>(inst);
            UniquenessCertificate cert = certify(ii, m, *out.fixed_value);
            rep.machine["certificate"] = certificate_to_json(cert, nullptr);
            rep.text += "certificate: " + std::string(to_string(cert.conclusion)) + " at " +
                        std::to_string(*out.fixed_value) + " (" + cert.note + ")\n";
        }
    } catch (const Error& e) {
        return error_report("certify", e);
    }
    rep.machine["exit_code"] = rep.exit_code;
    return rep;
}

Report cmd_oracle(const std::string& path, bool from_hasse) {
    Report rep;
    rep.machine["command"] = "oracle";
    try {
        Instance inst = load_instance(path, from_hasse);
        if (!std::holds_alternative<FiniteInstance>(inst))
            throw Error(Errc::ParseError, "oracle enumeration requires a finite instance");
        const auto& fi = std::get<FiniteInstance>(inst);
        OracleResult oracle = enumerate_coincidences(fi);
        rep.machine["oracle"] = oracle_to_json(oracle, fi.space);
        std::ostringstream text;
        auto line = [&](const char* name, const std::vector<int>& ids) {
            text << name << ": {";
            for (std::size_t i = 0; i < ids.size(); ++i)
                text << (i ? "," : "") << fi.space.label(ids[i]);
            text << "}\n";
        };
        line("coincidence points", oracle.coincidence_points);
        line("points of coincidence", oracle.points_of_coincidence);
        line("common fixed points", oracle.common_fixed_points);
        rep.text = text.str();
    } catch (const Error& e) {
        return error_report("oracle", e);
    }
    rep.machine["exit_code"] = rep.exit_code;
    return rep;
}

Report cmd_fuzz(const FuzzFlags& flags) {
    Report rep;
    rep.machine["command"] = "fuzz";
    try {
        if (flags.necessity) {
            FiniteInstance probe = necessity_fixture_no_g_comparable();
            HypothesisReport hr = check_hypotheses(probe, Preset::T33);
            OracleResult oracle = enumerate_coincidences(probe);
            bool only_gc_fails = true;
            for (const auto& e : hr.entries)
                if (!passes(e.verdict) && e.id != "g_comparable") only_gc_fails = false;
            bool demonstrates = only_gc_fails && !hr.all_pass() &&
                                oracle.coincidence_points.empty();
            rep.machine["necessity_probe"] = {
                {"hypotheses", hypotheses_to_json(hr)},
                {"coincidence_points", oracle.coincidence_points.size()},
                {"demonstrates", demonstrates}};
            rep.text = std::string("necessity probe: g-comparability dropped, every other "
                                   "hypothesis holds, coincidence set empty: ") +
                       (demonstrates ? "confirmed" : "NOT confirmed") + "\n";
            if (!demonstrates) rep.exit_code = kExitInternal;
            rep.machine["exit_code"] = rep.exit_code;
            return rep;
        }

        GeneratorParams base;
        base.n = flags.n;
        base.seed = flags.seed;
        base.edge_density = parse_rat(flags.density);
        TheoremId theorem = theorem_from_string(flags.theorem);
        FalsifyOutcome out = falsify(theorem, flags.trials, base);
        rep.machine["theorem"] = to_string(theorem);
        rep.machine["trials"] = out.trials_run;
        if (out.found()) {
            rep.machine["counterexample_seed"] = *out.counterexample_seed;
            rep.machine["violation"] = out.violation;
            rep.exit_code = kExitInternal;
            rep.text = "counterexample found at seed " +
                       std::to_string(*out.counterexample_seed) + ": " + out.violation + "\n";
        } else {
            rep.text = "no counterexample in " + std::to_string(out.trials_run) + " trials (" +
                       flags.theorem + ")\n";
        }
    } catch (const Error& e) {
        return error_report("fuzz", e);
    } catch (const std::invalid_argument& e) {
        return error_report("fuzz", Error(Errc::ParseError, e.what()));
    }
    rep.machine["exit_code"] = rep.exit_code;
    return rep;
}

Report cmd_demo(const std::string& name, const DemoFlags& flags) {
    Report rep;
    rep.machine["command"] = "demo";
    rep.machine["demo"] = name;
    try {
        DemoSpec spec = make_demo(name);
        rep.text = "demo " + name + ": " + spec.description + "\n";
        apply_x0(spec.instance, flags.x0);
        if (flags.grid && std::holds_alternative<IntervalInstance>(spec.instance))
            std::get<IntervalInstance>(spec.instance).grid_n = *flags.grid;

        SolverConfig config;
        config.preset = spec.preset;
        if (flags.max_iter) config.max_iter = *flags.max_iter;
        if (flags.tol) config.tol = *flags.tol;

        SolveOutcome out = solve(spec.instance, config);
        render_outcome(rep, spec.instance, out);
        if (rep.exit_code != kExitOk) {
            rep.machine["exit_code"] = rep.exit_code;
            return rep;
        }

        if (spec.certify_common_fixed) {
            if (std::holds_alternative<FiniteInstance>(spec.instance)) {
                const auto& fi = std::get<FiniteInstance>(spec.instance);
                UniquenessCertificate cert =
                    certify(fi, UniquenessMode::CommonFixedPoint, *out.coincidence_point);
                rep.machine["certificate"] = certificate_to_json(cert, &fi.space);
                rep.text += "certificate: " + std::string(to_string(cert.conclusion)) +
                            " at " + fi.space.label(*cert.unique_point) + "\n";
            } else {
                const auto& ii = std::get<IntervalInstance>(spec.instance);
                UniquenessCertificate cert =
                    certify(ii, UniquenessMode::CommonFixedPoint, *out.fixed_value);
                rep.machine["certificate"] = certificate_to_json(cert, nullptr);
                rep.text += "certificate: " + std::string(to_string(cert.conclusion)) +
                            " at " + std::to_string(*out.fixed_value) + "\n";
            }
        }
    } catch (const Error& e) {
        return error_report("demo", e);
    }
    rep.machine["exit_code"] = rep.exit_code;
    return rep;
}

}  // namespace cofix
