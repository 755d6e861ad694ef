// Acceptance suite: every criterion prints one [PASS]/[FAIL] line with its
// measured runtime; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cofix/commands.hpp"
#include "cofix/demos.hpp"
#include "cofix/oracle.hpp"
#include "cofix/solver.hpp"
#include "cofix/theorems.hpp"
#include "cofix/uniqueness.hpp"

using namespace cofix;

namespace {

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond) detail += (detail.empty() ? "" : "; ") + what;
    return cond;
}

GeneratorParams seeded_params(std::uint64_t base, int i, unsigned force) {
    static const Rat kDensities[] = {Rat(1, 8), Rat(1, 3), Rat(1, 2), Rat(3, 4), Rat(1)};
    GeneratorParams p;
    p.n = 1 + (i % 8);
    p.seed = base + static_cast<std::uint64_t>(i);
    p.edge_density = kDensities[i % 5];
    p.force = force;
    return p;
}

// ---- criterion 1 -----------------------------------------------------------

bool criterion_ex52(std::string& detail) {
    bool ok = true;

    auto demo = cmd_demo("ex52", {});
    ok &= expect(demo.exit_code == kExitOk, "demo ex52 exits 0", detail);
    ok &= expect(demo.machine.contains("result") &&
                     std::fabs(demo.machine["result"]["fixed_value"].get<double>()) < 1e-12,
                 "demo report fixed value below 1e-12", detail);

    IntervalInstance ex = make_ex52();  // built-in start x0 = 1/3
    SolverConfig config;
    config.preset = Preset::C51;
    auto out = solve(ex, config);
    ok &= expect(out.gate_passed, "ex52 hypothesis gate", detail);
    ok &= expect(out.succeeded(), "ex52 convergence", detail);
    if (out.fixed_value) {
        ok &= expect(std::fabs(*out.fixed_value) < 1e-12,
                     "fixed point below 1e-12", detail);
        ok &= expect(out.interval_trace->steps() <= 60, "at most 60 iterations", detail);
        ok &= expect(out.interval_trace->iterates.front() == 1.0 / 3.0, "start x0 = 1/3", detail);
    }

    double sampled = sampled_alpha(ex.space, ex.pair, ex.grid_n);
    ok &= expect(sampled >= 0.66 && sampled <= 2.0 / 3.0,
                 "sampled alpha in [0.66, 2/3], got " + std::to_string(sampled), detail);

    FiniteInstance grid = make_ex52_grid();
    ok &= expect(is_comparable_map(grid.space, grid.pair.f).verdict == Verdict::Holds,
                 "grid comparability HOLDS", detail);
    ok &= expect(is_monotone(grid.space, grid.pair.f).verdict() == Verdict::Fails,
                 "grid monotonicity FAILS", detail);
    auto est = estimate_alpha(grid.space, grid.pair);
    ok &= expect(est.alpha <= Rat(2, 3), "exact grid alpha <= 2/3, got " + rat_str(est.alpha),
                 detail);

    std::ostringstream s;
    s << "fixed point " << (out.fixed_value ? *out.fixed_value : -1.0) << ", "
      << out.interval_trace->steps() << " steps, sampled alpha " << sampled << ", grid alpha "
      << rat_str(est.alpha);
    if (ok) detail = s.str();
    return ok;
}

// ---- criterion 2 -----------------------------------------------------------

bool criterion_decay_and_bound(std::string& detail) {
    bool ok = true;
    IntervalInstance ex = make_ex52();
    SolverConfig config;
    auto trace = joint_iterate(ex.space, ex.pair, 1.0 / 3.0, 2.0 / 3.0, config);
    ok &= expect(trace.status == TraceStatus::ConvergedTol, "trace converged", detail);
    ok &= expect(trace.steps() >= 3, "trace has steps", detail);

    const double alpha = 2.0 / 3.0;
    for (std::size_t i = 1; i < trace.distances.size(); ++i)
        ok &= expect(leq_ulps(trace.distances[i], alpha * trace.distances[i - 1], 4),
                     "decay step " + std::to_string(i), detail);

    double d0 = trace.distances.front();
    for (std::size_t n = 0; n < trace.g_values.size(); ++n)
        ok &= expect(leq_ulps(std::fabs(trace.g_values[n]),
                              a_priori_bound(d0, alpha, static_cast<int>(n)), 4),
                     "bound domination at n=" + std::to_string(n), detail);
    if (ok)
        detail = std::to_string(trace.steps()) + " steps, every d_{n+1} <= (2/3) d_n, bound holds";
    return ok;
}

// ---- criterion 3 -----------------------------------------------------------

bool criterion_oracle_existence(std::string& detail) {
    SolverConfig config;
    int failures = 0, degenerate = 0;
    for (int i = 0; i < 1000; ++i) {
        auto inst = generate(seeded_params(20000, i, force_flag::t33));
        auto out = solve(inst, config);
        bool good = out.gate_passed && out.finite_trace &&
                    out.finite_trace->status == TraceStatus::CoincidenceFound &&
                    out.oracle_ok && out.oracle->contains_coincidence(*out.coincidence_point);
        if (!good) {
            ++failures;
            if (failures == 1)
                detail = "first failure at seed " + std::to_string(20000 + i);
        }
        if (out.finite_trace && out.finite_trace->steps() == 0) ++degenerate;
    }
    if (failures == 0)
        detail = "1000 instances, solver result always in the brute-force coincidence set (" +
                 std::to_string(1000 - degenerate) + " with nonzero iteration)";
    return failures == 0;
}

// ---- criterion 4 -----------------------------------------------------------

bool criterion_oracle_uniqueness(std::string& detail) {
    bool ok = true;
    int multi_poc = 0, traces_run = 0, nonzero_traces = 0;
    for (int i = 0; i < 500; ++i) {
        auto inst = generate(seeded_params(30000, i, force_flag::t43));
        auto oracle = enumerate_coincidences(inst);
        if (oracle.points_of_coincidence.size() != 1) {
            ++multi_poc;
            if (multi_poc == 1)
                detail = "multiple points of coincidence at seed " + std::to_string(30000 + i);
            continue;
        }
        int x = oracle.coincidence_points.front();
        int vstar = inst.pair.gx(x);

        // default trace between the first two coincidence points when present
        if (oracle.coincidence_points.size() >= 2) {
            auto t = chain_convergence_trace(inst, x, oracle.coincidence_points[1], 50);
            ok &= expect(t.ladder_ok && t.decay_ok, "default trace ladder/decay", detail);
            ++traces_run;
        }
        // explicit loop chain through a comparable g-value exercises the
        // k = 3 machinery with nonzero gaps
        int w = -1;
        for (int v : inst.g_image())
            if (v != vstar && inst.space.comparable(v, vstar)) w = v;
        if (w >= 0) {
            Chain loop{{vstar, w, vstar}};
            auto t = chain_convergence_trace(inst, x, x, 50, loop);
            ++traces_run;
            ok &= expect(t.ladder_ok && t.decay_ok, "loop trace ladder/decay", detail);
            bool nonzero = false;
            for (std::size_t n = 0; n < t.t.size() && ok; ++n) {
                Rat bound = rat_pow(t.alpha, static_cast<unsigned>(n));
                for (std::size_t c = 0; c < t.t[n].size(); ++c) {
                    if (!(t.t[n][c] <= bound * t.t[0][c])) {
                        ok = expect(false, "exact decay t_n <= alpha^n t_0", detail);
                        break;
                    }
                    if (t.t[n][c] > 0) nonzero = true;
                }
            }
            if (nonzero) ++nonzero_traces;
        }
    }
    ok &= expect(multi_poc == 0, "unique point of coincidence on all 500", detail);
    ok &= expect(nonzero_traces >= 100, "enough nonzero chain traces: " +
                                            std::to_string(nonzero_traces), detail);
    if (ok)
        detail = "500 instances, single point of coincidence everywhere; " +
                 std::to_string(traces_run) + " chain traces (" +
                 std::to_string(nonzero_traces) + " with nonzero gaps), exact decay to n=50";
    return ok;
}

// ---- criterion 5 -----------------------------------------------------------

#ifndef COFIX_CLI_PATH
#define COFIX_CLI_PATH ""
#endif

bool criterion_falsification(std::string& detail) {
    bool ok = true;
    std::string cli = COFIX_CLI_PATH;
    if (!cli.empty()) {
        auto run = [&](const std::string& args) {
            int status = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
            return WEXITSTATUS(status);
        };
        ok &= expect(run("fuzz --theorem t33 --trials 10000") == 0, "cli fuzz t33", detail);
        ok &= expect(run("fuzz --theorem t43 --trials 5000") == 0, "cli fuzz t43", detail);
        if (ok) detail = "cli fuzz: no counterexample in 10000 t33 + 5000 t43 trials";
        return ok;
    }
    GeneratorParams base;
    base.n = 8;
    base.seed = 0;
    auto t33 = falsify(TheoremId::T33, 10000, base);
    auto t43 = falsify(TheoremId::T43, 5000, base);
    ok &= expect(!t33.found(), "t33: " + t33.violation, detail);
    ok &= expect(!t43.found(), "t43: " + t43.violation, detail);
    if (ok) detail = "no counterexample in 10000 t33 + 5000 t43 trials";
    return ok;
}

// ---- criteria 6 and 7 ------------------------------------------------------

std::vector<FiniteInstance> reduction_instances() {
    std::vector<FiniteInstance> out;
    for (int i = 0; i < 200; ++i) {
        unsigned force = force_flag::g_identity;
        if (i % 4 == 1) force |= force_flag::monotone;
        if (i % 4 == 2) force |= force_flag::commuting;
        if (i % 4 == 3) force |= force_flag::t33;
        out.push_back(generate(seeded_params(40000, i, force)));
    }
    return out;
}

bool criterion_reduction_identities(std::string& detail) {
    bool ok = true;
    auto instances = reduction_instances();
    for (std::size_t i = 0; i < instances.size() && ok; ++i) {
        const auto& inst = instances[i];
        auto direct = is_comparable_map(inst.space, inst.pair.f);
        auto via_g = is_g_comparable(inst.space, inst.pair);
        ok &= expect(direct.verdict == via_g.verdict,
                     "g-comparable == comparable at instance " + std::to_string(i), detail);

        auto cs = continuity_suite(inst.space, inst.pair);
        ok &= expect(cs.f_g_continuous.verdict == cs.f_continuous.verdict,
                     "f_g_continuous == f_continuous at instance " + std::to_string(i), detail);

        auto tcc = has_tcc(inst.space);
        auto gtcc = has_g_tcc(inst.space, inst.pair.g);
        ok &= expect(tcc.verdict == gtcc.verdict && tcc.note == gtcc.note,
                     "g-TCC == TCC at instance " + std::to_string(i), detail);
    }
    if (ok) detail = "200 g = identity instances, all three reductions agree bitwise";
    return ok;
}

bool criterion_implication_ladders(std::string& detail) {
    bool ok = true;
    auto instances = reduction_instances();
    int monotone_seen = 0, u01_seen = 0, u02_seen = 0, total_seen = 0;
    for (std::size_t i = 0; i < instances.size() && ok; ++i) {
        const auto& inst = instances[i];
        std::string at = " at instance " + std::to_string(i);

        auto cs = commutation_suite(inst.space, inst.pair);
        if (cs.commuting.passed())
            ok &= expect(cs.weakly_commuting.passed(), "commuting => weakly commuting" + at,
                         detail);
        if (cs.weakly_commuting.passed())
            ok &= expect(cs.compatible.passed(), "weakly commuting => compatible" + at, detail);
        if (cs.compatible.passed())
            ok &= expect(cs.weakly_compatible.passed(), "compatible => weakly compatible" + at,
                         detail);

        if (is_monotone(inst.space, inst.pair.f).monotone()) {
            ++monotone_seen;
            ok &= expect(is_comparable_map(inst.space, inst.pair.f).passed(),
                         "monotone => comparable" + at, detail);
        }

        auto red = check_u0_reductions(inst.space, inst.pair);
        auto u0 = check_u0(inst.space, inst.pair);
        if (red.u01.passed()) {
            ++u01_seen;
            ok &= expect(u0.passed(), "u0^1 => u0" + at, detail);
        }
        if (red.u02.holds) {
            ++u02_seen;
            ok &= expect(u0.passed(), "u0^2 => u0" + at, detail);
        }

        auto sc = space_conditions(inst.space);
        if (sc.totally_ordered) {
            ++total_seen;
            ok &= expect(sc.pair_lower_and_upper, "total => lower-and-upper" + at, detail);
        }
        if (sc.pair_lower_and_upper)
            ok &= expect(sc.pair_lower_or_upper, "lower-and-upper => lower-or-upper" + at,
                         detail);
        if (sc.pair_lower_or_upper)
            ok &= expect(sc.chain_connected, "lower-or-upper => chains" + at, detail);
    }
    ok &= expect(monotone_seen >= 20, "monotone antecedent non-vacuous", detail);
    ok &= expect(u01_seen >= 20 && u02_seen >= 20, "u0 reduction antecedents non-vacuous",
                 detail);
    ok &= expect(total_seen >= 10, "totally ordered antecedent non-vacuous", detail);
    if (ok) {
        std::ostringstream s;
        s << "no ladder violation in 200 instances (monotone seen " << monotone_seen
          << ", u0^1 " << u01_seen << ", u0^2 " << u02_seen << ", total " << total_seen << ")";
        detail = s.str();
    }
    return ok;
}

// ---- criterion 8 -----------------------------------------------------------

bool criterion_preset_contrast(std::string& detail) {
    bool ok = true;
    auto rr = cmd_demo("rr-preset", {});
    ok &= expect(rr.exit_code == kExitHypothesesFailed, "rr-preset gate failure", detail);
    bool names_monotone = false;
    if (rr.machine.contains("failed_hypotheses"))
        for (const auto& id : rr.machine["failed_hypotheses"])
            if (id == "monotone") names_monotone = true;
    ok &= expect(names_monotone, "rr-preset names monotonicity", detail);

    auto grid = cmd_demo("ex52-grid", {});
    ok &= expect(grid.exit_code == kExitOk, "ex52-grid succeeds", detail);
    ok &= expect(grid.machine.contains("certificate") &&
                     grid.machine["certificate"]["conclusion"] == "UNIQUE_COMMON_FIXED_POINT",
                 "ex52-grid certifies a unique common fixed point", detail);
    if (ok)
        detail = "rr-preset rejected for monotonicity; comparability preset certifies the "
                 "unique common fixed point";
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "ex52 reproduction", 1.0, criterion_ex52},
        {2, "geometric decay and bound domination", 1.0, criterion_decay_and_bound},
        {3, "oracle equivalence (existence), 1000 forced instances", 30.0,
         criterion_oracle_existence},
        {4, "oracle equivalence (uniqueness), 500 forced instances", 60.0,
         criterion_oracle_uniqueness},
        {5, "falsification null result", 300.0, criterion_falsification},
        {6, "reduction identities at g = identity", 10.0, criterion_reduction_identities},
        {7, "implication ladders", 10.0, criterion_implication_ladders},
        {8, "historical-preset contrast", 300.0, criterion_preset_contrast},
    };

    int passed = 0;
    for (auto& c : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        bool in_time = seconds < c.limit_seconds;
        bool pass = ok && in_time;
        std::printf("[%s] criterion %d: %s: %s [%.2f s < %.0f s]\n", pass ? "PASS" : "FAIL",
                    c.number, c.title.c_str(), detail.c_str(), seconds, c.limit_seconds);
        if (!in_time && ok) std::printf("       (time limit exceeded)\n");
        if (pass) ++passed;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
