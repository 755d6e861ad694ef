#include "cofix/solver.hpp"

#include <cmath>

#include "cofix/oracle.hpp"

namespace cofix {

const char* to_string(TraceStatus s) {
    switch (s) {
        case TraceStatus::CoincidenceFound: return "COINCIDENCE_FOUND";
        case TraceStatus::ConvergedTol: return "CONVERGED_TOL";
        case TraceStatus::MaxIterExceeded: return "MAX_ITER";
        case TraceStatus::HypothesisBroken: return "HYPOTHESIS_BROKEN";
    }
    return "?";
}

std::optional<int> g_preimage(std::span<const int> g, int value) {
    for (std::size_t x = 0; x < g.size(); ++x)
        if (g[x] == value) return static_cast<int>(x);
    return std::nullopt;
}

std::vector<int> select_representatives(const FiniteSpace& space, std::span<const int> g) {
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(space.size()), 0);
    std::vector<int> reps;
    for (int x = 0; x < space.size(); ++x) {
        int v = g[static_cast<std::size_t>(x)];
        if (!covered[static_cast<std::size_t>(v)]) {
            covered[static_cast<std::size_t>(v)] = 1;
            reps.push_back(x);
        }
    }
    return reps;
}

std::optional<int> find_start(const FiniteSpace& space, const FinitePair& pair) {
    for (int x = 0; x < space.size(); ++x)
        if (space.comparable(pair.gx(x), pair.fx(x))) return x;
    return std::nullopt;
}

FiniteTrace joint_iterate(const FiniteSpace& space, const FinitePair& pair, int x0,
                          const Rat& alpha, const SolverConfig& config) {
    space.require_element(x0);
    FiniteTrace trace;
    trace.alpha_used = alpha;
    trace.iterates.push_back(x0);
    trace.g_value_ids.push_back(pair.gx(x0));

    if (!space.comparable(pair.gx(x0), pair.fx(x0))) {
        trace.status = TraceStatus::HypothesisBroken;
        trace.broken_reason = "NoComparableStart: g(" + space.label(x0) +
                              ") incomparable to f(" + space.label(x0) + ")";
        return trace;
    }

    int x = x0;
    for (int n = 0; n < config.max_iter; ++n) {
        int fx = pair.fx(x);
        int gx = pair.gx(x);
        if (gx == fx) {
            trace.status = TraceStatus::CoincidenceFound;
            trace.coincidence_point = x;
            trace.point_of_coincidence = gx;
            break;
        }
        auto next = g_preimage(pair.g, fx);
        if (!next) {
            trace.status = TraceStatus::HypothesisBroken;
            trace.broken_reason = "PreimageNotFound: f(" + space.label(x) + ")=" +
                                  space.label(fx) + " outside g(X)";
            break;
        }
        int g_next = pair.gx(*next);  // == fx by construction
        if (!space.comparable(gx, g_next)) {
            trace.status = TraceStatus::HypothesisBroken;
            trace.broken_reason = "MonotonicityBroken: g-values of (" + space.label(x) + "," +
                                  space.label(*next) + ") incomparable";
            break;
        }
        Rat d = space.dist(gx, g_next);
        if (!trace.distances.empty() && d > alpha * trace.distances.back()) {
            trace.status = TraceStatus::HypothesisBroken;
            trace.broken_reason = "DecayBroken: d_" + std::to_string(n) + " > alpha*d_" +
                                  std::to_string(n - 1);
            break;
        }
        trace.distances.push_back(std::move(d));
        trace.iterates.push_back(*next);
        trace.g_value_ids.push_back(g_next);
        x = *next;
    }
    return trace;
}

IntervalTrace joint_iterate(const IntervalSpace& space, const IntervalPair& pair, double x0,
                            double alpha, const SolverConfig& config) {
    IntervalTrace trace;
    trace.alpha_used = alpha;
    double x = space.clamp(x0);
    trace.iterates.push_back(x);
    trace.g_values.push_back(pair.g.eval(x));

    for (int n = 0; n < config.max_iter; ++n) {
        double gx = pair.g.eval(x);
        double fx = pair.f.eval(x);
        if (gx == fx) {
            trace.status = TraceStatus::CoincidenceFound;
            trace.fixed_value = gx;
            return trace;
        }
        auto next = pair.g.preimage(fx, space);
        if (!next) {
            trace.status = TraceStatus::HypothesisBroken;
            trace.broken_reason = "PreimageNotFound: f(x_n) left the g-image";
            return trace;
        }
        double g_next = pair.g.eval(*next);
        double d = std::fabs(g_next - gx);
        if (!trace.distances.empty() && !leq_ulps(d, alpha * trace.distances.back(), 4)) {
            trace.status = TraceStatus::HypothesisBroken;
            trace.broken_reason = "DecayBroken: step " + std::to_string(n) +
                                  " exceeds alpha decay by more than 4 ulps";
            return trace;
        }
        trace.distances.push_back(d);
        trace.iterates.push_back(*next);
        trace.g_values.push_back(g_next);
        x = *next;
        if (alpha < 1.0 && d <= config.tol * (1.0 - alpha)) {
            // A-posteriori Cauchy bound: the limit is within tol of g(x_{n+1}).
            trace.status = TraceStatus::ConvergedTol;
            trace.fixed_value = g_next;
            return trace;
        }
    }
    trace.status = TraceStatus::MaxIterExceeded;
    return trace;
}

Rat a_priori_bound(const Rat& d0, const Rat& alpha, int n) {
    if (alpha < 0 || alpha >= 1)
        throw Error(Errc::AlphaOutOfRange, "alpha=" + rat_str(alpha));
    if (n < 0) throw Error(Errc::AlphaOutOfRange, "n must be nonnegative");
    return rat_pow(alpha, static_cast<unsigned>(n)) / (Rat(1) - alpha) * d0;
}

double a_priori_bound(double d0, double alpha, int n) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw Error(Errc::AlphaOutOfRange, "alpha=" + std::to_string(alpha));
    if (n < 0) throw Error(Errc::AlphaOutOfRange, "n must be nonnegative");
    return std::pow(alpha, n) / (1.0 - alpha) * d0;
}

namespace {

SolveOutcome solve_finite(const FiniteInstance& inst, const SolverConfig& config) {
    SolveOutcome out;
    out.preset = config.preset;
    out.report = check_hypotheses(inst, config.preset);
    out.gate_passed = out.report.all_pass();
    if (!out.gate_passed) {
        // verification off: proceed and let the runtime sentinels speak
        if (config.verify_hypotheses_first) return out;
    }

    out.alpha = estimate_alpha(inst.space, inst.pair).alpha;

    std::optional<int> x0 = inst.x0;
    if (x0) inst.space.require_element(*x0);
    if (!x0) x0 = find_start(inst.space, inst.pair);
    if (!x0) throw Error(Errc::NoComparableStart, "no x0 with g(x0) comparable to f(x0)");
    out.start = x0;

    out.finite_trace = joint_iterate(inst.space, inst.pair, *x0, out.alpha, config);
    if (out.finite_trace->status == TraceStatus::CoincidenceFound) {
        out.coincidence_point = out.finite_trace->coincidence_point;
        out.point_of_coincidence = out.finite_trace->point_of_coincidence;
    }

    out.oracle = enumerate_coincidences(inst);
    if (out.coincidence_point)
        out.oracle_ok = out.oracle->contains_coincidence(*out.coincidence_point);
    return out;
}

SolveOutcome solve_interval(const IntervalInstance& inst, const SolverConfig& config) {
    SolveOutcome out;
    out.preset = config.preset;
    out.report = check_hypotheses(inst, config.preset);
    out.gate_passed = out.report.all_pass();
    if (!out.gate_passed) {
        if (config.verify_hypotheses_first) return out;
    }

    out.alpha_d = inst.pair.declared.alpha ? rat_to_double(*inst.pair.declared.alpha)
                                           : sampled_alpha(inst.space, inst.pair, inst.grid_n);

    double x0 = inst.x0 ? rat_to_double(*inst.x0) : rat_to_double(inst.space.lo());
    out.start_d = x0;
    out.interval_trace = joint_iterate(inst.space, inst.pair, x0, out.alpha_d, config);
    out.fixed_value = out.interval_trace->fixed_value;
    return out;
}

}  // namespace

SolveOutcome solve(const Instance& inst, const SolverConfig& config) {
    if (std::holds_alternative<FiniteInstance>(inst))
        return solve_finite(std::get<FiniteInstance>(inst), config);
    return solve_interval(std::get<IntervalInstance>(inst), config);
}

int promote_to_common_fixed_point(const FiniteInstance& inst, int coincidence_point,
                                  bool uniqueness_certified) {
    inst.space.require_element(coincidence_point);
    const FinitePair& pair = inst.pair;
    if (pair.gx(coincidence_point) != pair.fx(coincidence_point))
        throw Error(Errc::NotCoincidencePoints, inst.space.label(coincidence_point));

    auto comm = commutation_suite(inst.space, inst.pair);
    if (comm.weakly_compatible.verdict == Verdict::Fails)
        throw Error(Errc::NotWeaklyCompatible,
                    comm.weakly_compatible.pair
                        ? inst.space.label(comm.weakly_compatible.pair->first)
                        : "");
    if (!uniqueness_certified)
        throw Error(Errc::UniquenessNotCertified, "certify the point of coincidence first");

    int xbar = pair.gx(coincidence_point);  // = f(coincidence_point)
    // Weak compatibility makes the point of coincidence a coincidence point;
    // uniqueness of the point of coincidence pins g(xbar) to xbar.
    if (pair.gx(xbar) != pair.fx(xbar))
        throw Error(Errc::PromotionFailed,
                    "g and f disagree at " + inst.space.label(xbar), {xbar});
    if (pair.gx(xbar) != xbar || pair.fx(xbar) != xbar)
        throw Error(Errc::PromotionFailed,
                    inst.space.label(xbar) + " is not its own g/f value", {xbar});
    return xbar;
}

}  // namespace cofix
