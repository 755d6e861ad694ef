#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofix/instance.hpp"
#include "cofix/oracle.hpp"
#include "cofix/theorems.hpp"

namespace cofix {

struct SolverConfig {
    int max_iter = 10000;
    double tol = 1e-12;  // continuous stopping tolerance
    bool verify_hypotheses_first = true;
    Preset preset = Preset::T33;
};

enum class TraceStatus { CoincidenceFound, ConvergedTol, MaxIterExceeded, HypothesisBroken };

const char* to_string(TraceStatus s);

/// Full record of a joint-iteration run on a finite instance. Invariants
/// (enforced every step, exact rational arithmetic):
///   g(iterates[i+1]) = f(iterates[i]);
///   g_values is termwise monotone;
///   distances[i] <= alpha_used * distances[i-1].
struct FiniteTrace {
    std::vector<int> iterates;     // x_0 .. x_m
    std::vector<int> g_value_ids;  // g(x_i) as element ids
    std::vector<Rat> distances;    // d_i = d(g x_i, g x_{i+1})
    Rat alpha_used;
    TraceStatus status = TraceStatus::MaxIterExceeded;
    std::string broken_reason;                        // set iff HypothesisBroken
    std::optional<int> coincidence_point;             // element id
    std::optional<int> point_of_coincidence;          // element id of g(x)=f(x)
    int steps() const { return static_cast<int>(distances.size()); }
};

/// Continuous counterpart: double-precision iterates, a-posteriori stop
///   d_n / (1 - alpha) <= tol,
/// decay sentinel within 4 ulps.
struct IntervalTrace {
    std::vector<double> iterates;
    std::vector<double> g_values;
    std::vector<double> distances;
    double alpha_used = 0.0;
    TraceStatus status = TraceStatus::MaxIterExceeded;
    std::string broken_reason;
    std::optional<double> fixed_value;
    int steps() const { return static_cast<int>(distances.size()); }
};

/// Lowest-index x with g(x) = value; the deterministic preimage policy.
std::optional<int> g_preimage(std::span<const int> g, int value);

/// One representative per distinct g-value (lowest index): g restricted to
/// the result is injective with the same image.
std::vector<int> select_representatives(const FiniteSpace& space, std::span<const int> g);

/// Lowest-index x0 with g(x0) <>= f(x0), or nullopt.
std::optional<int> find_start(const FiniteSpace& space, const FinitePair& pair);

/// Joint iteration g(x_{n+1}) = f(x_n) from x0. Runtime sentinels downgrade
/// the trace to HypothesisBroken instead of continuing on broken premises.
FiniteTrace joint_iterate(const FiniteSpace& space, const FinitePair& pair, int x0,
                          const Rat& alpha, const SolverConfig& config);

IntervalTrace joint_iterate(const IntervalSpace& space, const IntervalPair& pair, double x0,
                            double alpha, const SolverConfig& config);

/// alpha^n / (1 - alpha) * d0: the Cauchy tail majorant on d(g x_n, g x_m),
/// m > n. Throws AlphaOutOfRange unless 0 <= alpha < 1.
Rat a_priori_bound(const Rat& d0, const Rat& alpha, int n);
double a_priori_bound(double d0, double alpha, int n);

/// Full pipeline result: hypothesis report, trace, result, and (finite
/// instances) the brute-force oracle cross-check.
struct SolveOutcome {
    Preset preset = Preset::T33;
    HypothesisReport report;
    bool gate_passed = false;

    std::optional<FiniteTrace> finite_trace;
    std::optional<IntervalTrace> interval_trace;

    std::optional<int> coincidence_point;      // finite
    std::optional<int> point_of_coincidence;   // finite
    std::optional<double> fixed_value;         // interval

    Rat alpha;        // finite exact
    double alpha_d = 0.0;  // interval estimate or declared

    std::optional<OracleResult> oracle;  // finite cross-check
    bool oracle_ok = true;

    std::optional<int> start;
    std::optional<double> start_d;

    bool succeeded() const {
        if (!gate_passed) return false;
        if (finite_trace) return finite_trace->status == TraceStatus::CoincidenceFound;
        if (interval_trace)
            return interval_trace->status == TraceStatus::CoincidenceFound ||
                   interval_trace->status == TraceStatus::ConvergedTol;
        return false;
    }
};

/// Hypothesis gate, start selection, joint iteration, oracle cross-check.
/// When verify_hypotheses_first is set and a required hypothesis fails, the
/// outcome carries the report with gate_passed = false and no trace.
/// Throws Error(NoComparableStart) when no start exists at all.
SolveOutcome solve(const Instance& inst, const SolverConfig& config);

/// Given a coincidence point of a weakly compatible pair whose point of
/// coincidence is certified unique, returns the common fixed point
/// x* = g(x) = f(x) with x* = g(x*) = f(x*) verified exactly.
/// PromotionFailed signals an internal inconsistency.
int promote_to_common_fixed_point(const FiniteInstance& inst, int coincidence_point,
                                  bool uniqueness_certified);

}  // namespace cofix
