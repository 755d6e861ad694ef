#pragma once

#include <string>

#include "cofix/instance.hpp"
#include "cofix/verdict.hpp"

namespace cofix {

/// Hypothesis list selector. T33 is the complete-space coincidence result for
/// a pair (f,g); T35 its complete-subspace variant; C51 the single-map
/// fixed-point corollary (g = identity, comparability); RR and NRL are the
/// historical single-map presets that demand monotonicity instead of
/// comparability, with their respective bound conditions.
enum class Preset { T33, T35, C51, RR, NRL };

const char* to_string(Preset p);
Preset preset_from_string(const std::string& s);

/// Full hypothesis report for the chosen list. Every entry must pass
/// (HOLDS / ASSERTED / VACUOUS) for the solve gate to open.
HypothesisReport check_hypotheses(const FiniteInstance& inst, Preset preset);
HypothesisReport check_hypotheses(const IntervalInstance& inst, Preset preset);

/// The four classical order conditions used by the uniqueness results, from
/// strongest to weakest: totally ordered; every pair with lower and upper
/// bound; every pair with lower or upper bound (equivalently directed);
/// comparability chains between all pairs.
struct SpaceConditions {
    bool totally_ordered = false;
    bool pair_lower_and_upper = false;
    bool pair_lower_or_upper = false;
    bool directed = false;  // z comparable to both; equivalent to the previous
    bool chain_connected = false;
};

SpaceConditions space_conditions(const FiniteSpace& space);

}  // namespace cofix
