#pragma once

#include "cofix/instance.hpp"
#include "cofix/theorems.hpp"

namespace cofix {

/// Built-in demo registry.
///   ex52      : the interval [-1/3, 1/3] with f(x) = x^2, g = identity:
///                f preserves comparability but is not monotone, contracts
///                with alpha = 2/3, unique fixed point 0.
///   ex52-grid : the finite four-point discretization {-1/3, 0, 1/9, 1/3}
///                of the same map (squares rounded down to the grid).
///   rr-preset : ex52-grid checked against the historical hypothesis list
///                that demands monotonicity plus pairwise lower+upper bounds.
///   nrl-preset: ex52-grid against the monotone list with lower-or-upper
///                bounds and the TCC alternative.
IntervalInstance make_ex52();
FiniteInstance make_ex52_grid();

struct DemoSpec {
    Instance instance;
    Preset preset;
    bool certify_common_fixed;
    std::string description;
};

DemoSpec make_demo(const std::string& name);

}  // namespace cofix
