#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cofix/mapping.hpp"
#include "cofix/space.hpp"

namespace cofix {

/// A finite problem instance: validated space, mapping pair, optional
/// subspace Y (for the subspace-complete theorem path) and optional start.
struct FiniteInstance {
    FiniteSpace space;
    FinitePair pair;
    std::optional<std::vector<int>> Y;
    std::optional<int> x0;

    std::vector<int> g_image() const {
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(space.size()), 0);
        for (int v : pair.g) seen[static_cast<std::size_t>(v)] = 1;
        std::vector<int> out;
        for (int i = 0; i < space.size(); ++i)
            if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
        return out;
    }
    std::vector<int> f_image() const {
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(space.size()), 0);
        for (int v : pair.f) seen[static_cast<std::size_t>(v)] = 1;
        std::vector<int> out;
        for (int i = 0; i < space.size(); ++i)
            if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
        return out;
    }
};

/// A continuous instance over a closed interval with built-in functions.
struct IntervalInstance {
    IntervalSpace space;
    IntervalPair pair;
    std::optional<Rat> x0;
    int grid_n = 1000;  // sampling resolution for estimates and spot-checks
};

using Instance = std::variant<FiniteInstance, IntervalInstance>;

inline bool is_finite(const Instance& inst) {
    return std::holds_alternative<FiniteInstance>(inst);
}

}  // namespace cofix
