#include "cofix/demos.hpp"

namespace cofix {

IntervalInstance make_ex52() {
    IntervalSpace space = IntervalSpace::make(Rat(-1, 3), Rat(1, 3));
    Declared d;
    d.f_continuous = true;
    d.g_continuous = true;
    d.f_g_continuous = true;
    d.tcc = true;    // total order: every pair is comparable
    d.g_tcc = true;
    d.alpha = Rat(2, 3);  // |x + y| <= 2/3 on the interval
    IntervalInstance inst{std::move(space),
                          IntervalPair{BuiltinFn::square(), BuiltinFn::identity(), d},
                          Rat(1, 3), 1000};
    return inst;
}

FiniteInstance make_ex52_grid() {
    // Grid {-1/3, 0, 1/9, 1/3}; f squares and rounds down to the grid:
    // (-1/3)^2 = 1/9, 0^2 = 0, (1/9)^2 -> 0, (1/3)^2 = 1/9. Neither
    // increasing nor decreasing, but image pairs stay comparable (total
    // order), and the exact contraction constant is 1/2.
    std::vector<Rat> points{Rat(-1, 3), Rat(0), Rat(1, 9), Rat(1, 3)};
    const int n = static_cast<int>(points.size());
    std::vector<std::string> labels;
    for (const auto& p : points) labels.push_back(rat_str(p));
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (points[static_cast<std::size_t>(i)] <= points[static_cast<std::size_t>(j)])
                leq[static_cast<std::size_t>(i) * n + j] = 1;
            dist[static_cast<std::size_t>(i) * n + j] =
                rat_abs(points[static_cast<std::size_t>(i)] - points[static_cast<std::size_t>(j)]);
        }
    FiniteSpace space = FiniteSpace::validate(std::move(labels), std::move(leq), std::move(dist));

    std::vector<int> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rat sq = points[static_cast<std::size_t>(i)] * points[static_cast<std::size_t>(i)];
        int best = 0;
        for (int j = 0; j < n; ++j)
            if (points[static_cast<std::size_t>(j)] <= sq &&
                points[static_cast<std::size_t>(j)] >= points[static_cast<std::size_t>(best)])
                best = j;
        f[static_cast<std::size_t>(i)] = best;
    }
    FinitePair pair = FinitePair::validate(n, std::move(f), identity_map(n));
    return FiniteInstance{std::move(space), std::move(pair), std::nullopt, std::nullopt};
}

DemoSpec make_demo(const std::string& name) {
    if (name == "ex52")
        return {make_ex52(), Preset::C51, true,
                "square map on [-1/3,1/3]: comparable, not monotone, alpha = 2/3"};
    if (name == "ex52-grid")
        return {make_ex52_grid(), Preset::C51, true,
                "four-point discretization of the square map"};
    if (name == "rr-preset")
        return {make_ex52_grid(), Preset::RR, true,
                "ex52-grid against the monotone + lower-and-upper-bound list"};
    if (name == "nrl-preset")
        return {make_ex52_grid(), Preset::NRL, true,
                "ex52-grid against the monotone + lower-or-upper-bound list"};
    throw Error(Errc::ParseError, "unknown demo: " + name +
                                      " (available: ex52, ex52-grid, rr-preset, nrl-preset)");
}

}  // namespace cofix
