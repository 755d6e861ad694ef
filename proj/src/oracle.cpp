#include "cofix/oracle.hpp"

#include <algorithm>
#include <random>

#include "cofix/solver.hpp"
#include "cofix/theorems.hpp"
#include "cofix/uniqueness.hpp"

namespace cofix {

const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T33: return "t33";
        case TheoremId::T35: return "t35";
        case TheoremId::T43: return "t43";
        case TheoremId::T45: return "t45";
    }
    return "?";
}

TheoremId theorem_from_string(const std::string& s) {
    if (s == "t33") return TheoremId::T33;
    if (s == "t35") return TheoremId::T35;
    if (s == "t43") return TheoremId::T43;
    if (s == "t45") return TheoremId::T45;
    throw Error(Errc::ParseError, "unknown theorem id: " + s);
}

OracleResult enumerate_coincidences(const FiniteInstance& inst) {
    OracleResult out;
    const int n = inst.space.size();
    std::vector<std::uint8_t> poc_seen(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        if (inst.pair.gx(x) != inst.pair.fx(x)) continue;
        out.coincidence_points.push_back(x);
        int v = inst.pair.gx(x);
        if (!poc_seen[static_cast<std::size_t>(v)]) {
            poc_seen[static_cast<std::size_t>(v)] = 1;
            out.points_of_coincidence.push_back(v);
        }
        if (x == v) out.common_fixed_points.push_back(x);
    }
    std::sort(out.points_of_coincidence.begin(), out.points_of_coincidence.end());
    return out;
}

namespace {

/// Deterministic draws over the raw mt19937_64 stream; standard-library
/// distributions are implementation-defined and would break seed
/// reproducibility across toolchains.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t raw() { return eng(); }
    int bounded(int n) { return n <= 1 ? 0 : static_cast<int>(raw() % static_cast<std::uint64_t>(n)); }
    bool chance(const Rat& p) {
        int k = bounded(1000000);
        return Rat(k) / 1000000 < p;
    }
    bool coin(double p) { return static_cast<double>(raw() >> 11) * 0x1.0p-53 < p; }
    std::vector<int> permutation(int n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)],
                                                  perm[static_cast<std::size_t>(bounded(i + 1))]);
        return perm;
    }
};

std::vector<std::uint8_t> random_order(Rng& rng, int n, const Rat& density) {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int i, int j) -> std::uint8_t& { return leq[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) at(i, i) = 1;
    auto perm = rng.permutation(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.chance(density)) at(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]) = 1;
    // reflexive-transitive closure of the DAG
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!at(i, k)) continue;
            for (int j = 0; j < n; ++j)
                if (at(k, j)) at(i, j) = 1;
        }
    return leq;
}

std::vector<Rat> random_metric(Rng& rng, int n, int dim) {
    if (dim < 1) dim = 1;
    std::vector<std::vector<Rat>> pts;
    for (int attempt = 0; attempt < 64; ++attempt) {
        pts.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(dim)));
        Rat den(1 + rng.bounded(3));
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < dim; ++d)
                pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
                    Rat(rng.bounded(16 * n + 9)) / den;
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pts[static_cast<std::size_t>(i)] == pts[static_cast<std::size_t>(j)]) {
                    distinct = false;
                    break;
                }
        if (distinct) break;
        if (attempt == 63)
            for (int i = 0; i < n; ++i)
                pts[static_cast<std::size_t>(i)][0] += Rat(i) * 100;  // forced separation
    }
    std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d = 0;
            for (int c = 0; c < dim; ++c)
                d += rat_abs(pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                             pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]);
            dist[static_cast<std::size_t>(i) * n + j] = d;
            dist[static_cast<std::size_t>(j) * n + i] = d;
        }
    return dist;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = "e" + std::to_string(i);
    return labels;
}

std::vector<int> image_of(const std::vector<int>& m, int n) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    for (int v : m) seen[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

bool order_comparable(const std::vector<std::uint8_t>& leq, int n, int i, int j) {
    return leq[static_cast<std::size_t>(i) * n + j] || leq[static_cast<std::size_t>(j) * n + i];
}

/// Comparability component of `seed` inside `values` under the given order.
std::vector<int> component_of(const std::vector<std::uint8_t>& leq, int n,
                              const std::vector<int>& values, int seed) {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0), reached(static_cast<std::size_t>(n), 0);
    for (int v : values) in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> stack{seed}, out;
    reached[static_cast<std::size_t>(seed)] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int v : values)
            if (!reached[static_cast<std::size_t>(v)] && order_comparable(leq, n, u, v)) {
                reached[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
    }
    (void)in;
    return out;
}

/// Self-map on `values` whose every orbit lands on the designated fixed
/// point: nodes are processed in random order and each maps to an
/// already-processed node (the fixed point with probability `bias`).
/// Targets are drawn from `allowed` and filtered so every comparable pair
/// seen so far keeps comparable images; the exact checkers re-verify later.
std::vector<int> tree_toward(Rng& rng, const std::vector<std::uint8_t>& leq, int n,
                             const std::vector<int>& values, const std::vector<int>& allowed,
                             int fixed, double bias) {
    std::vector<int> phi(static_cast<std::size_t>(n), -1);
    phi[static_cast<std::size_t>(fixed)] = fixed;
    std::vector<std::uint8_t> allowed_mask(static_cast<std::size_t>(n), 0);
    for (int v : allowed) allowed_mask[static_cast<std::size_t>(v)] = 1;
    std::vector<int> rest;
    for (int v : values)
        if (v != fixed) rest.push_back(v);
    auto perm = rng.permutation(static_cast<int>(rest.size()));
    std::vector<int> processed{fixed};

    auto admissible = [&](int v, int target) {
        for (int u : processed) {
            if (!order_comparable(leq, n, u, v)) continue;
            if (!order_comparable(leq, n, phi[static_cast<std::size_t>(u)], target)) return false;
        }
        return true;
    };

    for (int idx : perm) {
        int v = rest[static_cast<std::size_t>(idx)];
        int target = -1;
        if (rng.coin(bias) && admissible(v, fixed)) {
            target = fixed;
        } else {
            std::vector<int> candidates;
            for (int t : processed)
                if (allowed_mask[static_cast<std::size_t>(t)] && admissible(v, t))
                    candidates.push_back(t);
            if (!candidates.empty())
                target = candidates[static_cast<std::size_t>(
                    rng.bounded(static_cast<int>(candidates.size())))];
        }
        if (target < 0) target = fixed;  // inadmissible; the final check rejects
        phi[static_cast<std::size_t>(v)] = target;
        processed.push_back(v);
    }
    return phi;
}

/// Metric adapted to the tree: a depth-scaled max-metric (radius beta^-depth
/// around the fixed point, floor 1 elsewhere) contracts every pair of
/// tree nodes by beta exactly; a small L1 term over the random embedding is
/// added with weight (alpha - beta) / max-L1 so the total still contracts by
/// alpha = (1 + beta) / 2 while keeping generic-looking distances.
std::vector<Rat> tree_metric(Rng& rng, int n, int dim, const std::vector<int>& phi,
                             const std::vector<int>& values, int fixed) {
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    depth[static_cast<std::size_t>(fixed)] = 0;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int v : values)
            if (depth[static_cast<std::size_t>(v)] < 0 &&
                depth[static_cast<std::size_t>(phi[static_cast<std::size_t>(v)])] >= 0) {
                depth[static_cast<std::size_t>(v)] =
                    depth[static_cast<std::size_t>(phi[static_cast<std::size_t>(v)])] + 1;
                progressed = true;
            }
    }

    static const Rat kBetas[] = {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3)};
    Rat beta = kBetas[rng.bounded(4)];
    Rat alpha = (Rat(1) + beta) / 2;

    std::vector<Rat> radius(static_cast<std::size_t>(n), Rat(1));
    for (int v : values)
        radius[static_cast<std::size_t>(v)] =
            rat_pow(Rat(1) / beta, static_cast<unsigned>(depth[static_cast<std::size_t>(v)]));
    for (int i = 0; i < n; ++i)
        if (depth[static_cast<std::size_t>(i)] < 0)
            radius[static_cast<std::size_t>(i)] = Rat(1) + Rat(rng.bounded(12)) / 4;

    std::vector<Rat> l1 = random_metric(rng, n, dim);
    Rat l1_max = 0;
    for (const Rat& d : l1) l1_max = std::max(l1_max, d);
    Rat eps = l1_max > 0 ? (alpha - beta) / l1_max : Rat(0);

    std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d = std::max(radius[static_cast<std::size_t>(i)], radius[static_cast<std::size_t>(j)]) +
                    eps * l1[static_cast<std::size_t>(i) * n + j];
            dist[static_cast<std::size_t>(i) * n + j] = d;
            dist[static_cast<std::size_t>(j) * n + i] = d;
        }
    return dist;
}

struct ForcedBuild {
    bool ok = false;
    std::vector<int> f, g;
    std::vector<Rat> dist;
    std::string failing;
};

ForcedBuild try_forced(Rng& rng, const std::vector<std::uint8_t>& leq, int n, int dim,
                       unsigned force, int attempt) {
    ForcedBuild out;

    std::vector<int> g;
    if (force & force_flag::g_identity) {
        g = identity_map(n);
    } else if (rng.bounded(2) == 0) {
        g.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = rng.bounded(n);
    } else {
        // perturbed permutation: large image, a few collisions
        g = rng.permutation(n);
        for (int i = 0; i < n; ++i)
            if (rng.bounded(4) == 0) g[static_cast<std::size_t>(i)] = rng.bounded(n);
    }
    auto V0 = image_of(g, n);

    // With u0 forced, keep all f-values inside one comparability component of
    // g(X) so chains exist by construction; pick the fixed point in the
    // largest component.
    int vstar;
    if (force & force_flag::u0) {
        std::vector<int> best;
        for (int v : V0) {
            auto comp = component_of(leq, n, V0, v);
            if (comp.size() > best.size()) best = comp;
        }
        vstar = best[static_cast<std::size_t>(rng.bounded(static_cast<int>(best.size())))];
    } else {
        vstar = V0[static_cast<std::size_t>(rng.bounded(static_cast<int>(V0.size())))];
    }
    g[static_cast<std::size_t>(vstar)] = vstar;
    auto V = image_of(g, n);
    std::vector<int> allowed =
        (force & force_flag::u0) ? component_of(leq, n, V, vstar) : V;

    double bias = std::min(0.2 + 0.01 * attempt, 1.0);
    auto phi = tree_toward(rng, leq, n, V, allowed, vstar, bias);
    std::vector<int> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        f[static_cast<std::size_t>(i)] = phi[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];

    auto dist = tree_metric(rng, n, dim, phi, V, vstar);
    FiniteSpace space = FiniteSpace::validate(default_labels(n), leq, dist);
    FinitePair pair{f, g};

    if ((force & force_flag::range_inclusion) &&
        range_inclusion(space, pair).verdict == Verdict::Fails) {
        out.failing = "range_inclusion";
        return out;
    }
    if ((force & force_flag::g_comparable) && !is_g_comparable(space, pair).passed()) {
        out.failing = "g_comparable";
        return out;
    }
    if (force & force_flag::contraction) {
        if (!fiber_constancy(space, pair).passed() || !estimate_alpha(space, pair).holds) {
            out.failing = "contraction";
            return out;
        }
    }
    if ((force & force_flag::compatible) &&
        commutation_suite(space, pair).compatible.verdict == Verdict::Fails) {
        out.failing = "compatible";
        return out;
    }
    if ((force & force_flag::start_exists) && !find_start(space, pair)) {
        out.failing = "start_exists";
        return out;
    }
    if ((force & force_flag::u0) && !check_u0(space, pair).passed()) {
        out.failing = "u0";
        return out;
    }
    out.ok = true;
    out.f = std::move(f);
    out.g = std::move(g);
    out.dist = std::move(dist);
    return out;
}

}  // namespace

FiniteInstance generate(const GeneratorParams& params) {
    if (params.n < 1) throw Error(Errc::BadShape, "n must be >= 1");
    if (params.edge_density < 0 || params.edge_density > 1)
        throw Error(Errc::BadShape, "edge_density must lie in [0,1]");
    Rng rng(params.seed);
    const int n = params.n;

    const unsigned structural = force_flag::range_inclusion | force_flag::g_comparable |
                                force_flag::contraction | force_flag::compatible |
                                force_flag::start_exists | force_flag::u0;

    std::vector<std::uint8_t> leq = random_order(rng, n, params.edge_density);
    std::vector<Rat> dist = random_metric(rng, n, params.embed_dim);
    std::vector<int> f, g;

    if (params.force & force_flag::commuting) {
        g.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = rng.bounded(n);
        if (params.force & force_flag::g_identity) g = identity_map(n);
        switch (rng.bounded(3)) {
            case 0: f = g; break;
            case 1: {
                f.resize(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    f[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
                break;
            }
            default: f = identity_map(n); break;
        }
    } else if (params.force & force_flag::monotone) {
        if (params.force & force_flag::g_identity) {
            g = identity_map(n);
        } else {
            g.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = rng.bounded(n);
        }
        if (rng.bounded(2) == 0)
            f.assign(static_cast<std::size_t>(n), rng.bounded(n));  // constant: both directions
        else
            f = g;  // g-increasing
    } else if (params.force & structural) {
        const int budget = 10000;
        std::string failing = "order";
        bool done = false;
        for (int attempt = 0; attempt < budget && !done; ++attempt) {
            if (attempt > 0 && attempt % 100 == 0)
                leq = random_order(rng, n, params.edge_density);
            auto built = try_forced(rng, leq, n, params.embed_dim, params.force, attempt);
            if (built.ok) {
                f = std::move(built.f);
                g = std::move(built.g);
                dist = std::move(built.dist);
                done = true;
            } else {
                failing = built.failing;
            }
        }
        if (!done) throw Error(Errc::GenerationBudgetExceeded, "constraint: " + failing);
    } else {
        f.resize(static_cast<std::size_t>(n));
        g.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            f[static_cast<std::size_t>(i)] = rng.bounded(n);
            g[static_cast<std::size_t>(i)] = rng.bounded(n);
        }
        if (params.force & force_flag::g_identity) g = identity_map(n);
    }

    FiniteSpace space = FiniteSpace::validate(default_labels(n), std::move(leq), std::move(dist));
    FiniteInstance inst{std::move(space), FinitePair::validate(n, std::move(f), std::move(g)),
                        std::nullopt, std::nullopt};

    if (params.force & force_flag::with_subspace) {
        auto fimg = inst.f_image();
        auto gimg = inst.g_image();
        std::vector<std::uint8_t> member(static_cast<std::size_t>(n), 0);
        for (int v : fimg) member[static_cast<std::size_t>(v)] = 1;
        for (int v : gimg)
            if (!member[static_cast<std::size_t>(v)] && rng.bounded(2) == 0)
                member[static_cast<std::size_t>(v)] = 1;
        std::vector<int> Y;
        for (int i = 0; i < n; ++i)
            if (member[static_cast<std::size_t>(i)]) Y.push_back(i);
        inst.Y = std::move(Y);
    }
    return inst;
}

FalsifyOutcome falsify(TheoremId theorem, int trials, const GeneratorParams& base) {
    FalsifyOutcome out;
    static const Rat kDensities[] = {Rat(1, 8), Rat(1, 3), Rat(1, 2), Rat(3, 4), Rat(1)};

    for (int t = 0; t < trials; ++t) {
        GeneratorParams p = base;
        p.seed = base.seed + static_cast<std::uint64_t>(t);
        p.n = 1 + (t % std::max(1, base.n));
        p.edge_density = kDensities[t % 5];
        p.force = (theorem == TheoremId::T33 || theorem == TheoremId::T35)
                      ? force_flag::t33
                      : force_flag::t43;
        if (theorem == TheoremId::T35) p.force |= force_flag::with_subspace;

        FiniteInstance inst = generate(p);

        Preset preset = theorem == TheoremId::T35 ? Preset::T35 : Preset::T33;
        HypothesisReport rep = check_hypotheses(inst, preset);
        if (!rep.all_pass())
            throw Error(Errc::OracleContradiction,
                        "generator violated a forced hypothesis at seed " +
                            std::to_string(p.seed));
        if (theorem == TheoremId::T43 || theorem == TheoremId::T45) {
            if (!check_u0(inst.space, inst.pair).passed())
                throw Error(Errc::OracleContradiction,
                            "generator violated forced u0 at seed " + std::to_string(p.seed));
        }

        OracleResult oracle = enumerate_coincidences(inst);
        ++out.trials_run;

        switch (theorem) {
            case TheoremId::T33:
            case TheoremId::T35:
                if (oracle.coincidence_points.empty()) {
                    out.counterexample_seed = p.seed;
                    out.violation = "hypotheses hold but no coincidence point exists";
                    return out;
                }
                break;
            case TheoremId::T43:
                if (oracle.points_of_coincidence.size() != 1) {
                    out.counterexample_seed = p.seed;
                    out.violation = "u0 holds but " +
                                    std::to_string(oracle.points_of_coincidence.size()) +
                                    " points of coincidence exist";
                    return out;
                }
                break;
            case TheoremId::T45: {
                auto comm = commutation_suite(inst.space, inst.pair);
                if (comm.weakly_compatible.verdict == Verdict::Fails)
                    throw Error(Errc::OracleContradiction,
                                "forced compatible pair is not weakly compatible at seed " +
                                    std::to_string(p.seed));
                if (oracle.common_fixed_points.size() != 1) {
                    out.counterexample_seed = p.seed;
                    out.violation = "u0 and weak compatibility hold but " +
                                    std::to_string(oracle.common_fixed_points.size()) +
                                    " common fixed points exist";
                    return out;
                }
                break;
            }
        }
    }
    return out;
}

FiniteInstance necessity_fixture_no_g_comparable() {
    // Three elements, a <= b only; f is the coincidence-free rotation
    // a->b->c->a. The metric squeezes d(b,c) so the contraction holds on the
    // single comparable pair, yet f fails g-comparability and has no
    // coincidence point.
    std::vector<std::string> labels{"a", "b", "c"};
    std::vector<std::uint8_t> leq{
        1, 1, 0,  //
        0, 1, 0,  //
        0, 0, 1,
    };
    std::vector<Rat> dist{
        Rat(0), Rat(10), Rat(10),  //
        Rat(10), Rat(0), Rat(1),   //
        Rat(10), Rat(1), Rat(0),
    };
    FiniteSpace space = FiniteSpace::validate(std::move(labels), std::move(leq), std::move(dist));
    FinitePair pair = FinitePair::validate(3, {1, 2, 0}, {0, 1, 2});
    return FiniteInstance{std::move(space), std::move(pair), std::nullopt, std::nullopt};
}

}  // namespace cofix
