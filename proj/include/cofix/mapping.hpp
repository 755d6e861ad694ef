#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cofix/rational.hpp"
#include "cofix/space.hpp"
#include "cofix/verdict.hpp"

namespace cofix {

/// A pair (f, g) of total self-maps on a finite space, as index arrays.
struct FinitePair {
    std::vector<int> f, g;

    static FinitePair validate(int n, std::vector<int> f, std::vector<int> g);
    int fx(int x) const { return f[static_cast<std::size_t>(x)]; }
    int gx(int x) const { return g[static_cast<std::size_t>(x)]; }
};

/// Decidable predicate outcome with an optional counterexample pair.
struct PredicateResult {
    Verdict verdict = Verdict::Holds;
    std::optional<std::pair<int, int>> pair;  // counterexample on FAILS
    std::string note;
    bool passed() const { return passes(verdict); }
};

/// f maps comparable elements to comparable elements.
PredicateResult is_comparable_map(const FiniteSpace& space, std::span<const int> f);

/// g(x) <>= g(y) implies f(x) <>= f(y). With g = identity this is
/// is_comparable_map.
PredicateResult is_g_comparable(const FiniteSpace& space, const FinitePair& pair);

struct MonotoneResult {
    bool increasing = true;
    bool decreasing = true;
    std::optional<std::pair<int, int>> inc_break, dec_break;

    bool monotone() const { return increasing || decreasing; }
    Verdict verdict() const { return monotone() ? Verdict::Holds : Verdict::Fails; }
    const char* kind() const {
        if (increasing && decreasing) return "both";
        if (increasing) return "increasing";
        if (decreasing) return "decreasing";
        return "neither";
    }
};

/// Is f (g-)increasing, (g-)decreasing, both (constant-like) or neither.
MonotoneResult is_monotone(const FiniteSpace& space, std::span<const int> f);
MonotoneResult is_g_monotone(const FiniteSpace& space, const FinitePair& pair);

struct RangeInclusion {
    Verdict verdict = Verdict::Holds;
    bool f_sub_g = true;
    std::optional<bool> f_sub_y, y_sub_g;  // set when Y supplied
    std::optional<int> witness;            // element exhibiting the failed inclusion
    std::string note;
};

/// f(X) subset of g(X); with Y supplied, the sandwich f(X) ⊆ Y ⊆ g(X).
RangeInclusion range_inclusion(const FiniteSpace& space, const FinitePair& pair,
                               std::optional<std::span<const int>> Y = std::nullopt);

struct CommutationSuite {
    PredicateResult commuting;
    PredicateResult weakly_commuting;
    PredicateResult compatible;
    PredicateResult weakly_compatible;
};

/// Commuting, weakly commuting, compatible and weakly compatible verdicts.
/// On a finite space compatibility is decided as weak compatibility:
/// a convergent sequence is eventually constant, so equal limits of g(x_n)
/// and f(x_n) force a tail of coincidence points. With no coincidence points
/// both verdicts are VACUOUS.
CommutationSuite commutation_suite(const FiniteSpace& space, const FinitePair& pair);

struct ContinuitySuite {
    PredicateResult f_continuous;
    PredicateResult g_continuous;
    PredicateResult f_g_continuous;
};

/// Finite metric spaces are discrete, so plain continuity HOLDS outright;
/// g-continuity of f is decided exactly as constancy of f on g-fibers.
ContinuitySuite continuity_suite(const FiniteSpace& space, const FinitePair& pair);

/// g(a) = g(b) implies f(a) = f(b). This is also the equal-g-values content
/// of the linear contraction hypothesis: d(fx,fy) <= alpha*d(gx,gy) with
/// d(gx,gy) = 0 forces f(x) = f(y).
PredicateResult fiber_constancy(const FiniteSpace& space, const FinitePair& pair);

struct AlphaEstimate {
    Rat alpha = 0;
    bool holds = true;    // alpha < 1
    bool vacuous = true;  // no pair with comparable distinct g-values
    std::pair<int, int> argmax{-1, -1};
};

/// alpha = max d(fx,fy)/d(gx,gy) over pairs with g(x) <>= g(y), g(x) != g(y);
/// exact rational arithmetic, alpha = 0 when the index set is empty.
AlphaEstimate estimate_alpha(const FiniteSpace& space, const FinitePair& pair);

// ---------------------------------------------------------------------------
// Continuous (interval) side: a small registry of built-in functions that are
// exactly analyzable, plus user-declared analytic facts.

class BuiltinFn {
public:
    enum class Kind { Identity, Square, Affine };

    static BuiltinFn identity() { return BuiltinFn(Kind::Identity, 0, 0); }
    static BuiltinFn square() { return BuiltinFn(Kind::Square, 0, 0); }
    static BuiltinFn affine(Rat p, Rat q) { return BuiltinFn(Kind::Affine, std::move(p), std::move(q)); }

    /// "identity" | "square" | "affine(p,q)" with rational p, q.
    static BuiltinFn parse(const std::string& name);
    std::string name() const;

    Kind kind() const { return kind_; }
    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }

    Rat eval(const Rat& x) const;
    double eval(double x) const;

    /// Exact image interval of [lo, hi].
    std::pair<Rat, Rat> image(const Rat& lo, const Rat& hi) const;
    bool self_map_on(const IntervalSpace& X) const;

    /// Analytic monotonicity verdict on [lo, hi].
    MonotoneResult monotone_on(const Rat& lo, const Rat& hi) const;
    bool injective_on(const Rat& lo, const Rat& hi) const;

    /// Inverse branch used as the iteration preimage policy: exact for
    /// identity/affine, nonnegative square root branch for square. Returns
    /// nullopt when y has no preimage inside [lo, hi].
    std::optional<double> preimage(double y, const IntervalSpace& X) const;

private:
    BuiltinFn(Kind k, Rat p, Rat q) : kind_(k), p_(std::move(p)), q_(std::move(q)) {}
    Kind kind_;
    Rat p_, q_;
};

/// User-declared analytic facts for a continuous instance. Declared, never
/// inferred; sampling can only downgrade an assertion to FAILS.
struct Declared {
    std::optional<bool> f_continuous, g_continuous, f_g_continuous;
    std::optional<bool> tcc, g_tcc;
    std::optional<Rat> alpha;
};

struct IntervalPair {
    BuiltinFn f, g;
    Declared declared;
};

/// Sup of |f(x)-f(y)| / |g(x)-g(y)| over a uniform grid of `grid_n` points
/// (pairs with g(x) != g(y)); deterministic sampled estimate of alpha.
double sampled_alpha(const IntervalSpace& X, const IntervalPair& pair, int grid_n);

/// Same supremum in exact rational arithmetic (grid points and built-in
/// evaluations are rational), so comparisons against a declared constant
/// carry no floating-point noise. Quadratic in grid_n; cap accordingly.
Rat sampled_alpha_exact(const IntervalSpace& X, const IntervalPair& pair, int grid_n);

/// Exact check that g∘f = f∘g as polynomials.
bool builtins_commute(const BuiltinFn& f, const BuiltinFn& g);

/// Grid spot-check of the declared facts: verifies sampled alpha does not
/// exceed a declared alpha and that f is constant on g-fibers hit by the
/// grid. Returns FAILS with a description when a declaration is contradicted.
PredicateResult spot_check_declared(const IntervalSpace& X, const IntervalPair& pair, int grid_n);

}  // namespace cofix
