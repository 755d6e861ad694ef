#include "cofix/mapping.hpp"

#include <algorithm>
#include <cmath>

namespace cofix {

FinitePair FinitePair::validate(int n, std::vector<int> f, std::vector<int> g) {
    if (static_cast<int>(f.size()) != n || static_cast<int>(g.size()) != n)
        throw Error(Errc::BadShape, "f and g must have length n=" + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (f[static_cast<std::size_t>(i)] < 0 || f[static_cast<std::size_t>(i)] >= n)
            throw Error(Errc::UnknownElement, "f(" + std::to_string(i) + ") out of range", {i});
        if (g[static_cast<std::size_t>(i)] < 0 || g[static_cast<std::size_t>(i)] >= n)
            throw Error(Errc::UnknownElement, "g(" + std::to_string(i) + ") out of range", {i});
    }
    return FinitePair{std::move(f), std::move(g)};
}

PredicateResult is_comparable_map(const FiniteSpace& space, std::span<const int> f) {
    const int n = space.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (space.comparable(x, y) &&
                !space.comparable(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
                return {Verdict::Fails, std::pair{x, y},
                        "comparable pair with incomparable images"};
    return {Verdict::Holds, std::nullopt, ""};
}

PredicateResult is_g_comparable(const FiniteSpace& space, const FinitePair& pair) {
    const int n = space.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (space.comparable(pair.gx(x), pair.gx(y)) &&
                !space.comparable(pair.fx(x), pair.fx(y)))
                return {Verdict::Fails, std::pair{x, y},
                        "comparable g-images but incomparable f-images"};
    return {Verdict::Holds, std::nullopt, ""};
}

MonotoneResult is_monotone(const FiniteSpace& space, std::span<const int> f) {
    const int n = space.size();
    MonotoneResult r;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!space.leq(x, y)) continue;
            if (r.increasing && !space.leq(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) {
                r.increasing = false;
                r.inc_break = {x, y};
            }
            if (r.decreasing && !space.leq(f[static_cast<std::size_t>(y)], f[static_cast<std::size_t>(x)])) {
                r.decreasing = false;
                r.dec_break = {x, y};
            }
        }
    return r;
}

MonotoneResult is_g_monotone(const FiniteSpace& space, const FinitePair& pair) {
    const int n = space.size();
    MonotoneResult r;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!space.leq(pair.gx(x), pair.gx(y))) continue;
            if (r.increasing && !space.leq(pair.fx(x), pair.fx(y))) {
                r.increasing = false;
                r.inc_break = {x, y};
            }
            if (r.decreasing && !space.leq(pair.fx(y), pair.fx(x))) {
                r.decreasing = false;
                r.dec_break = {x, y};
            }
        }
    return r;
}

namespace {

std::vector<std::uint8_t> image_mask(int n, std::span<const int> f) {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) in[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] = 1;
    return in;
}

}  // namespace

RangeInclusion range_inclusion(const FiniteSpace& space, const FinitePair& pair,
                               std::optional<std::span<const int>> Y) {
    const int n = space.size();
    RangeInclusion out;
    auto g_img = image_mask(n, pair.g);

    if (!Y) {
        for (int x = 0; x < n; ++x)
            if (!g_img[static_cast<std::size_t>(pair.fx(x))]) {
                out.f_sub_g = false;
                out.witness = pair.fx(x);
                out.verdict = Verdict::Fails;
                out.note = "f(" + space.label(x) + ") outside g(X)";
                return out;
            }
        return out;
    }

    std::vector<std::uint8_t> y_mask(static_cast<std::size_t>(n), 0);
    for (int y : *Y) {
        space.require_element(y);
        y_mask[static_cast<std::size_t>(y)] = 1;
    }
    out.f_sub_y = true;
    out.y_sub_g = true;
    for (int x = 0; x < n; ++x)
        if (!y_mask[static_cast<std::size_t>(pair.fx(x))]) {
            out.f_sub_y = false;
            out.witness = pair.fx(x);
            break;
        }
    for (int y : *Y)
        if (!g_img[static_cast<std::size_t>(y)]) {
            out.y_sub_g = false;
            if (!out.witness) out.witness = y;
            break;
        }
    out.f_sub_g = *out.f_sub_y && *out.y_sub_g;
    if (!out.f_sub_g) {
        out.verdict = Verdict::Fails;
        out.note = !*out.f_sub_y ? "f(X) not inside Y" : "Y not inside g(X)";
    }
    return out;
}

CommutationSuite commutation_suite(const FiniteSpace& space, const FinitePair& pair) {
    const int n = space.size();
    CommutationSuite s;

    for (int x = 0; x < n; ++x)
        if (pair.gx(pair.fx(x)) != pair.fx(pair.gx(x))) {
            s.commuting = {Verdict::Fails, std::pair{x, x}, "g(fx) != f(gx)"};
            break;
        }

    for (int x = 0; x < n; ++x) {
        const Rat& lhs = space.dist(pair.gx(pair.fx(x)), pair.fx(pair.gx(x)));
        const Rat& rhs = space.dist(pair.gx(x), pair.fx(x));
        if (lhs > rhs) {
            s.weakly_commuting = {Verdict::Fails, std::pair{x, x}, "d(gfx,fgx) > d(gx,fx)"};
            break;
        }
    }

    // Coincidence points carry both remaining verdicts.
    bool any_coincidence = false;
    std::optional<int> bad;
    for (int x = 0; x < n; ++x)
        if (pair.gx(x) == pair.fx(x)) {
            any_coincidence = true;
            if (pair.gx(pair.fx(x)) != pair.fx(pair.gx(x))) {
                bad = x;
                break;
            }
        }
    if (bad) {
        s.compatible = {Verdict::Fails, std::pair{*bad, *bad},
                        "constant sequence at a non-commuting coincidence point"};
        s.weakly_compatible = {Verdict::Fails, std::pair{*bad, *bad},
                               "f and g do not commute at this coincidence point"};
    } else if (!any_coincidence) {
        s.compatible = {Verdict::Vacuous, std::nullopt,
                        "no sequence attains equal g- and f-limits (no coincidence points)"};
        s.weakly_compatible = {Verdict::Vacuous, std::nullopt, "no coincidence points"};
    } else {
        s.compatible.note =
            "decided as weak compatibility: convergent sequences in a finite metric "
            "space are eventually constant, so equal limits force a coincidence tail";
    }
    return s;
}

ContinuitySuite continuity_suite(const FiniteSpace& space, const FinitePair& pair) {
    ContinuitySuite s;
    s.f_continuous = {Verdict::Holds, std::nullopt, "finite metric spaces are discrete"};
    s.g_continuous = {Verdict::Holds, std::nullopt, "finite metric spaces are discrete"};
    s.f_g_continuous = fiber_constancy(space, pair);
    if (s.f_g_continuous.passed())
        s.f_g_continuous.note = "f is constant on every g-fiber";
    return s;
}

PredicateResult fiber_constancy(const FiniteSpace& space, const FinitePair& pair) {
    const int n = space.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (pair.gx(a) == pair.gx(b) && pair.fx(a) != pair.fx(b))
                return {Verdict::Fails, std::pair{a, b},
                        "g(" + space.label(a) + ") = g(" + space.label(b) + ") but f-values differ"};
    return {Verdict::Holds, std::nullopt, ""};
}

AlphaEstimate estimate_alpha(const FiniteSpace& space, const FinitePair& pair) {
    const int n = space.size();
    AlphaEstimate est;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int gx = pair.gx(x), gy = pair.gx(y);
            if (gx == gy || !space.comparable(gx, gy)) continue;
            Rat ratio = space.dist(pair.fx(x), pair.fx(y)) / space.dist(gx, gy);
            if (est.vacuous || ratio > est.alpha) {
                est.alpha = ratio;
                est.argmax = {x, y};
            }
            est.vacuous = false;
        }
    est.holds = est.alpha < 1;
    return est;
}

// ---------------------------------------------------------------------------

BuiltinFn BuiltinFn::parse(const std::string& name) {
    if (name == "identity") return identity();
    if (name == "square") return square();
    if (name.rfind("affine(", 0) == 0 && name.back() == ')') {
        std::string args = name.substr(7, name.size() - 8);
        std::size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw Error(Errc::ParseError, "affine needs two rational arguments: " + name);
        return affine(parse_rat(args.substr(0, comma)), parse_rat(args.substr(comma + 1)));
    }
    throw Error(Errc::ParseError, "unknown built-in function: " + name);
}

std::string BuiltinFn::name() const {
    switch (kind_) {
        case Kind::Identity: return "identity";
        case Kind::Square: return "square";
        case Kind::Affine: return "affine(" + rat_str(p_) + "," + rat_str(q_) + ")";
    }
    return "?";
}

Rat BuiltinFn::eval(const Rat& x) const {
    switch (kind_) {
        case Kind::Identity: return x;
        case Kind::Square: return x * x;
        case Kind::Affine: return p_ * x + q_;
    }
    return x;
}

double BuiltinFn::eval(double x) const {
    switch (kind_) {
        case Kind::Identity: return x;
        case Kind::Square: return x * x;
        case Kind::Affine: return rat_to_double(p_) * x + rat_to_double(q_);
    }
    return x;
}

std::pair<Rat, Rat> BuiltinFn::image(const Rat& lo, const Rat& hi) const {
    switch (kind_) {
        case Kind::Identity: return {lo, hi};
        case Kind::Square: {
            Rat a = lo * lo, b = hi * hi;
            Rat top = std::max(a, b);
            if (lo <= 0 && 0 <= hi) return {Rat(0), top};
            return {std::min(a, b), top};
        }
        case Kind::Affine: {
            Rat a = p_ * lo + q_, b = p_ * hi + q_;
            return a <= b ? std::pair{a, b} : std::pair{b, a};
        }
    }
    return {lo, hi};
}

bool BuiltinFn::self_map_on(const IntervalSpace& X) const {
    auto [a, b] = image(X.lo(), X.hi());
    return X.lo() <= a && b <= X.hi();
}

MonotoneResult BuiltinFn::monotone_on(const Rat& lo, const Rat& hi) const {
    MonotoneResult r;
    switch (kind_) {
        case Kind::Identity:
            r.decreasing = false;
            return r;
        case Kind::Square:
            if (lo >= 0) {
                r.decreasing = false;
            } else if (hi <= 0) {
                r.increasing = false;
            } else {
                r.increasing = r.decreasing = false;  // dips at 0
            }
            return r;
        case Kind::Affine:
            if (p_ > 0) r.decreasing = false;
            else if (p_ < 0) r.increasing = false;
            return r;  // p == 0: constant, both
    }
    return r;
}

bool BuiltinFn::injective_on(const Rat& lo, const Rat& hi) const {
    switch (kind_) {
        case Kind::Identity: return true;
        case Kind::Square: return lo >= 0 || hi <= 0;
        case Kind::Affine: return p_ != 0;
    }
    return false;
}

std::optional<double> BuiltinFn::preimage(double y, const IntervalSpace& X) const {
    double x = y;
    switch (kind_) {
        case Kind::Identity: break;
        case Kind::Square: {
            if (y < 0) return std::nullopt;
            x = std::sqrt(y);
            if (!X.contains(x)) x = -x;
            break;
        }
        case Kind::Affine: {
            if (p_ == 0) {
                if (y == rat_to_double(q_) ) return X.clamp(y);
                return std::nullopt;
            }
            x = (y - rat_to_double(q_)) / rat_to_double(p_);
            break;
        }
    }
    if (!X.contains(x)) return std::nullopt;
    return x;
}

namespace {

/// Exact polynomial coefficients (c0 + c1 x + ...) of a built-in.
std::vector<Rat> poly_of(const BuiltinFn& fn) {
    switch (fn.kind()) {
        case BuiltinFn::Kind::Identity: return {Rat(0), Rat(1)};
        case BuiltinFn::Kind::Square: return {Rat(0), Rat(0), Rat(1)};
        case BuiltinFn::Kind::Affine: return {fn.q(), fn.p()};
    }
    return {};
}

std::vector<Rat> poly_compose(const std::vector<Rat>& outer, const std::vector<Rat>& inner) {
    auto mul = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    std::vector<Rat> result{Rat(0)};
    std::vector<Rat> power{Rat(1)};  // inner^k
    for (std::size_t k = 0; k < outer.size(); ++k) {
        if (result.size() < power.size()) result.resize(power.size(), Rat(0));
        for (std::size_t i = 0; i < power.size(); ++i) result[i] += outer[k] * power[i];
        power = mul(power, inner);
    }
    while (result.size() > 1 && result.back() == 0) result.pop_back();
    return result;
}

}  // namespace

bool builtins_commute(const BuiltinFn& f, const BuiltinFn& g) {
    return poly_compose(poly_of(g), poly_of(f)) == poly_compose(poly_of(f), poly_of(g));
}

double sampled_alpha(const IntervalSpace& X, const IntervalPair& pair, int grid_n) {
    if (grid_n < 2) grid_n = 2;
    const double lo = rat_to_double(X.lo()), hi = rat_to_double(X.hi());
    const double step = (hi - lo) / (grid_n - 1);
    std::vector<double> gs(static_cast<std::size_t>(grid_n)), fs(static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) {
        double x = lo + step * i;
        gs[static_cast<std::size_t>(i)] = pair.g.eval(x);
        fs[static_cast<std::size_t>(i)] = pair.f.eval(x);
    }
    double best = 0.0;
    for (int i = 0; i < grid_n; ++i)
        for (int j = i + 1; j < grid_n; ++j) {
            double dg = std::fabs(gs[static_cast<std::size_t>(i)] - gs[static_cast<std::size_t>(j)]);
            if (dg == 0.0) continue;
            double ratio = std::fabs(fs[static_cast<std::size_t>(i)] - fs[static_cast<std::size_t>(j)]) / dg;
            if (ratio > best) best = ratio;
        }
    return best;
}

Rat sampled_alpha_exact(const IntervalSpace& X, const IntervalPair& pair, int grid_n) {
    if (grid_n < 2) grid_n = 2;
    const Rat step = (X.hi() - X.lo()) / (grid_n - 1);
    std::vector<Rat> gs(static_cast<std::size_t>(grid_n)), fs(static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) {
        Rat x = X.lo() + step * i;
        gs[static_cast<std::size_t>(i)] = pair.g.eval(x);
        fs[static_cast<std::size_t>(i)] = pair.f.eval(x);
    }
    Rat best = 0;
    for (int i = 0; i < grid_n; ++i)
        for (int j = i + 1; j < grid_n; ++j) {
            Rat dg = rat_abs(gs[static_cast<std::size_t>(i)] - gs[static_cast<std::size_t>(j)]);
            if (dg == 0) continue;
            Rat ratio = rat_abs(fs[static_cast<std::size_t>(i)] - fs[static_cast<std::size_t>(j)]) / dg;
            if (ratio > best) best = std::move(ratio);
        }
    return best;
}

PredicateResult spot_check_declared(const IntervalSpace& X, const IntervalPair& pair, int grid_n) {
    // exact rational subgrid: zero-tolerance comparison with the declaration
    const int exact_n = std::min(grid_n, 250);
    if (pair.declared.alpha) {
        Rat sampled = sampled_alpha_exact(X, pair, exact_n);
        if (sampled > *pair.declared.alpha)
            return {Verdict::Fails, std::nullopt,
                    "sampled contraction ratio " + rat_str(sampled) +
                        " exceeds declared alpha " + rat_str(*pair.declared.alpha)};
    }
    // Equal g-values must carry equal f-values (square g identifies +/-x).
    if (!pair.g.injective_on(X.lo(), X.hi())) {
        const Rat step = (X.hi() - X.lo()) / (exact_n < 2 ? 1 : exact_n - 1);
        for (int i = 0; i < exact_n; ++i) {
            Rat x = X.lo() + step * i;
            Rat mirror = -x;
            if (mirror < X.lo() || mirror > X.hi() || mirror == x) continue;
            if (pair.g.eval(x) == pair.g.eval(mirror) && pair.f.eval(x) != pair.f.eval(mirror))
                return {Verdict::Fails, std::nullopt,
                        "g identifies " + rat_str(x) + " and " + rat_str(mirror) +
                            " but f separates them"};
        }
    }
    return {Verdict::Holds, std::nullopt, ""};
}

}  // namespace cofix
