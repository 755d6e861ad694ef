#include "cofix/uniqueness.hpp"

#include <algorithm>

#include "cofix/oracle.hpp"
#include "cofix/solver.hpp"

namespace cofix {

const char* to_string(UniquenessMode m) {
    switch (m) {
        case UniquenessMode::PointOfCoincidence: return "UNIQUE_POC";
        case UniquenessMode::CoincidencePoint: return "UNIQUE_COINCIDENCE_POINT";
        case UniquenessMode::CommonFixedPoint: return "UNIQUE_COMMON_FIXED_POINT";
    }
    return "?";
}

const char* to_string(UCondition c) {
    switch (c) {
        case UCondition::U0: return "u0";
        case UCondition::U01: return "u0^1";
        case UCondition::U02: return "u0^2";
        case UCondition::U1: return "u1";
        case UCondition::U2: return "u2";
    }
    return "?";
}

U0Result check_u0(const FiniteSpace& space, const FinitePair& pair) {
    const int n = space.size();
    std::vector<std::uint8_t> in_gx(static_cast<std::size_t>(n), 0);
    for (int v : pair.g) in_gx[static_cast<std::size_t>(v)] = 1;
    std::vector<int> gX;
    for (int i = 0; i < n; ++i)
        if (in_gx[static_cast<std::size_t>(i)]) gX.push_back(i);

    U0Result out;
    out.chains.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = pair.fx(x), b = pair.fx(y);
            if (!in_gx[static_cast<std::size_t>(a)] || !in_gx[static_cast<std::size_t>(b)]) {
                out.verdict = Verdict::Fails;
                out.failing_pair = {x, y};
                return out;
            }
            auto chain = find_chain(space, a, b, gX);
            if (!chain) {
                out.verdict = Verdict::Fails;
                out.failing_pair = {x, y};
                return out;
            }
            out.chains[static_cast<std::size_t>(x) * n + y] = std::move(*chain);
        }
    return out;
}

U0Reductions check_u0_reductions(const FiniteSpace& space, const FinitePair& pair) {
    const int n = space.size();
    U0Reductions out;

    std::vector<int> fX;
    {
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
        for (int v : pair.f)
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                fX.push_back(v);
            }
    }
    std::sort(fX.begin(), fX.end());
    bool total = is_totally_ordered(space, fX);
    out.u01.verdict = total ? Verdict::Holds : Verdict::Fails;
    if (!total) {
        for (std::size_t i = 0; i < fX.size() && !out.u01.pair; ++i)
            for (std::size_t j = i + 1; j < fX.size(); ++j)
                if (!space.comparable(fX[i], fX[j])) {
                    out.u01.pair = {fX[i], fX[j]};
                    break;
                }
        out.u01.note = "two incomparable f-values";
    }

    out.u02 = is_fg_directed(space, pair.f, pair.g);

    if (total) {
        out.u01_chains.resize(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int a = pair.fx(x), b = pair.fx(y);
                out.u01_chains[static_cast<std::size_t>(x) * n + y] =
                    a == b ? Chain{{a}} : Chain{{a, b}};
            }
    }
    if (out.u02.holds) {
        out.u02_chains.resize(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int a = pair.fx(x), b = pair.fx(y);
                int z = out.u02.witness[static_cast<std::size_t>(x) * n + y];
                int gz = pair.gx(z);
                std::vector<int> nodes{a};
                if (gz != nodes.back()) nodes.push_back(gz);
                if (b != nodes.back()) nodes.push_back(b);
                out.u02_chains[static_cast<std::size_t>(x) * n + y] = Chain{std::move(nodes)};
            }
    }
    return out;
}

namespace {

ChainTrace run_chain_trace(const FiniteInstance& inst, int x, int y, int n_max,
                           Chain value_chain) {
    const FiniteSpace& space = inst.space;
    const FinitePair& pair = inst.pair;
    ChainTrace trace;
    trace.alpha = estimate_alpha(space, pair).alpha;

    // Splice the endpoints: the first value is g(x) = f(x), so x itself is
    // its stored preimage, and likewise y for the last value.
    std::vector<int> row;
    row.push_back(x);
    if (value_chain.degenerate()) {
        // Equal endpoint values: the two constant endpoint sequences are the
        // whole machinery, with a single zero-width gap.
        value_chain.nodes = {value_chain.nodes.front(), value_chain.nodes.front()};
        row.push_back(y);
    } else {
        for (std::size_t i = 1; i + 1 < value_chain.nodes.size(); ++i) {
            auto z = g_preimage(pair.g, value_chain.nodes[i]);
            if (!z)
                throw Error(Errc::PreimageNotFound,
                            "chain value " + space.label(value_chain.nodes[i]) +
                                " outside g(X)");
            row.push_back(*z);
        }
        row.push_back(y);
    }
    trace.value_chain = value_chain;

    const int k = static_cast<int>(row.size());
    for (int n = 0; n <= n_max; ++n) {
        // Ladder of comparabilities across the current row.
        std::vector<Rat> gaps;
        for (int i = 0; i + 1 < k; ++i) {
            int gi = pair.gx(row[static_cast<std::size_t>(i)]);
            int gj = pair.gx(row[static_cast<std::size_t>(i + 1)]);
            if (!space.comparable(gi, gj)) {
                trace.ladder_ok = false;
                trace.broken_n = n;
                trace.broken_i = i;
                return trace;
            }
            gaps.push_back(space.dist(gi, gj));
        }
        if (!trace.t.empty()) {
            for (int i = 0; i + 1 < k; ++i)
                if (gaps[static_cast<std::size_t>(i)] >
                    trace.alpha * trace.t.back()[static_cast<std::size_t>(i)]) {
                    trace.decay_ok = false;
                    trace.broken_n = n;
                    trace.broken_i = i;
                }
        }
        Rat sum = 0;
        for (const Rat& t : gaps) sum += t;
        trace.z.push_back(row);
        trace.t.push_back(std::move(gaps));
        trace.majorant.push_back(std::move(sum));
        if (!trace.decay_ok) return trace;

        if (n == n_max) break;
        // Advance: endpoints stay constant, middle columns follow the joint
        // iteration g(z_{n+1}) = f(z_n).
        std::vector<int> next_row(row.size());
        next_row.front() = x;
        next_row.back() = y;
        for (int i = 1; i + 1 < k; ++i) {
            auto z = g_preimage(pair.g, pair.fx(row[static_cast<std::size_t>(i)]));
            if (!z)
                throw Error(Errc::PreimageNotFound,
                            "f-value outside g(X) while advancing the chain");
            next_row[static_cast<std::size_t>(i)] = *z;
        }
        row = std::move(next_row);
    }
    return trace;
}

}  // namespace

ChainTrace chain_convergence_trace(const FiniteInstance& inst, int x, int y, int n_max) {
    const FinitePair& pair = inst.pair;
    inst.space.require_element(x);
    inst.space.require_element(y);
    if (pair.gx(x) != pair.fx(x) || pair.gx(y) != pair.fx(y))
        throw Error(Errc::NotCoincidencePoints,
                    inst.space.label(x) + "," + inst.space.label(y));
    auto gX = inst.g_image();
    auto chain = find_chain(inst.space, pair.fx(x), pair.fx(y), gX);
    if (!chain)
        throw Error(Errc::NoChain, "no comparability chain between f(" + inst.space.label(x) +
                                       ") and f(" + inst.space.label(y) + ") in g(X)");
    return run_chain_trace(inst, x, y, n_max, std::move(*chain));
}

ChainTrace chain_convergence_trace(const FiniteInstance& inst, int x, int y, int n_max,
                                   const Chain& value_chain) {
    const FinitePair& pair = inst.pair;
    inst.space.require_element(x);
    inst.space.require_element(y);
    if (pair.gx(x) != pair.fx(x) || pair.gx(y) != pair.fx(y))
        throw Error(Errc::NotCoincidencePoints,
                    inst.space.label(x) + "," + inst.space.label(y));
    auto gX = inst.g_image();
    if (!chain_is_valid(inst.space, value_chain, pair.fx(x), pair.fx(y), gX))
        throw Error(Errc::NoChain, "supplied chain is not a valid f(x)->f(y) chain in g(X)");
    return run_chain_trace(inst, x, y, n_max, value_chain);
}

namespace {

bool map_injective(std::span<const int> m) {
    std::vector<std::uint8_t> seen(m.size(), 0);
    for (int v : m) {
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

}  // namespace

UniquenessCertificate certify(const FiniteInstance& inst, UniquenessMode mode,
                              int coincidence_point) {
    const FiniteSpace& space = inst.space;
    const FinitePair& pair = inst.pair;
    space.require_element(coincidence_point);
    if (pair.gx(coincidence_point) != pair.fx(coincidence_point))
        throw Error(Errc::NotCoincidencePoints, space.label(coincidence_point));

    U0Result u0 = check_u0(space, pair);
    if (!u0.passed()) {
        std::string detail = "u0";
        if (u0.failing_pair)
            detail += ": no chain for pair (" + space.label(u0.failing_pair->first) + "," +
                      space.label(u0.failing_pair->second) + ")";
        throw Error(Errc::ConditionMissing, detail);
    }

    UniquenessCertificate cert;
    cert.conditions_used.push_back(UCondition::U0);
    auto red = check_u0_reductions(space, pair);
    if (red.u01.passed()) cert.conditions_used.push_back(UCondition::U01);
    if (red.u02.holds) cert.conditions_used.push_back(UCondition::U02);
    cert.chain_witnesses = u0.chains;
    cert.unique_value = pair.gx(coincidence_point);

    OracleResult oracle = enumerate_coincidences(inst);
    if (oracle.points_of_coincidence.size() != 1 ||
        oracle.points_of_coincidence.front() != cert.unique_value)
        throw Error(Errc::OracleContradiction,
                    "chain condition certified but enumeration finds " +
                        std::to_string(oracle.points_of_coincidence.size()) +
                        " points of coincidence");

    switch (mode) {
        case UniquenessMode::PointOfCoincidence:
            cert.conclusion = UniquenessMode::PointOfCoincidence;
            cert.note = "every pair of points of coincidence collapses along a chain in g(X)";
            return cert;
        case UniquenessMode::CoincidencePoint: {
            bool f_inj = map_injective(pair.f), g_inj = map_injective(pair.g);
            if (!f_inj && !g_inj)
                throw Error(Errc::ConditionMissing, "u1: neither f nor g is one-one");
            cert.conditions_used.push_back(UCondition::U1);
            if (oracle.coincidence_points.size() != 1)
                throw Error(Errc::OracleContradiction,
                            "injectivity certified but enumeration finds " +
                                std::to_string(oracle.coincidence_points.size()) +
                                " coincidence points");
            cert.conclusion = UniquenessMode::CoincidencePoint;
            cert.unique_point = oracle.coincidence_points.front();
            cert.note = std::string(f_inj ? "f" : "g") + " is one-one";
            return cert;
        }
        case UniquenessMode::CommonFixedPoint: {
            auto comm = commutation_suite(space, pair);
            if (comm.weakly_compatible.verdict == Verdict::Fails)
                throw Error(Errc::ConditionMissing, "u2: pair is not weakly compatible");
            cert.conditions_used.push_back(UCondition::U2);
            int xbar = promote_to_common_fixed_point(inst, coincidence_point, true);
            if (oracle.common_fixed_points.size() != 1 ||
                oracle.common_fixed_points.front() != xbar)
                throw Error(Errc::OracleContradiction,
                            "promotion produced " + space.label(xbar) +
                                " but enumeration disagrees");
            cert.conclusion = UniquenessMode::CommonFixedPoint;
            cert.unique_point = xbar;
            cert.note = "weak compatibility promotes the point of coincidence";
            return cert;
        }
    }
    throw Error(Errc::ConditionMissing, "unknown mode");
}

UniquenessCertificate certify(const IntervalInstance& inst, UniquenessMode mode,
                              double fixed_value) {
    UniquenessCertificate cert;
    cert.conditions_used.push_back(UCondition::U0);
    cert.conditions_used.push_back(UCondition::U01);
    cert.note = "total order: 2-chains between any f-values";
    cert.unique_value = -1;

    const bool g_inj = inst.pair.g.injective_on(inst.space.lo(), inst.space.hi());
    switch (mode) {
        case UniquenessMode::PointOfCoincidence:
            cert.conclusion = UniquenessMode::PointOfCoincidence;
            return cert;
        case UniquenessMode::CoincidencePoint:
            if (!g_inj && !inst.pair.f.injective_on(inst.space.lo(), inst.space.hi()))
                throw Error(Errc::ConditionMissing, "u1: neither built-in is one-one");
            cert.conditions_used.push_back(UCondition::U1);
            cert.conclusion = UniquenessMode::CoincidencePoint;
            return cert;
        case UniquenessMode::CommonFixedPoint: {
            // Weak compatibility at the fixed value: g(v) = f(v) must travel
            // to g(f v) = f(g v), automatic when g is the identity.
            if (inst.pair.g.kind() != BuiltinFn::Kind::Identity) {
                double gf = inst.pair.g.eval(inst.pair.f.eval(fixed_value));
                double fg = inst.pair.f.eval(inst.pair.g.eval(fixed_value));
                if (gf != fg)
                    throw Error(Errc::ConditionMissing, "u2: pair is not weakly compatible");
            }
            cert.conditions_used.push_back(UCondition::U2);
            cert.conclusion = UniquenessMode::CommonFixedPoint;
            return cert;
        }
    }
    throw Error(Errc::ConditionMissing, "unknown mode");
}

}  // namespace cofix
