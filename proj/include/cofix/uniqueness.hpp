#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofix/instance.hpp"
#include "cofix/verdict.hpp"

namespace cofix {

/// Chain condition (u0): for every pair x, y there is a comparability chain
/// between f(x) and f(y) inside g(X).
struct U0Result {
    Verdict verdict = Verdict::Holds;
    std::vector<Chain> chains;  // per pair, row-major x*n + y
    std::optional<std::pair<int, int>> failing_pair;
    bool passed() const { return passes(verdict); }
};

U0Result check_u0(const FiniteSpace& space, const FinitePair& pair);

/// The two sufficient reductions: (u0^1) f(X) totally ordered gives 2-chains
/// {fx, fy}; (u0^2) the space (f,g)-directed gives 3-chains {fx, gz, fy}.
struct U0Reductions {
    PredicateResult u01;
    DirectedCheck u02;
    std::vector<Chain> u01_chains;  // row-major, set iff u01 holds
    std::vector<Chain> u02_chains;  // row-major, set iff u02 holds
};

U0Reductions check_u0_reductions(const FiniteSpace& space, const FinitePair& pair);

/// The chain-contraction record between two coincidence points x and y:
/// k parallel joint-iteration sequences z_n^i pinned to constant endpoints
/// z_n^1 = x, z_n^k = y, the comparability ladder across each row, and the
/// gap widths t_n^i = d(g z_n^i, g z_n^{i+1}) which must decay by alpha each
/// step. majorant[n] = sum_i t_n^i dominates d(gx, gy) by the triangle
/// inequality.
struct ChainTrace {
    Chain value_chain;                 // chain of g-values (element ids)
    std::vector<std::vector<int>> z;   // z[n][i], n rows, k columns
    std::vector<std::vector<Rat>> t;   // t[n][i], k-1 columns
    std::vector<Rat> majorant;
    Rat alpha;
    bool ladder_ok = true;
    bool decay_ok = true;
    int broken_n = -1, broken_i = -1;
    int k() const { return static_cast<int>(z.empty() ? 0 : z.front().size()); }
};

/// Uses the stored preimage policy and the shortest chain between f(x) and
/// f(y) in g(X). Throws NotCoincidencePoints / NoChain.
ChainTrace chain_convergence_trace(const FiniteInstance& inst, int x, int y, int n_max);

/// Same, along an explicitly supplied value chain (e.g. a certificate
/// witness); the chain must run from f(x) to f(y) inside g(X).
ChainTrace chain_convergence_trace(const FiniteInstance& inst, int x, int y, int n_max,
                                   const Chain& value_chain);

enum class UniquenessMode { PointOfCoincidence, CoincidencePoint, CommonFixedPoint };

const char* to_string(UniquenessMode m);

enum class UCondition { U0, U01, U02, U1, U2 };

const char* to_string(UCondition c);

/// Auditable uniqueness certificate: embeds its chain witnesses so a
/// verifier can re-check them without re-running the search, and records
/// which conditions backed the conclusion.
struct UniquenessCertificate {
    UniquenessMode conclusion;
    std::vector<UCondition> conditions_used;
    int unique_value = -1;            // the unique point of coincidence
    std::optional<int> unique_point;  // unique coincidence / common fixed point
    std::vector<Chain> chain_witnesses;
    std::string note;
};

/// Certifies uniqueness at the requested level. Requires existence
/// (a coincidence point from the solver). Cross-checks every certificate
/// against exhaustive enumeration before issuing it; a contradiction is
/// surfaced loudly as OracleContradiction. Throws ConditionMissing naming
/// the absent condition.
UniquenessCertificate certify(const FiniteInstance& inst, UniquenessMode mode,
                              int coincidence_point);

/// Continuous counterpart for interval instances: the total order supplies
/// the chain condition, injectivity and commutation of the built-ins decide
/// u1/u2 analytically.
UniquenessCertificate certify(const IntervalInstance& inst, UniquenessMode mode,
                              double fixed_value);

}  // namespace cofix
