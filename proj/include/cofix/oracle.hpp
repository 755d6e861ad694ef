#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cofix/instance.hpp"

namespace cofix {

/// Exhaustive ground truth for a finite instance.
struct OracleResult {
    std::vector<int> coincidence_points;      // x with g(x) = f(x)
    std::vector<int> points_of_coincidence;   // distinct values g(x) over those x
    std::vector<int> common_fixed_points;     // x with x = g(x) = f(x)

    bool contains_coincidence(int x) const {
        for (int c : coincidence_points)
            if (c == x) return true;
        return false;
    }
};

OracleResult enumerate_coincidences(const FiniteInstance& inst);

/// Constraints the generator must satisfy by construction or rejection.
namespace force_flag {
inline constexpr unsigned range_inclusion = 1u << 0;
inline constexpr unsigned g_comparable = 1u << 1;
inline constexpr unsigned contraction = 1u << 2;
inline constexpr unsigned compatible = 1u << 3;
inline constexpr unsigned start_exists = 1u << 4;
inline constexpr unsigned u0 = 1u << 5;
inline constexpr unsigned monotone = 1u << 6;
inline constexpr unsigned commuting = 1u << 7;
inline constexpr unsigned g_identity = 1u << 8;
inline constexpr unsigned with_subspace = 1u << 9;  // attach a sandwich subset Y

inline constexpr unsigned t33 =
    range_inclusion | g_comparable | contraction | compatible | start_exists;
inline constexpr unsigned t43 = t33 | u0;
}  // namespace force_flag

struct GeneratorParams {
    int n = 6;
    Rat edge_density = Rat(1, 3);
    int embed_dim = 2;
    std::uint64_t seed = 0;
    unsigned force = 0;
};

/// Deterministic-in-seed random instance: the order is the reflexive
/// transitive closure of a random DAG, the metric the L1 distance between
/// distinct random rational points, and f, g built per `force` (rejection
/// sampling with an explicit budget; never silently relaxed). Throws
/// GenerationBudgetExceeded naming the failing constraint.
FiniteInstance generate(const GeneratorParams& params);

enum class TheoremId { T33, T35, T43, T45 };

const char* to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& s);

struct FalsifyOutcome {
    int trials_run = 0;
    std::optional<std::uint64_t> counterexample_seed;
    std::string violation;
    bool found() const { return counterexample_seed.has_value(); }
};

/// Generates `trials` instances satisfying the theorem's full hypothesis
/// list (re-verified by the real checkers) and tests the conclusion against
/// exhaustive enumeration. An empty outcome is the expected result; a hit
/// indicates an implementation bug.
FalsifyOutcome falsify(TheoremId theorem, int trials, const GeneratorParams& base);

/// Hand-built instance satisfying every coincidence hypothesis except
/// g-comparability and possessing no coincidence point: demonstrates that
/// the comparability hypothesis is doing real work.
FiniteInstance necessity_fixture_no_g_comparable();

}  // namespace cofix
