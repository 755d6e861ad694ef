#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cofix/rational.hpp"
#include "cofix/verdict.hpp"

namespace cofix {

/// A finite set with a validated partial order and a validated exact-rational
/// metric. Immutable after construction; all queries are pure and
/// thread-safe.
class FiniteSpace {
public:
    /// Validates the order axioms (reflexive, antisymmetric, transitive) and
    /// the metric axioms (symmetric, zero exactly on the diagonal, triangle
    /// inequality). Throws Error naming the first violated axiom with a
    /// witness tuple. `leq` and `dist` are dense row-major n*n.
    static FiniteSpace validate(std::vector<std::string> labels,
                                std::vector<std::uint8_t> leq,
                                std::vector<Rat> dist);

    int size() const { return n_; }

    bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
    const Rat& dist(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    void require_element(int i) const {
        if (i < 0 || i >= n_) throw Error(Errc::UnknownElement, "index " + std::to_string(i), {i});
    }

    const std::vector<std::uint8_t>& order_matrix() const { return leq_; }
    const std::vector<Rat>& metric_matrix() const { return dist_; }

private:
    FiniteSpace(int n, std::vector<std::string> labels, std::vector<std::uint8_t> leq,
                std::vector<Rat> dist)
        : n_(n), labels_(std::move(labels)), leq_(std::move(leq)), dist_(std::move(dist)) {}

    int n_;
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> leq_;
    std::vector<Rat> dist_;
};

/// Closed rational-endpoint interval of the real line under the natural
/// (total) order and the absolute-difference metric. Always complete.
class IntervalSpace {
public:
    static IntervalSpace make(Rat lo, Rat hi) {
        if (!(lo < hi)) throw Error(Errc::BadShape, "interval requires lo < hi");
        return IntervalSpace(std::move(lo), std::move(hi));
    }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    bool complete() const { return true; }

    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(double x) const { return rat_to_double(lo_) <= x && x <= rat_to_double(hi_); }
    double clamp(double x) const {
        double a = rat_to_double(lo_), b = rat_to_double(hi_);
        return x < a ? a : (x > b ? b : x);
    }

private:
    IntervalSpace(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
    Rat lo_, hi_;
};

/// A finite comparability chain between `a` and `b` inside an ambient subset:
/// consecutive nodes are comparable, nodes.front() == a, nodes.back() == b.
/// A single-node chain is the degenerate a == b certificate.
struct Chain {
    std::vector<int> nodes;
    bool degenerate() const { return nodes.size() < 2; }
    int a() const { return nodes.front(); }
    int b() const { return nodes.back(); }
};

/// True iff x <= y or y <= x. Throws UnknownElement on bad indices.
bool comparable(const FiniteSpace& space, int x, int y);

/// True iff every pair of `subset` is comparable (vacuously true when empty).
bool is_totally_ordered(const FiniteSpace& space, std::span<const int> subset);

/// Shortest comparability chain from a to b through elements of `within`
/// (BFS; comparability edges are symmetric). Returns nullopt when b is
/// unreachable. a == b yields the degenerate single-node certificate.
std::optional<Chain> find_chain(const FiniteSpace& space, int a, int b,
                                std::span<const int> within);

/// Re-validates a chain against the space: endpoints, membership in
/// `within`, consecutive comparability.
bool chain_is_valid(const FiniteSpace& space, const Chain& chain, int a, int b,
                    std::span<const int> within);

/// Consecutive terms of the prefix are pairwise comparable.
bool is_termwise_monotone(const FiniteSpace& space, std::span<const int> sequence);

/// Every term of the prefix is comparable to z (z is a c-bound).
bool is_termwise_bounded_by(const FiniteSpace& space, std::span<const int> sequence, int z);

/// Result of a directedness scan: on success `witness[x*n+y]` is a z with
/// f(x), f(y) both comparable to g(z); on failure the first pair without one.
struct DirectedCheck {
    bool holds = true;
    std::vector<int> witness;  // n*n, -1 where none exists
    int fail_x = -1, fail_y = -1;
};

/// For every pair x,y there exists z with f(x) <>= g(z) and f(y) <>= g(z).
/// Pass identity index maps to recover g-directed / directed.
DirectedCheck is_fg_directed(const FiniteSpace& space, std::span<const int> f,
                             std::span<const int> g);

std::vector<int> identity_map(int n);

struct TccVerdict {
    Verdict verdict = Verdict::Holds;
    std::string note;
};

/// Finite spaces have the termwise-monotone-convergence-c-bound property
/// outright: convergent sequences are eventually constant and the constant
/// tail is c-bounded by its own limit.
TccVerdict has_tcc(const FiniteSpace& space);
TccVerdict has_g_tcc(const FiniteSpace& space, std::span<const int> g);

/// Interval spaces report the declared flag, tagged ASSERTED.
TccVerdict has_tcc(const IntervalSpace& space, std::optional<bool> declared);

}  // namespace cofix
