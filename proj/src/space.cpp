#include "cofix/space.hpp"

#include <algorithm>
#include <deque>

namespace cofix {

FiniteSpace FiniteSpace::validate(std::vector<std::string> labels,
                                  std::vector<std::uint8_t> leq, std::vector<Rat> dist) {
    const int n = static_cast<int>(labels.size());
    if (n < 1) throw Error(Errc::BadShape, "space needs at least one element");
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    if (leq.size() != nn || dist.size() != nn)
        throw Error(Errc::BadShape, "order and metric must be n*n for n=" + std::to_string(n));

    auto L = [&](int i, int j) { return leq[static_cast<std::size_t>(i) * n + j] != 0; };
    auto D = [&](int i, int j) -> const Rat& { return dist[static_cast<std::size_t>(i) * n + j]; };

    for (int i = 0; i < n; ++i)
        if (!L(i, i)) throw Error(Errc::NotReflexive, labels[i], {i});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && L(i, j) && L(j, i))
                throw Error(Errc::NotAntisymmetric, labels[i] + "," + labels[j], {i, j});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!L(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (L(j, k) && !L(i, k))
                    throw Error(Errc::NotTransitive,
                                labels[i] + "," + labels[j] + "," + labels[k], {i, j, k});
        }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (D(i, j) != D(j, i))
                throw Error(Errc::MetricAsymmetric, labels[i] + "," + labels[j], {i, j});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                if (D(i, i) != 0)
                    throw Error(Errc::MetricZeroOffDiagonal, "d(" + labels[i] + "," + labels[i] + ") != 0",
                                {i, i});
            } else if (D(i, j) == 0) {
                throw Error(Errc::MetricZeroOffDiagonal, labels[i] + "," + labels[j], {i, j});
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (D(i, k) > D(i, j) + D(j, k))
                    throw Error(Errc::TriangleViolated,
                                labels[i] + "," + labels[j] + "," + labels[k], {i, j, k});

    return FiniteSpace(n, std::move(labels), std::move(leq), std::move(dist));
}

bool comparable(const FiniteSpace& space, int x, int y) {
    space.require_element(x);
    space.require_element(y);
    return space.comparable(x, y);
}

bool is_totally_ordered(const FiniteSpace& space, std::span<const int> subset) {
    for (int x : subset) space.require_element(x);
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (!space.comparable(subset[i], subset[j])) return false;
    return true;
}

std::optional<Chain> find_chain(const FiniteSpace& space, int a, int b,
                                std::span<const int> within) {
    space.require_element(a);
    space.require_element(b);
    std::vector<std::uint8_t> member(static_cast<std::size_t>(space.size()), 0);
    for (int x : within) {
        space.require_element(x);
        member[static_cast<std::size_t>(x)] = 1;
    }
    if (!member[static_cast<std::size_t>(a)])
        throw Error(Errc::ElementOutsideSubset, space.label(a), {a});
    if (!member[static_cast<std::size_t>(b)])
        throw Error(Errc::ElementOutsideSubset, space.label(b), {b});

    if (a == b) return Chain{{a}};

    // BFS over the comparability graph induced on `within`.
    std::vector<int> parent(static_cast<std::size_t>(space.size()), -2);
    std::deque<int> queue;
    parent[static_cast<std::size_t>(a)] = -1;
    queue.push_back(a);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == b) break;
        for (int v : within) {
            if (v == u || parent[static_cast<std::size_t>(v)] != -2) continue;
            if (!space.comparable(u, v)) continue;
            parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
        }
    }
    if (parent[static_cast<std::size_t>(b)] == -2) return std::nullopt;
    std::vector<int> nodes;
    for (int v = b; v != -1; v = parent[static_cast<std::size_t>(v)]) nodes.push_back(v);
    std::reverse(nodes.begin(), nodes.end());
    return Chain{std::move(nodes)};
}

bool chain_is_valid(const FiniteSpace& space, const Chain& chain, int a, int b,
                    std::span<const int> within) {
    if (chain.nodes.empty()) return false;
    if (chain.nodes.front() != a || chain.nodes.back() != b) return false;
    if (chain.degenerate()) return a == b;
    for (int x : chain.nodes) {
        bool in = false;
        for (int w : within)
            if (w == x) in = true;
        if (!in) return false;
    }
    for (std::size_t i = 0; i + 1 < chain.nodes.size(); ++i)
        if (!space.comparable(chain.nodes[i], chain.nodes[i + 1])) return false;
    return true;
}

bool is_termwise_monotone(const FiniteSpace& space, std::span<const int> sequence) {
    for (int x : sequence) space.require_element(x);
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
        if (!space.comparable(sequence[i], sequence[i + 1])) return false;
    return true;
}

bool is_termwise_bounded_by(const FiniteSpace& space, std::span<const int> sequence, int z) {
    space.require_element(z);
    for (int x : sequence) {
        space.require_element(x);
        if (!space.comparable(x, z)) return false;
    }
    return true;
}

DirectedCheck is_fg_directed(const FiniteSpace& space, std::span<const int> f,
                             std::span<const int> g) {
    const int n = space.size();
    DirectedCheck out;
    out.witness.assign(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n && out.holds; ++x)
        for (int y = 0; y < n; ++y) {
            int found = -1;
            for (int z = 0; z < n; ++z)
                if (space.comparable(f[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(z)]) &&
                    space.comparable(f[static_cast<std::size_t>(y)], g[static_cast<std::size_t>(z)])) {
                    found = z;
                    break;
                }
            out.witness[static_cast<std::size_t>(x) * n + y] = found;
            if (found < 0) {
                out.holds = false;
                out.fail_x = x;
                out.fail_y = y;
                break;
            }
        }
    return out;
}

std::vector<int> identity_map(int n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
    return id;
}

TccVerdict has_tcc(const FiniteSpace&) {
    return {Verdict::Holds,
            "finite metric: convergent sequences are eventually constant, and the "
            "constant tail is c-bounded by its own limit"};
}

TccVerdict has_g_tcc(const FiniteSpace& space, std::span<const int>) {
    return has_tcc(space);
}

TccVerdict has_tcc(const IntervalSpace&, std::optional<bool> declared) {
    if (!declared.has_value()) return {Verdict::Fails, "not declared"};
    return {*declared ? Verdict::Asserted : Verdict::Fails, "declared"};
}

}  // namespace cofix
