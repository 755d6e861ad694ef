#pragma once

// Shared test helpers: independent brute-force oracles (kept deliberately
// separate from the library implementations they check), small instance
// builders, and a minimal JSON-schema checker for the report contract.

#include <algorithm>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cofix/instance.hpp"
#include "cofix/rational.hpp"

namespace testutil {

using cofix::FiniteInstance;
using cofix::FinitePair;
using cofix::FiniteSpace;
using cofix::Rat;

// --- independent axiom oracle -----------------------------------------------

/// Plain all-triples scan of both axiom families; returns true iff the pair
/// of matrices forms an ordered metric space. Written independently of
/// FiniteSpace::validate (no early-exit structure shared).
inline bool axioms_hold(const std::vector<std::uint8_t>& leq, const std::vector<Rat>& dist,
                        int n) {
    auto L = [&](int i, int j) { return leq[static_cast<std::size_t>(i) * n + j] != 0; };
    auto D = [&](int i, int j) { return dist[static_cast<std::size_t>(i) * n + j]; };
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && L(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ok = ok && !(i != j && L(i, j) && L(j, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) ok = ok && !(L(i, j) && L(j, k) && !L(i, k));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ok = ok && D(i, j) == D(j, i);
            ok = ok && (i == j ? D(i, j) == 0 : D(i, j) > 0);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) ok = ok && D(i, k) <= D(i, j) + D(j, k);
    return ok;
}

// --- shortest-path oracle ----------------------------------------------------

/// All-pairs comparability-graph distances on the subgraph induced by
/// `within`, by Floyd-Warshall; -1 where unreachable.
inline std::vector<int> fw_distances(const FiniteSpace& space, const std::vector<int>& within) {
    const int m = static_cast<int>(within.size());
    const int INF = 1 << 28;
    std::vector<int> d(static_cast<std::size_t>(m) * m, INF);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b)
                d[static_cast<std::size_t>(a) * m + b] = 0;
            else if (space.comparable(within[static_cast<std::size_t>(a)],
                                      within[static_cast<std::size_t>(b)]))
                d[static_cast<std::size_t>(a) * m + b] = 1;
        }
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                d[static_cast<std::size_t>(a) * m + b] =
                    std::min(d[static_cast<std::size_t>(a) * m + b],
                             d[static_cast<std::size_t>(a) * m + k] +
                                 d[static_cast<std::size_t>(k) * m + b]);
    for (auto& x : d)
        if (x >= INF) x = -1;
    return d;
}

// --- exhaustive contraction oracle -------------------------------------------

/// Max of d(fx,fy)/d(gx,gy) over all ordered pairs with comparable distinct
/// g-values, by full enumeration.
inline Rat exhaustive_alpha(const FiniteSpace& space, const FinitePair& pair) {
    Rat best = 0;
    for (int x = 0; x < space.size(); ++x)
        for (int y = 0; y < space.size(); ++y) {
            int gx = pair.gx(x), gy = pair.gx(y);
            if (gx == gy || !space.comparable(gx, gy)) continue;
            Rat r = space.dist(pair.fx(x), pair.fx(y)) / space.dist(gx, gy);
            best = std::max(best, r);
        }
    return best;
}

/// Condition: every pair has a common comparable element, by brute force.
inline bool common_comparable_all_pairs(const FiniteSpace& space) {
    for (int x = 0; x < space.size(); ++x)
        for (int y = 0; y < space.size(); ++y) {
            bool found = false;
            for (int z = 0; z < space.size(); ++z)
                if (space.comparable(x, z) && space.comparable(y, z)) found = true;
            if (!found) return false;
        }
    return true;
}

// --- builders ----------------------------------------------------------------

inline std::vector<std::uint8_t> close_order(std::vector<std::uint8_t> leq, int n) {
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!leq[static_cast<std::size_t>(i) * n + k]) continue;
            for (int j = 0; j < n; ++j)
                if (leq[static_cast<std::size_t>(k) * n + j])
                    leq[static_cast<std::size_t>(i) * n + j] = 1;
        }
    return leq;
}

inline std::vector<std::string> labels_n(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

/// i <= j with d(i,j) = |i-j|.
inline FiniteSpace chain_space(int n) {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i <= j) leq[static_cast<std::size_t>(i) * n + j] = 1;
            dist[static_cast<std::size_t>(i) * n + j] = Rat(std::abs(i - j));
        }
    return FiniteSpace::validate(labels_n(n), std::move(leq), std::move(dist));
}

/// Only reflexive pairs; d(i,j) = 1 for i != j.
inline FiniteSpace antichain_space(int n) {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 0; i < n; ++i) {
        leq[static_cast<std::size_t>(i) * n + i] = 1;
        for (int j = 0; j < n; ++j)
            if (i != j) dist[static_cast<std::size_t>(i) * n + j] = Rat(1);
    }
    return FiniteSpace::validate(labels_n(n), std::move(leq), std::move(dist));
}

/// Space from Hasse cover pairs with unit-ish L1 metric d(i,j) = |i-j|.
inline FiniteSpace space_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (auto [a, b] : covers) leq[static_cast<std::size_t>(a) * n + b] = 1;
    leq = close_order(std::move(leq), n);
    std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) dist[static_cast<std::size_t>(i) * n + j] = Rat(std::abs(i - j));
    return FiniteSpace::validate(labels_n(n), std::move(leq), std::move(dist));
}

// --- minimal JSON-schema checker ----------------------------------------------

/// Supports the subset used by schema/report.schema.json: type, required,
/// properties, items, enum. Returns an error description or nullopt.
inline std::optional<std::string> schema_check(const nlohmann::json& value,
                                               const nlohmann::json& schema,
                                               const std::string& path = "$") {
    using nlohmann::json;
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "number" && value.is_number()) || (t == "boolean" && value.is_boolean());
        if (!ok) return path + ": expected type " + t;
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema["enum"])
            if (e == value) ok = true;
        if (!ok) return path + ": value not in enum";
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& r : schema["required"])
                if (!value.contains(r.get<std::string>()))
                    return path + ": missing required " + r.get<std::string>();
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()))
                    if (auto err = schema_check(value[it.key()], it.value(), path + "." + it.key()))
                        return err;
    }
    if (value.is_array() && schema.contains("items"))
        for (std::size_t i = 0; i < value.size(); ++i)
            if (auto err = schema_check(value[i], schema["items"],
                                        path + "[" + std::to_string(i) + "]"))
                return err;
    return std::nullopt;
}

}  // namespace testutil
