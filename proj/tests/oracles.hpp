#pragma once

// Test-only reference implementations. Nothing here calls into the clique
// kernel or the closure engine.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ramsey/coloring.hpp"

namespace oracle {

/// Lexicographically least k-subset of 0..n-1 whose pairs all satisfy
/// `edge`, by plain enumeration of all k-subsets.
template <class Edge>
std::optional<std::vector<std::size_t>> first_clique(std::size_t n, std::size_t k, Edge edge)
{
    if (k == 0)
        return std::vector<std::size_t>{};
    if (k > n)
        return std::nullopt;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
            for (std::size_t b = a + 1; b < k && ok; ++b)
                ok = edge(idx[a], idx[b]);
        if (ok)
            return idx;
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k)
                break;
            if (i == 0)
                return std::nullopt;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

inline std::optional<std::vector<std::size_t>> mono_clique(const ramsey::EdgeColoring& c, int color,
                                                           std::size_t k)
{
    return first_clique(c.vertices(), k,
                        [&](std::size_t u, std::size_t v) { return c.color(u, v) == color; });
}

/// Largest k with a monochromatic K_k in `color`, by enumeration.
inline int mono_clique_number(const ramsey::EdgeColoring& c, int color)
{
    int best = 1;
    for (std::size_t k = 2; k <= c.vertices(); ++k) {
        if (!mono_clique(c, color, k))
            break;
        best = static_cast<int>(k);
    }
    return best;
}

inline bool witnesses(const ramsey::EdgeColoring& c, const std::vector<int>& targets)
{
    for (int color = 1; color <= c.colors(); ++color)
        if (mono_clique(c, color, static_cast<std::size_t>(targets[color - 1])))
            return false;
    return true;
}

inline ramsey::EdgeColoring random_coloring(std::mt19937_64& rng, std::size_t n, int r)
{
    std::uniform_int_distribution<int> pick(1, r);
    std::vector<int> edges(ramsey::edge_count(n));
    for (auto& e : edges)
        e = pick(rng);
    return ramsey::make_coloring(n, r, edges);
}

/// Largest independent set by subset enumeration (n <= ~25).
template <class Adjacent>
int independence_number(std::size_t n, Adjacent adjacent)
{
    int best = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const int size = __builtin_popcountll(mask);
        if (size <= best)
            continue;
        bool independent = true;
        for (std::size_t u = 0; u < n && independent; ++u)
            if (mask >> u & 1U)
                for (std::size_t v = u + 1; v < n && independent; ++v)
                    if ((mask >> v & 1U) && adjacent(u, v))
                        independent = false;
        if (independent)
            best = size;
    }
    return best;
}

}  // namespace oracle
