#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Graph on c.vertices() whose edges are the edges of `color`.
Graph color_class(const EdgeColoring& c, int color);

/// (u1,v1) ~ (u2,v2) iff each coordinate is equal or adjacent, and the
/// pairs differ. Vertex (u,v) is numbered u*|h|+v.
Graph strong_product(const Graph& g, const Graph& h);

/// g^r under the strong product; r >= 1.
Graph strong_power(const Graph& g, int r);

/// Exact, via maximum clique in the complement.
int independence_number(const Graph& g);

struct IndependenceBound {
    std::vector<std::size_t> set;
    /// False when the node limit stopped the search; |set| is then a
    /// certified lower bound only.
    bool exact = true;
};

/// Independence search with a node limit (0 = unlimited) and an optional
/// independent starting set.
IndependenceBound independence_search(const Graph& g, std::size_t node_limit,
                                      std::span<const std::size_t> seed = {});

bool is_independent(const Graph& g, std::span<const std::size_t> set);

/// {u * |H| + v : u in a, v in b}, independent in G strong H whenever a and b
/// are independent in G and H.
std::vector<std::size_t> product_set(std::span<const std::size_t> a, std::span<const std::size_t> b,
                                     std::size_t h_size);

struct CapacityProbe {
    /// alpha[r-1] = alpha(g^r).
    std::vector<int> alpha;
    /// max over r of alpha(g^r)^(1/r).
    double value = 0.0;
    int best_r = 0;
};

inline constexpr std::size_t default_power_budget = 4096;

/// Throws when |g|^r_max exceeds `vertex_budget`.
CapacityProbe capacity_lower(const Graph& g, int r_max,
                             std::size_t vertex_budget = default_power_budget);

}  // namespace ramsey
