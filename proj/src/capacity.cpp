#include "ramsey/capacity.hpp"

#include <cmath>

namespace ramsey {

Graph color_class(const EdgeColoring& c, int color)
{
    return c.color_graph(color);
}

Graph strong_product(const Graph& g, const Graph& h)
{
    const auto ng = g.size();
    const auto nh = h.size();
    Graph out(ng * nh);
    const auto close = [](const Graph& x, std::size_t a, std::size_t b) {
        return a == b || x.adjacent(a, b);
    };
    for (std::size_t a = 0; a < ng * nh; ++a)
        for (std::size_t b = a + 1; b < ng * nh; ++b)
            if (close(g, a / nh, b / nh) && close(h, a % nh, b % nh))
                out.add_edge(a, b);
    return out;
}

Graph strong_power(const Graph& g, int r)
{
    if (r < 1)
        throw Error("strong power: exponent must be positive");
    Graph out = g;
    for (int i = 1; i < r; ++i)
        out = strong_product(out, g);
    return out;
}

int independence_number(const Graph& g)
{
    return clique_number(g.complement());
}

IndependenceBound independence_search(const Graph& g, std::size_t node_limit,
                                      std::span<const std::size_t> seed)
{
    if (!is_independent(g, seed))
        throw Error("independence seed is not an independent set");
    auto found = maximum_clique_bounded(g.complement(), node_limit, seed);
    return {std::move(found.clique), found.exact};
}

bool is_independent(const Graph& g, std::span<const std::size_t> set)
{
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] >= g.size())
            return false;
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.adjacent(set[i], set[j]))
                return false;
    }
    return true;
}

std::vector<std::size_t> product_set(std::span<const std::size_t> a, std::span<const std::size_t> b,
                                     std::size_t h_size)
{
    std::vector<std::size_t> out;
    out.reserve(a.size() * b.size());
    for (auto u : a)
        for (auto v : b)
            out.push_back(u * h_size + v);
    return out;
}

CapacityProbe capacity_lower(const Graph& g, int r_max, std::size_t vertex_budget)
{
    if (r_max < 1)
        throw Error("capacity: power must be at least 1");
    double size = 1.0;
    for (int r = 0; r < r_max; ++r)
        size *= static_cast<double>(g.size());
    if (size > static_cast<double>(vertex_budget))
        throw Error("capacity: " + std::to_string(g.size()) + "^" + std::to_string(r_max) +
                    " vertices exceeds the budget of " + std::to_string(vertex_budget));
    CapacityProbe probe;
    Graph power = g;
    for (int r = 1; r <= r_max; ++r) {
        if (r > 1)
            power = strong_product(power, g);
        const int alpha = independence_number(power);
        probe.alpha.push_back(alpha);
        const double root = std::pow(static_cast<double>(alpha), 1.0 / r);
        if (r == 1 || root > probe.value) {
            probe.value = root;
            probe.best_r = r;
        }
    }
    return probe;
}

}  // namespace ramsey
