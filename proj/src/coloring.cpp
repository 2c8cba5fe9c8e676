#include "ramsey/coloring.hpp"

#include <algorithm>

namespace ramsey {

std::size_t edge_count(std::size_t n) noexcept
{
    return n * (n == 0 ? 0 : n - 1) / 2;
}

EdgeColoring::EdgeColoring(std::size_t n, int r, std::vector<std::uint16_t> upper_triangle)
    : n_(n), r_(r), edges_(std::move(upper_triangle))
{
    if (n_ < 1)
        throw Error("coloring: vertex count must be positive");
    if (r_ < 1 || r_ > 0xffff)
        throw Error("coloring: color count must be in 1..65535");
    if (edges_.size() != edge_count(n_))
        throw Error("coloring: expected " + std::to_string(edge_count(n_)) + " edge colors for n=" +
                    std::to_string(n_) + ", got " + std::to_string(edges_.size()));
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e] < 1 || edges_[e] > r_)
            throw Error("coloring: edge " + std::to_string(e) + " has color " +
                        std::to_string(edges_[e]) + " outside 1.." + std::to_string(r_));
}

std::size_t EdgeColoring::index(std::size_t i, std::size_t j) const noexcept
{
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

int EdgeColoring::color(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_ || i == j)
        throw Error("coloring: no edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    if (i > j)
        std::swap(i, j);
    return edges_[index(i, j)];
}

Graph EdgeColoring::color_graph(int color) const
{
    if (color < 1 || color > r_)
        throw Error("coloring: color " + std::to_string(color) + " outside 1.." + std::to_string(r_));
    Graph g(n_);
    std::size_t e = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j, ++e)
            if (edges_[e] == color)
                g.add_edge(i, j);
    return g;
}

EdgeColoring EdgeColoring::relabeled(std::span<const std::size_t> perm) const
{
    if (perm.size() != n_)
        throw Error("coloring: permutation size mismatch");
    std::vector<bool> seen(n_, false);
    for (auto v : perm) {
        if (v >= n_ || seen[v])
            throw Error("coloring: not a permutation");
        seen[v] = true;
    }
    std::vector<std::uint16_t> out;
    out.reserve(edges_.size());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            out.push_back(static_cast<std::uint16_t>(color(perm[i], perm[j])));
    return {n_, r_, std::move(out)};
}

EdgeColoring EdgeColoring::recolored(std::span<const int> color_map) const
{
    if (color_map.size() != static_cast<std::size_t>(r_))
        throw Error("coloring: color map size mismatch");
    std::vector<std::uint16_t> out(edges_.size());
    std::transform(edges_.begin(), edges_.end(), out.begin(), [&](std::uint16_t c) {
        return static_cast<std::uint16_t>(color_map[c - 1]);
    });
    return {n_, r_, std::move(out)};
}

EdgeColoring make_coloring(std::size_t n, int r, std::span<const int> upper_triangle)
{
    if (upper_triangle.size() != edge_count(n))
        throw Error("coloring: expected " + std::to_string(edge_count(n)) + " edge colors for n=" +
                    std::to_string(n) + ", got " + std::to_string(upper_triangle.size()));
    std::vector<std::uint16_t> edges;
    edges.reserve(upper_triangle.size());
    for (int c : upper_triangle) {
        if (c < 1 || c > r)
            throw Error("coloring: color " + std::to_string(c) + " outside 1.." + std::to_string(r));
        edges.push_back(static_cast<std::uint16_t>(c));
    }
    return {n, r, std::move(edges)};
}

EdgeColoring cyclic_coloring(std::size_t m, const std::vector<std::vector<int>>& classes)
{
    if (m < 1)
        throw Error("cyclic: modulus must be positive");
    if (classes.empty())
        throw Error("cyclic: at least one class required");
    std::vector<int> owner(m, 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int d : classes[c]) {
            if (d < 1 || static_cast<std::size_t>(d) >= m)
                throw Error("cyclic: difference " + std::to_string(d) + " outside 1.." +
                            std::to_string(m - 1));
            if (owner[d] != 0)
                throw Error("cyclic: difference " + std::to_string(d) + " appears in two classes");
            owner[d] = static_cast<int>(c) + 1;
        }
    }
    for (std::size_t d = 1; d < m; ++d)
        if (owner[d] == 0)
            throw Error("cyclic: difference " + std::to_string(d) + " is not covered");
    for (std::size_t d = 1; d < m; ++d)
        if (owner[d] != owner[m - d])
            throw Error("cyclic: class " + std::to_string(owner[d]) + " is not symmetric (" +
                        std::to_string(d) + " without " + std::to_string(m - d) + ")");
    std::vector<std::uint16_t> edges;
    edges.reserve(edge_count(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            edges.push_back(static_cast<std::uint16_t>(owner[j - i]));
    return {m, static_cast<int>(classes.size()), std::move(edges)};
}

std::optional<CliqueWitness> find_mono_clique(const EdgeColoring& c, int color, int k,
                                              CliqueSearch mode)
{
    if (color < 1 || color > c.colors())
        throw Error("coloring: color " + std::to_string(color) + " outside 1.." +
                    std::to_string(c.colors()));
    if (k < 1)
        throw Error("coloring: clique size must be at least 1");
    if (k == 1)
        return CliqueWitness{color, {0}};
    auto clique = find_clique(c.color_graph(color), k, mode);
    if (!clique)
        return std::nullopt;
    return CliqueWitness{color, std::move(*clique)};
}

VerificationReport verify_witness(const EdgeColoring& c, std::span<const int> targets,
                                  CliqueSearch mode)
{
    if (targets.size() != static_cast<std::size_t>(c.colors()))
        throw Error("verify: " + std::to_string(targets.size()) + " clique targets for a " +
                    std::to_string(c.colors()) + "-coloring");
    VerificationReport report;
    report.targets.assign(targets.begin(), targets.end());
    for (int color = 1; color <= c.colors(); ++color) {
        if (auto clique = find_mono_clique(c, color, targets[color - 1], mode)) {
            report.counterexample = std::move(clique);
            return report;
        }
    }
    report.valid = true;
    report.implied_fact = report.params().to_string() + " >= " + std::to_string(c.vertices() + 1);
    return report;
}

}  // namespace ramsey
