#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>

#include "ramsey/params.hpp"

namespace ramsey {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b)
{
    std::size_t total = 0;
    for (auto w : b)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool any(const Bits& b)
{
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t first_bit(const Bits& b)
{
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i])
            return i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
    return b.size() * 64;
}

void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

void intersect_into(Bits& out, const Bits& a, std::span<const std::uint64_t> b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] & b[i];
}

// Branch and bound over bitset candidate sets, pruned by greedy coloring
// (each color class is an independent set, so a clique takes at most one
// vertex per class). `goal` is raised as larger cliques are found when
// searching for a maximum; with `stop_at_goal` it stays fixed.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, std::size_t goal, bool stop_at_goal, std::size_t node_limit = 0)
        : g_(g), goal_(goal), stop_(stop_at_goal), node_limit_(node_limit)
    {}

    void seed(std::vector<std::size_t> clique)
    {
        if (clique.size() > best_.size()) {
            best_ = std::move(clique);
            goal_ = std::max(goal_, best_.size() + 1);
        }
    }

    [[nodiscard]] bool aborted() const noexcept { return aborted_; }
    [[nodiscard]] std::size_t nodes() const noexcept { return nodes_; }

    std::vector<std::size_t> run()
    {
        Bits all(g_.words(), 0);
        for (std::size_t v = 0; v < g_.size(); ++v)
            all[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::size_t> current;
        expand(all, current);
        return best_;
    }

private:
    void expand(Bits candidates, std::vector<std::size_t>& current)
    {
        if (node_limit_ != 0 && ++nodes_ > node_limit_) {
            aborted_ = done_ = true;
            return;
        }
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        color_sort(candidates, order, bound);
        Bits next(g_.words());
        for (std::size_t i = order.size(); i-- > 0;) {
            if (done_)
                return;
            if (current.size() + bound[i] < goal_)
                return;
            const auto v = order[i];
            current.push_back(v);
            intersect_into(next, candidates, g_.row(v));
            if (!any(next)) {
                if (current.size() >= goal_ || (!stop_ && current.size() > best_.size())) {
                    best_ = current;
                    if (stop_)
                        done_ = true;
                    else
                        goal_ = best_.size() + 1;
                }
            } else if (stop_ && current.size() >= goal_) {
                best_ = current;
                done_ = true;
            } else {
                expand(next, current);
            }
            current.pop_back();
            reset(candidates, v);
        }
    }

    void color_sort(const Bits& candidates, std::vector<std::size_t>& order,
                    std::vector<std::size_t>& bound) const
    {
        Bits uncolored = candidates;
        Bits available(g_.words());
        std::size_t color = 0;
        while (any(uncolored)) {
            ++color;
            available = uncolored;
            while (any(available)) {
                const auto v = first_bit(available);
                reset(available, v);
                reset(uncolored, v);
                auto row = g_.row(v);
                for (std::size_t w = 0; w < available.size(); ++w)
                    available[w] &= ~row[w];
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    const Graph& g_;
    std::size_t goal_;
    bool stop_;
    std::size_t node_limit_;
    std::size_t nodes_ = 0;
    bool done_ = false;
    bool aborted_ = false;
    std::vector<std::size_t> best_;
};

bool ordered_dfs(const Graph& g, std::size_t k, const Bits& candidates,
                 std::vector<std::size_t>& current)
{
    if (current.size() == k)
        return true;
    Bits rest = candidates;
    Bits next(g.words());
    while (any(rest)) {
        if (current.size() + popcount(rest) < k)
            return false;
        const auto v = first_bit(rest);
        reset(rest, v);
        current.push_back(v);
        intersect_into(next, rest, g.row(v));
        if (ordered_dfs(g, k, next, current))
            return true;
        current.pop_back();
    }
    return false;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void Graph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= n_ || v >= n_)
        throw Error("graph: vertex out of range");
    if (u == v)
        throw Error("graph: self-loop at vertex " + std::to_string(u));
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const
{
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::span<const std::uint64_t> Graph::row(std::size_t v) const
{
    return {bits_.data() + v * words_, words_};
}

std::size_t Graph::degree(std::size_t v) const
{
    std::size_t d = 0;
    for (auto w : row(v))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (std::size_t v = 0; v < n_; ++v)
        total += degree(v);
    return total / 2;
}

Graph Graph::complement() const
{
    Graph out(n_);
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (!adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

Graph complete_graph(std::size_t n)
{
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph circulant_graph(std::size_t m, std::span<const std::size_t> connections)
{
    std::vector<bool> in_set(m, false);
    for (auto d : connections) {
        if (d == 0 || d >= m)
            throw Error("circulant: difference " + std::to_string(d) + " outside 1.." +
                        std::to_string(m == 0 ? 0 : m - 1));
        in_set[d] = true;
        in_set[m - d] = true;
    }
    Graph g(m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u + 1; v < m; ++v)
            if (in_set[v - u])
                g.add_edge(u, v);
    return g;
}

std::optional<std::vector<std::size_t>> find_clique(const Graph& g, int k, CliqueSearch mode)
{
    if (k <= 0)
        return std::vector<std::size_t>{};
    const auto target = static_cast<std::size_t>(k);
    if (target > g.size())
        return std::nullopt;
    if (mode == CliqueSearch::canonical) {
        Bits all(g.words(), 0);
        for (std::size_t v = 0; v < g.size(); ++v)
            all[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::size_t> current;
        if (ordered_dfs(g, target, all, current))
            return current;
        return std::nullopt;
    }
    auto found = ColoringSearch(g, target, true).run();
    if (found.size() < target)
        return std::nullopt;
    found.resize(target);
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<std::size_t> maximum_clique(const Graph& g)
{
    if (g.size() == 0)
        return {};
    auto best = ColoringSearch(g, 1, false).run();
    std::sort(best.begin(), best.end());
    return best;
}

CliqueBound maximum_clique_bounded(const Graph& g, std::size_t node_limit,
                                   std::span<const std::size_t> seed)
{
    for (std::size_t i = 0; i < seed.size(); ++i) {
        if (seed[i] >= g.size())
            throw Error("clique seed: vertex out of range");
        for (std::size_t j = i + 1; j < seed.size(); ++j)
            if (!g.adjacent(seed[i], seed[j]))
                throw Error("clique seed: vertices " + std::to_string(seed[i]) + " and " +
                            std::to_string(seed[j]) + " are not adjacent");
    }
    CliqueBound out;
    if (g.size() == 0)
        return out;
    ColoringSearch search(g, 1, false, node_limit);
    search.seed({seed.begin(), seed.end()});
    out.clique = search.run();
    std::sort(out.clique.begin(), out.clique.end());
    out.exact = !search.aborted();
    out.nodes = search.nodes();
    return out;
}

int clique_number(const Graph& g)
{
    return static_cast<int>(maximum_clique(g).size());
}

}  // namespace ramsey
