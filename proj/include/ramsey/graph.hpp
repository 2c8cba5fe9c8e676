#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ramsey {

/// Simple undirected graph stored as dense adjacency bitsets.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t words() const noexcept { return words_; }

    /// Self-loops are rejected.
    void add_edge(std::size_t u, std::size_t v);
    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const;
    [[nodiscard]] std::span<const std::uint64_t> row(std::size_t v) const;

    [[nodiscard]] std::size_t degree(std::size_t v) const;
    [[nodiscard]] std::size_t edge_count() const;

    [[nodiscard]] Graph complement() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph complete_graph(std::size_t n);

/// Circulant graph on Z_m; the connection set is closed under d -> m-d.
Graph circulant_graph(std::size_t m, std::span<const std::size_t> connections);

enum class CliqueSearch {
    /// Branch-and-bound with greedy-coloring bounds; returns some clique.
    fast,
    /// Ordered DFS; returns the lexicographically least clique.
    canonical,
};

/// Exact search for a clique on exactly k vertices. Vertices are returned
/// strictly increasing. k <= 0 yields an empty clique.
std::optional<std::vector<std::size_t>> find_clique(const Graph& g, int k,
                                                    CliqueSearch mode = CliqueSearch::fast);

std::vector<std::size_t> maximum_clique(const Graph& g);

int clique_number(const Graph& g);

struct CliqueBound {
    std::vector<std::size_t> clique;
    /// False when the node limit stopped the search; `clique` is then only
    /// the largest one found.
    bool exact = true;
    std::size_t nodes = 0;
};

/// Maximum clique search that gives up after `node_limit` search nodes
/// (0 = unlimited). `seed`, if given, must be a clique and starts the search.
CliqueBound maximum_clique_bounded(const Graph& g, std::size_t node_limit,
                                   std::span<const std::size_t> seed = {});

}  // namespace ramsey
