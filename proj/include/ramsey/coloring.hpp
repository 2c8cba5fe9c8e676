#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/params.hpp"

namespace ramsey {

/// An r-coloring of the edges of K_n. Colors are 1..r, vertices 0-based.
/// Stored as the flat upper triangle, row-major over pairs {i,j} with i < j.
/// Immutable after construction.
class EdgeColoring {
public:
    EdgeColoring(std::size_t n, int r, std::vector<std::uint16_t> upper_triangle);

    [[nodiscard]] std::size_t vertices() const noexcept { return n_; }
    [[nodiscard]] int colors() const noexcept { return r_; }
    [[nodiscard]] int color(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::span<const std::uint16_t> upper_triangle() const noexcept { return edges_; }

    /// The graph formed by the edges of one color.
    [[nodiscard]] Graph color_graph(int color) const;

    /// Vertex v of the result is vertex perm[v] of this coloring.
    [[nodiscard]] EdgeColoring relabeled(std::span<const std::size_t> perm) const;
    /// Color c becomes color_map[c-1].
    [[nodiscard]] EdgeColoring recolored(std::span<const int> color_map) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const noexcept;

    std::size_t n_;
    int r_;
    std::vector<std::uint16_t> edges_;
};

std::size_t edge_count(std::size_t n) noexcept;

EdgeColoring make_coloring(std::size_t n, int r, std::span<const int> upper_triangle);

/// Circulant coloring of K_m: edge {i,j} gets the class containing (j-i) mod m.
/// classes[c] holds the differences of color c+1; they must partition 1..m-1
/// and be closed under d -> m-d.
EdgeColoring cyclic_coloring(std::size_t m, const std::vector<std::vector<int>>& classes);

struct CliqueWitness {
    int color = 0;
    std::vector<std::size_t> vertices;

    friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

std::optional<CliqueWitness> find_mono_clique(const EdgeColoring& c, int color, int k,
                                              CliqueSearch mode = CliqueSearch::fast);

struct VerificationReport {
    bool valid = false;
    /// Clique targets in color order: targets[i] belongs to color i+1.
    std::vector<int> targets;
    std::optional<CliqueWitness> counterexample;
    std::optional<std::string> implied_fact;

    [[nodiscard]] Params params() const { return canonicalize(targets); }
};

/// Checks that no color i contains a K_{targets[i-1]}. A valid coloring on
/// n vertices certifies R(targets) >= n+1.
VerificationReport verify_witness(const EdgeColoring& c, std::span<const int> targets,
                                  CliqueSearch mode = CliqueSearch::fast);

}  // namespace ramsey
