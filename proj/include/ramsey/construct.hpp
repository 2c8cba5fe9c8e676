#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

struct BuiltinWitness {
    std::string_view name;
    /// Clique targets the coloring avoids, in color order.
    std::vector<int> targets;
    /// Difference classes when the witness is circulant.
    std::optional<std::vector<std::vector<int>>> cyclic_classes;
    std::size_t modulus = 0;
};

/// c5, wagner8, cyc13, paley17, gf16.
const std::vector<BuiltinWitness>& builtin_catalog();
const BuiltinWitness& builtin_info(std::string_view name);

/// Returns the named classical coloring. It is re-verified against its
/// declared targets on every call.
EdgeColoring builtin_witness(std::string_view name);

/// K_16 colored by the cubic-residue class of x+y in GF(2^4), x^4+x+1.
EdgeColoring gf16_coloring();

/// Blow-up of c1 by c2 on n1*n2 vertices and r1+r2 colors. Pairs (u,v) are
/// numbered u*n2+v; edges with u1 != u2 take c1's color, the rest take
/// c2's color shifted by r1. Realizes
/// R(k_1..k_r) > (R(k_1..k_i)-1)(R(k_{i+1}..k_r)-1).
EdgeColoring abbott_product(const EdgeColoring& c1, const EdgeColoring& c2);

/// Same-color product: as abbott_product but c2's colors are not shifted.
/// If color i of c1 has no K_{s_i+1} and color i of c2 has no K_{t_i+1},
/// color i of the product has no K_{s_i*t_i+1}.
EdgeColoring diagonal_product(const EdgeColoring& c1, const EdgeColoring& c2);

enum class PartitionMode { linear, cyclic };

/// Linear mode partitions 1..n; cyclic mode partitions 1..n-1 where n is the
/// modulus.
struct SumFreePartition {
    PartitionMode mode = PartitionMode::linear;
    int n = 0;
    std::vector<std::vector<int>> parts;

    friend bool operator==(const SumFreePartition&, const SumFreePartition&) = default;
};

struct SumViolation {
    int x = 0;
    int y = 0;
    int z = 0;
    /// 1-based part index.
    int part = 0;

    friend bool operator==(const SumViolation&, const SumViolation&) = default;
};

struct PartitionReport {
    bool valid = false;
    std::optional<SumViolation> violation;
};

/// Throws when the parts do not partition the ground set (or, in cyclic
/// mode, a part is not closed under d -> m-d). Otherwise reports the first
/// x <= y with x+y = z (mod m in cyclic mode) inside one part.
PartitionReport validate_partition(const SumFreePartition& p);

/// Linear: K_{n+1} on 0..n with {i,j} colored by the part of |i-j|.
/// Cyclic: the circulant coloring of K_m by the parts.
EdgeColoring schur_coloring(const SumFreePartition& p);

}  // namespace ramsey
