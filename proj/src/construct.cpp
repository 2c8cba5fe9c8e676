#include "ramsey/construct.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ramsey {

namespace {

std::vector<std::vector<int>> split_differences(int m, const std::vector<int>& first)
{
    std::vector<bool> in_first(static_cast<std::size_t>(m), false);
    for (int d : first)
        in_first[static_cast<std::size_t>(d)] = true;
    std::vector<int> rest;
    for (int d = 1; d < m; ++d)
        if (!in_first[static_cast<std::size_t>(d)])
            rest.push_back(d);
    return {first, rest};
}

std::vector<int> quadratic_residues(int p)
{
    std::vector<bool> residue(static_cast<std::size_t>(p), false);
    for (int x = 1; x < p; ++x)
        residue[static_cast<std::size_t>(x * x % p)] = true;
    std::vector<int> out;
    for (int x = 1; x < p; ++x)
        if (residue[static_cast<std::size_t>(x)])
            out.push_back(x);
    return out;
}

std::vector<BuiltinWitness> make_catalog()
{
    std::vector<BuiltinWitness> out;
    out.push_back({"c5", {3, 3}, split_differences(5, {1, 4}), 5});
    out.push_back({"wagner8", {3, 4}, split_differences(8, {1, 4, 7}), 8});
    out.push_back({"cyc13", {3, 5}, split_differences(13, {1, 5, 8, 12}), 13});
    out.push_back({"paley17", {4, 4}, split_differences(17, quadratic_residues(17)), 17});
    out.push_back({"gf16", {3, 3, 3}, std::nullopt, 0});
    return out;
}

}  // namespace

const std::vector<BuiltinWitness>& builtin_catalog()
{
    static const auto catalog = make_catalog();
    return catalog;
}

const BuiltinWitness& builtin_info(std::string_view name)
{
    for (const auto& b : builtin_catalog())
        if (b.name == name)
            return b;
    throw Error("unknown builtin witness '" + std::string(name) +
                "' (expected c5, wagner8, cyc13, paley17, gf16)");
}

EdgeColoring builtin_witness(std::string_view name)
{
    const auto& info = builtin_info(name);
    auto coloring = info.cyclic_classes ? cyclic_coloring(info.modulus, *info.cyclic_classes)
                                        : gf16_coloring();
    if (!verify_witness(coloring, info.targets).valid)
        throw std::logic_error("builtin witness '" + std::string(name) +
                               "' fails its declared verification");
    return coloring;
}

EdgeColoring gf16_coloring()
{
    // Powers of the generator x modulo x^4 + x + 1.
    std::array<int, 16> log_table{};
    int element = 1;
    for (int e = 0; e < 15; ++e) {
        log_table[static_cast<std::size_t>(element)] = e;
        element <<= 1;
        if (element & 0x10)
            element ^= 0x13;
    }
    constexpr std::size_t n = 16;
    std::vector<std::uint16_t> edges;
    edges.reserve(edge_count(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            edges.push_back(static_cast<std::uint16_t>(log_table[x ^ y] % 3 + 1));
    return {n, 3, std::move(edges)};
}

namespace {

EdgeColoring product(const EdgeColoring& c1, const EdgeColoring& c2, int shift, int colors)
{
    const auto n1 = c1.vertices();
    const auto n2 = c2.vertices();
    const auto n = n1 * n2;
    std::vector<std::uint16_t> edges;
    edges.reserve(edge_count(n));
    for (std::size_t a = 0; a < n; ++a) {
        const auto u1 = a / n2;
        const auto v1 = a % n2;
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto u2 = b / n2;
            const auto v2 = b % n2;
            const int c = u1 != u2 ? c1.color(u1, u2) : shift + c2.color(v1, v2);
            edges.push_back(static_cast<std::uint16_t>(c));
        }
    }
    return {n, colors, std::move(edges)};
}

}  // namespace

EdgeColoring abbott_product(const EdgeColoring& c1, const EdgeColoring& c2)
{
    return product(c1, c2, c1.colors(), c1.colors() + c2.colors());
}

EdgeColoring diagonal_product(const EdgeColoring& c1, const EdgeColoring& c2)
{
    if (c1.colors() != c2.colors())
        throw Error("diagonal product: color counts differ (" + std::to_string(c1.colors()) +
                    " vs " + std::to_string(c2.colors()) + ")");
    return product(c1, c2, 0, c1.colors());
}

PartitionReport validate_partition(const SumFreePartition& p)
{
    const bool cyclic = p.mode == PartitionMode::cyclic;
    const int top = cyclic ? p.n - 1 : p.n;
    if (p.n < 1)
        throw Error("partition: ground-set size must be positive");
    if (p.parts.empty())
        throw Error("partition: at least one part required");
    std::vector<int> owner(static_cast<std::size_t>(top) + 1, 0);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        for (int x : p.parts[i]) {
            if (x < 1 || x > top)
                throw Error("partition: element " + std::to_string(x) + " outside 1.." +
                            std::to_string(top));
            if (owner[static_cast<std::size_t>(x)] != 0)
                throw Error("partition: element " + std::to_string(x) + " appears twice");
            owner[static_cast<std::size_t>(x)] = static_cast<int>(i) + 1;
        }
    }
    for (int x = 1; x <= top; ++x)
        if (owner[static_cast<std::size_t>(x)] == 0)
            throw Error("partition: element " + std::to_string(x) + " is not covered");
    if (cyclic)
        for (int x = 1; x <= top; ++x)
            if (owner[static_cast<std::size_t>(x)] != owner[static_cast<std::size_t>(p.n - x)])
                throw Error("partition: part " + std::to_string(owner[static_cast<std::size_t>(x)]) +
                            " is not symmetric under d -> " + std::to_string(p.n) + "-d");

    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const int part = static_cast<int>(i) + 1;
        std::vector<int> sorted = p.parts[i];
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t a = 0; a < sorted.size(); ++a) {
            for (std::size_t b = a; b < sorted.size(); ++b) {
                int z = sorted[a] + sorted[b];
                if (cyclic)
                    z %= p.n;
                if (z >= 1 && z <= top && owner[static_cast<std::size_t>(z)] == part)
                    return {false, SumViolation{sorted[a], sorted[b], z, part}};
            }
        }
    }
    return {true, std::nullopt};
}

EdgeColoring schur_coloring(const SumFreePartition& p)
{
    auto report = validate_partition(p);
    if (!report.valid) {
        const auto& v = *report.violation;
        throw Error("schur: part " + std::to_string(v.part) + " is not sum-free (" +
                    std::to_string(v.x) + "+" + std::to_string(v.y) + "=" + std::to_string(v.z) + ")");
    }
    if (p.mode == PartitionMode::cyclic)
        return cyclic_coloring(static_cast<std::size_t>(p.n), p.parts);

    std::vector<int> owner(static_cast<std::size_t>(p.n) + 1, 0);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int x : p.parts[i])
            owner[static_cast<std::size_t>(x)] = static_cast<int>(i) + 1;
    const auto vertices = static_cast<std::size_t>(p.n) + 1;
    std::vector<std::uint16_t> edges;
    edges.reserve(edge_count(vertices));
    for (std::size_t i = 0; i < vertices; ++i)
        for (std::size_t j = i + 1; j < vertices; ++j)
            edges.push_back(static_cast<std::uint16_t>(owner[j - i]));
    return {vertices, static_cast<int>(p.parts.size()), std::move(edges)};
}

}  // namespace ramsey
