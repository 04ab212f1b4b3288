#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "union_find.hpp"

// Exhaustive ground truth. A k-colored partition of G x P_n is the same
// thing as a vertex k-coloring: each coloring induces the partition into
// maximal monochromatic connected components, and two distinct parts of
// one color cannot be neighbors or they would be a single component. So
// summing y^(components) over all k^(mn) colorings gives [x^n] C_G^(k).

namespace colpart {

inline constexpr std::uint64_t default_oracle_budget = 100'000'000;

// Entry column * m + row is the color of that product vertex.
using Coloring = std::vector<int>;

// Number of connected components of G x P_n after dropping every edge
// whose endpoints have different colors.
inline int component_count(const BaseGraph& g, int n, std::span<const int> coloring) {
    const std::size_t cells = static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(n);
    if (n < 1 || coloring.size() != cells) {
        throw contract_violation("coloring has " + std::to_string(coloring.size()) + " entries, expected " +
                                 std::to_string(cells));
    }
    UnionFind uf(cells);
    for (auto [a, b] : product_edges(g, n)) {
        if (coloring[a] == coloring[b]) {
            uf.unite(a, b);
        }
    }
    return static_cast<int>(uf.set_count());
}

// k^(mn), exact.
inline BigInt coloring_count(const BaseGraph& g, int k, int n) {
    BigInt total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(g.vertex_count()) * static_cast<unsigned long>(n));
    return total;
}

// Sum over all colorings of y^(component_count). Colorings are visited in
// base-k order with flat index 0 as the least significant digit; with
// several workers the index range is cut into contiguous chunks whose
// partial counts are added in chunk order.
inline YPolynomial oracle_distribution(const BaseGraph& g, int k, int n,
                                       std::uint64_t budget = default_oracle_budget, unsigned workers = 1) {
    if (k < 1 || n < 1) {
        throw contract_violation("oracle needs k >= 1 and n >= 1");
    }
    const BigInt total_big = coloring_count(g, k, n);
    if (total_big > BigInt(std::to_string(budget))) {
        throw resource_error("oracle needs " + total_big.get_str() + " colorings, budget is " + std::to_string(budget),
                             total_big.get_str());
    }
    const auto total = static_cast<std::uint64_t>(std::stoull(total_big.get_str()));
    const std::size_t cells = static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(n);
    const std::vector<Edge> edges = product_edges(g, n);

    std::vector<std::vector<std::uint64_t>> partial(resolve_workers(workers));
    const std::size_t used = for_each_chunk(total, workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<std::uint64_t> counts(cells + 1, 0);
        std::vector<int> color(cells, 0);
        std::uint64_t rest = begin;
        for (std::size_t i = 0; i < cells; ++i) {
            color[i] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
            rest /= static_cast<std::uint64_t>(k);
        }
        UnionFind uf(cells);
        for (std::size_t idx = begin; idx < end; ++idx) {
            uf.reset(cells);
            for (auto [a, b] : edges) {
                if (color[a] == color[b]) {
                    uf.unite(a, b);
                }
            }
            ++counts[uf.set_count()];
            for (std::size_t i = 0; i < cells; ++i) {
                if (++color[i] < k) {
                    break;
                }
                color[i] = 0;
            }
        }
        partial[chunk] = std::move(counts);
    });

    std::vector<BigInt> sum(cells + 1);
    for (std::size_t c = 0; c < used; ++c) {
        for (std::size_t i = 0; i <= cells; ++i) {
            sum[i] += BigInt(std::to_string(partial[c][i]));
        }
    }
    return YPolynomial(std::move(sum));
}

} // namespace colpart
