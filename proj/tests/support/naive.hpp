#pragma once

// Test-only reference implementations. They are written from the
// definitions and share no code path with the engines under test: the
// product graph is built as an explicit adjacency matrix, components are
// found by depth-first search, and colored partitions are enumerated as set
// partitions rather than as colorings.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace naive {

// Adjacency matrix of G x P_n with G given by (m, edge list).
inline std::vector<std::vector<bool>> product_matrix(int m, const std::vector<std::pair<int, int>>& g_edges, int n) {
    const int cells = m * n;
    std::vector<std::vector<bool>> adj(cells, std::vector<bool>(cells, false));
    for (int c = 0; c < n; ++c) {
        for (auto [u, v] : g_edges) {
            adj[c * m + u][c * m + v] = adj[c * m + v][c * m + u] = true;
        }
        if (c + 1 < n) {
            for (int r = 0; r < m; ++r) {
                adj[c * m + r][(c + 1) * m + r] = adj[(c + 1) * m + r][c * m + r] = true;
            }
        }
    }
    return adj;
}

inline int components(const std::vector<std::vector<bool>>& adj, const std::vector<int>& color) {
    const int cells = static_cast<int>(adj.size());
    std::vector<bool> seen(cells, false);
    int count = 0;
    for (int s = 0; s < cells; ++s) {
        if (seen[s]) {
            continue;
        }
        ++count;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < cells; ++w) {
                if (adj[v][w] && !seen[w] && color[w] == color[v]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

// counts[i] = number of colorings with exactly i monochromatic components.
inline std::vector<std::uint64_t> coloring_distribution(int m, const std::vector<std::pair<int, int>>& g_edges, int k,
                                                        int n) {
    const auto adj = product_matrix(m, g_edges, n);
    const int cells = m * n;
    std::vector<std::uint64_t> counts(cells + 1, 0);
    std::vector<int> color(cells, 0);
    for (;;) {
        ++counts[components(adj, color)];
        int i = 0;
        while (i < cells && ++color[i] == k) {
            color[i++] = 0;
        }
        if (i == cells) {
            break;
        }
    }
    while (counts.size() > 1 && counts.back() == 0) {
        counts.pop_back();
    }
    return counts;
}

// Direct count of k-colored partitions: enumerate set partitions of the
// product vertices (as restricted growth strings), keep those whose blocks
// induce connected subgraphs, and count colorings of the blocks where
// neighboring blocks differ.
inline std::vector<std::uint64_t> partition_distribution(int m, const std::vector<std::pair<int, int>>& g_edges, int k,
                                                         int n) {
    const auto adj = product_matrix(m, g_edges, n);
    const int cells = m * n;
    std::vector<std::uint64_t> counts(cells + 1, 0);
    std::vector<int> block(cells, 0);

    auto blocks_connected = [&](int nb) {
        for (int b = 0; b < nb; ++b) {
            std::vector<int> members;
            for (int v = 0; v < cells; ++v) {
                if (block[v] == b) {
                    members.push_back(v);
                }
            }
            std::vector<bool> seen(cells, false);
            std::vector<int> stack{members.front()};
            seen[members.front()] = true;
            std::size_t reached = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int w = 0; w < cells; ++w) {
                    if (adj[v][w] && !seen[w] && block[w] == b) {
                        seen[w] = true;
                        ++reached;
                        stack.push_back(w);
                    }
                }
            }
            if (reached != members.size()) {
                return false;
            }
        }
        return true;
    };

    auto proper_block_colorings = [&](int nb) {
        std::vector<std::vector<bool>> nbr(nb, std::vector<bool>(nb, false));
        for (int v = 0; v < cells; ++v) {
            for (int w = 0; w < cells; ++w) {
                if (adj[v][w] && block[v] != block[w]) {
                    nbr[block[v]][block[w]] = true;
                }
            }
        }
        std::uint64_t total = 0;
        std::vector<int> c(nb, 0);
        for (;;) {
            bool ok = true;
            for (int a = 0; a < nb && ok; ++a) {
                for (int b = a + 1; b < nb && ok; ++b) {
                    ok = !(nbr[a][b] && c[a] == c[b]);
                }
            }
            total += ok ? 1 : 0;
            int i = 0;
            while (i < nb && ++c[i] == k) {
                c[i++] = 0;
            }
            if (i == nb) {
                break;
            }
        }
        return total;
    };

    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == cells) {
            if (blocks_connected(used)) {
                counts[used] += proper_block_colorings(used);
            }
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[v] = b;
            rec(v + 1, b == used ? used + 1 : used);
        }
    };
    block[0] = 0;
    rec(1, 1);
    while (counts.size() > 1 && counts.back() == 0) {
        counts.pop_back();
    }
    return counts;
}

// Sum over colorings of the component count (the y-derivative at y = 1).
inline std::uint64_t total_components(const std::vector<std::uint64_t>& dist) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        s += i * dist[i];
    }
    return s;
}

} // namespace naive
