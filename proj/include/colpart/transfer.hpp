#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "union_find.hpp"

// Column-by-column transfer-matrix DP for C_G^(k)(x, y).
//
// A state records the colors of the most recent column together with which
// of its vertices are already joined through earlier columns, encoded as a
// restricted growth string (RGS). Moving to the next column, an old block
// survives iff some vertex of it keeps its color in the same row; blocks
// that do not survive are closed and contribute a factor y each. Blocks
// still open after the last column are closed at the end.

namespace colpart {

inline constexpr std::size_t default_state_cap = 200'000;

struct ColumnState {
    std::vector<std::uint16_t> coloring;
    std::vector<std::uint16_t> blocks;

    std::size_t block_count() const {
        return blocks.empty() ? 0 : static_cast<std::size_t>(*std::max_element(blocks.begin(), blocks.end())) + 1;
    }

    friend auto operator<=>(const ColumnState&, const ColumnState&) = default;
    friend bool operator==(const ColumnState&, const ColumnState&) = default;
};

using WeightedStateMap = std::map<ColumnState, YPolynomial>;

struct TransferOptions {
    std::size_t state_cap = default_state_cap;
    unsigned workers = 1;
};

// [x^n] C_G^(k)(x, y) for n = 0..n_max. Entry 0 is the constant 1 (the
// empty product); everything user-facing starts at n = 1.
class SeriesInX {
public:
    SeriesInX() : terms_{YPolynomial(BigInt(1))} {}
    explicit SeriesInX(std::vector<YPolynomial> terms) : terms_(std::move(terms)) {
        if (terms_.empty() || !(terms_.front() == YPolynomial(BigInt(1)))) {
            throw contract_violation("series must start with the constant term 1");
        }
    }

    std::size_t n_max() const noexcept { return terms_.size() - 1; }
    const YPolynomial& term(std::size_t n) const { return terms_.at(n); }
    const std::vector<YPolynomial>& terms() const noexcept { return terms_; }

    void push_back(YPolynomial p) { terms_.push_back(std::move(p)); }

    friend bool operator==(const SeriesInX&, const SeriesInX&) = default;

private:
    std::vector<YPolynomial> terms_;
};

namespace detail {

// Relabel union-find roots of nodes [first, first + m) into an RGS.
inline std::vector<std::uint16_t> rgs_from_roots(UnionFind& uf, std::size_t first, std::size_t m) {
    std::vector<std::uint16_t> out(m);
    std::vector<std::pair<std::size_t, std::uint16_t>> seen;
    for (std::size_t v = 0; v < m; ++v) {
        const std::size_t root = uf.find(first + v);
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == root; });
        if (it == seen.end()) {
            seen.emplace_back(root, static_cast<std::uint16_t>(seen.size()));
            out[v] = seen.back().second;
        } else {
            out[v] = it->second;
        }
    }
    return out;
}

inline void check_column_coloring(const BaseGraph& g, int k, std::span<const int> coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw contract_violation("column coloring has wrong length");
    }
    for (int c : coloring) {
        if (c < 0 || c >= k) {
            throw contract_violation("color out of range");
        }
    }
}

// Advance a base-k odometer, least significant digit first. False on wrap.
inline bool next_coloring(std::vector<int>& c, int k) {
    for (auto& d : c) {
        if (++d < k) {
            return true;
        }
        d = 0;
    }
    return false;
}

inline void check_engine_args(const BaseGraph& g, int k, std::size_t state_cap) {
    if (k < 1 || k > 65535 || g.vertex_count() > 65535) {
        throw contract_violation("transfer engine needs 1 <= k <= 65535");
    }
    BigInt colorings;
    mpz_ui_pow_ui(colorings.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(g.vertex_count()));
    if (colorings > BigInt(std::to_string(state_cap))) {
        throw resource_error("a single column already has " + colorings.get_str() + " colorings, state cap is " +
                                 std::to_string(state_cap),
                             colorings.get_str());
    }
}

} // namespace detail

// The state of a first column: blocks are the components of the
// same-colored subgraph of G.
inline ColumnState column_state_for(const BaseGraph& g, std::span<const int> coloring) {
    const auto m = static_cast<std::size_t>(g.vertex_count());
    UnionFind uf(m);
    for (auto [u, v] : g.edges()) {
        if (coloring[u] == coloring[v]) {
            uf.unite(u, v);
        }
    }
    ColumnState s;
    s.coloring.assign(coloring.begin(), coloring.end());
    s.blocks = detail::rgs_from_roots(uf, 0, m);
    return s;
}

// RGS canonical, blocks monochromatic, and same-colored G-neighbors share a
// block.
inline bool is_valid_state(const BaseGraph& g, int k, const ColumnState& s) {
    const auto m = static_cast<std::size_t>(g.vertex_count());
    if (s.coloring.size() != m || s.blocks.size() != m) {
        return false;
    }
    std::uint16_t next_label = 0;
    for (std::size_t v = 0; v < m; ++v) {
        if (s.coloring[v] >= k || s.blocks[v] > next_label) {
            return false;
        }
        if (s.blocks[v] == next_label) {
            ++next_label;
        }
    }
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = u + 1; v < m; ++v) {
            if (s.blocks[u] == s.blocks[v] && s.coloring[u] != s.coloring[v]) {
                return false;
            }
        }
    }
    for (auto [u, v] : g.edges()) {
        if (s.coloring[u] == s.coloring[v] && s.blocks[u] != s.blocks[v]) {
            return false;
        }
    }
    return true;
}

// One state per column coloring, weight 1.
inline WeightedStateMap initial_states(const BaseGraph& g, int k, std::size_t state_cap = default_state_cap) {
    detail::check_engine_args(g, k, state_cap);
    WeightedStateMap out;
    std::vector<int> c(static_cast<std::size_t>(g.vertex_count()), 0);
    do {
        out.emplace(column_state_for(g, c), YPolynomial(BigInt(1)));
    } while (detail::next_coloring(c, k));
    return out;
}

struct Transition {
    ColumnState state;
    int closed_count = 0;
};

// Append a column colored `next` to state `s`. Union-find nodes 0..B-1 are
// the old blocks, B..B+m-1 the new column's vertices.
inline Transition transition(const BaseGraph& g, int k, const ColumnState& s, std::span<const int> next) {
    detail::check_column_coloring(g, k, next);
    const auto m = static_cast<std::size_t>(g.vertex_count());
    const std::size_t old_blocks = s.block_count();
    UnionFind uf(old_blocks + m);
    for (auto [u, v] : g.edges()) {
        if (next[u] == next[v]) {
            uf.unite(old_blocks + u, old_blocks + v);
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        if (static_cast<int>(s.coloring[r]) == next[r]) {
            uf.unite(s.blocks[r], old_blocks + r);
        }
    }
    std::vector<bool> live_root(old_blocks + m, false);
    for (std::size_t r = 0; r < m; ++r) {
        live_root[uf.find(old_blocks + r)] = true;
    }
    int closed = 0;
    for (std::size_t b = 0; b < old_blocks; ++b) {
        if (!live_root[uf.find(b)]) {
            ++closed;
        }
    }
    Transition t;
    t.state.coloring.assign(next.begin(), next.end());
    t.state.blocks = detail::rgs_from_roots(uf, old_blocks, m);
    t.closed_count = closed;
    return t;
}

// Sum of weight * y^(open blocks) over the live states.
inline YPolynomial close_all(const WeightedStateMap& states) {
    YPolynomial out;
    for (const auto& [s, w] : states) {
        out.add_shifted(w, s.block_count());
    }
    return out;
}

// One DP step: every state followed by every column coloring. With several
// workers, contiguous runs of states are expanded independently and merged
// in order.
inline WeightedStateMap advance(const BaseGraph& g, int k, const WeightedStateMap& current,
                                const TransferOptions& opts = {}) {
    std::vector<const WeightedStateMap::value_type*> items;
    items.reserve(current.size());
    for (const auto& kv : current) {
        items.push_back(&kv);
    }
    const auto too_many = [&](std::size_t observed) {
        return resource_error("transfer state space reached " + std::to_string(observed) + " states, cap is " +
                                  std::to_string(opts.state_cap),
                              std::to_string(observed));
    };

    std::vector<WeightedStateMap> partial(resolve_workers(opts.workers));
    const std::size_t used =
        for_each_chunk(items.size(), opts.workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            WeightedStateMap local;
            std::vector<int> c(static_cast<std::size_t>(g.vertex_count()));
            for (std::size_t i = begin; i < end; ++i) {
                const auto& [state, weight] = *items[i];
                std::fill(c.begin(), c.end(), 0);
                do {
                    Transition t = transition(g, k, state, c);
                    local[std::move(t.state)].add_shifted(weight, static_cast<std::size_t>(t.closed_count));
                } while (detail::next_coloring(c, k));
                if (local.size() > opts.state_cap) {
                    throw too_many(local.size());
                }
            }
            partial[chunk] = std::move(local);
        });

    WeightedStateMap next = std::move(partial[0]);
    for (std::size_t c = 1; c < used; ++c) {
        for (auto& [s, w] : partial[c]) {
            next[s] += w;
        }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    if (next.size() > opts.state_cap) {
        throw too_many(next.size());
    }
    return next;
}

// Terms 0..n_max of C_G^(k)(x, y) by direct DP over weighted states.
inline SeriesInX series(const BaseGraph& g, int k, std::size_t n_max, const TransferOptions& opts = {}) {
    if (n_max < 1) {
        throw contract_violation("series needs n_max >= 1");
    }
    SeriesInX out;
    WeightedStateMap states = initial_states(g, k, opts.state_cap);
    out.push_back(close_all(states));
    for (std::size_t n = 2; n <= n_max; ++n) {
        states = advance(g, k, states, opts);
        out.push_back(close_all(states));
    }
    return out;
}

// The same DP written as a matrix: term n = final^T M^(n-1) init.
struct TransferMatrix {
    std::vector<ColumnState> states;
    // by_source[i] lists (j, M[j][i]) for the nonzero entries of column i.
    std::vector<std::vector<std::pair<std::size_t, YPolynomial>>> by_source;
    std::vector<YPolynomial> init;
    std::vector<YPolynomial> final_weights;

    std::size_t dimension() const noexcept { return states.size(); }

    YPolynomial entry(std::size_t row, std::size_t col) const {
        for (const auto& [j, w] : by_source.at(col)) {
            if (j == row) {
                return w;
            }
        }
        return {};
    }

    std::vector<std::vector<YPolynomial>> dense() const {
        std::vector<std::vector<YPolynomial>> m(dimension(), std::vector<YPolynomial>(dimension()));
        for (std::size_t i = 0; i < dimension(); ++i) {
            for (const auto& [j, w] : by_source[i]) {
                m[j][i] = w;
            }
        }
        return m;
    }

    std::vector<YPolynomial> apply(const std::vector<YPolynomial>& v) const {
        std::vector<YPolynomial> out(dimension());
        for (std::size_t i = 0; i < dimension(); ++i) {
            if (v[i].is_zero()) {
                continue;
            }
            for (const auto& [j, w] : by_source[i]) {
                const auto ws = w.coefficients();
                for (std::size_t e = 0; e < ws.size(); ++e) {
                    out[j].add_scaled_shifted(v[i], ws[e], e);
                }
            }
        }
        return out;
    }

    SeriesInX series(std::size_t n_max) const {
        SeriesInX out;
        std::vector<YPolynomial> v = init;
        for (std::size_t n = 1; n <= n_max; ++n) {
            if (n > 1) {
                v = apply(v);
            }
            YPolynomial term;
            for (std::size_t i = 0; i < dimension(); ++i) {
                const auto fs = final_weights[i].coefficients();
                for (std::size_t e = 0; e < fs.size(); ++e) {
                    term.add_scaled_shifted(v[i], fs[e], e);
                }
            }
            out.push_back(std::move(term));
        }
        return out;
    }
};

// Reachable states, discovered breadth-first from the initial states. Each
// BFS layer is sorted lexicographically by (coloring, RGS) before being
// numbered, so the ordering does not depend on hash or thread order.
inline TransferMatrix transfer_matrix(const BaseGraph& g, int k, const TransferOptions& opts = {}) {
    TransferMatrix tm;
    std::map<ColumnState, std::size_t> index;
    for (const auto& [s, w] : initial_states(g, k, opts.state_cap)) {
        index.emplace(s, tm.states.size());
        tm.states.push_back(s);
    }
    tm.init.assign(tm.states.size(), YPolynomial(BigInt(1)));

    std::size_t layer_begin = 0;
    std::vector<int> c(static_cast<std::size_t>(g.vertex_count()));
    while (layer_begin < tm.states.size()) {
        const std::size_t layer_end = tm.states.size();
        std::set<ColumnState> discovered;
        std::vector<std::map<ColumnState, YPolynomial>> pending(layer_end - layer_begin);
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            std::fill(c.begin(), c.end(), 0);
            do {
                Transition t = transition(g, k, tm.states[i], c);
                if (!index.contains(t.state)) {
                    discovered.insert(t.state);
                }
                pending[i - layer_begin][std::move(t.state)] +=
                    YPolynomial::monomial(BigInt(1), static_cast<std::size_t>(t.closed_count));
            } while (detail::next_coloring(c, k));
        }
        for (const auto& s : discovered) {
            index.emplace(s, tm.states.size());
            tm.states.push_back(s);
            if (tm.states.size() > opts.state_cap) {
                throw resource_error("transfer state space reached " + std::to_string(tm.states.size()) +
                                         " states, cap is " + std::to_string(opts.state_cap),
                                     std::to_string(tm.states.size()));
            }
        }
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            std::vector<std::pair<std::size_t, YPolynomial>> col;
            for (auto& [s, w] : pending[i - layer_begin]) {
                col.emplace_back(index.at(s), std::move(w));
            }
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            tm.by_source.push_back(std::move(col));
        }
        layer_begin = layer_end;
    }
    tm.init.resize(tm.states.size());
    tm.final_weights.reserve(tm.states.size());
    for (const auto& s : tm.states) {
        tm.final_weights.push_back(YPolynomial::monomial(BigInt(1), s.block_count()));
    }
    return tm;
}

} // namespace colpart
