#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace colpart {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..m-1. Edges are kept sorted with
// u < v in each pair, so structurally equal graphs compare equal.
class BaseGraph {
public:
    BaseGraph(int vertex_count, std::vector<Edge> edges) : m_(vertex_count) {
        if (vertex_count < 1) {
            throw parse_error("graph must have at least one vertex");
        }
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= m_ || v >= m_) {
                throw parse_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for " + std::to_string(m_) + " vertices");
            }
            if (u == v) {
                throw parse_error("loop at vertex " + std::to_string(u));
            }
            if (u > v) {
                std::swap(u, v);
            }
        }
        std::sort(edges.begin(), edges.end());
        if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
            throw parse_error("duplicate edge (" + std::to_string(dup->first) + "," +
                              std::to_string(dup->second) + ")");
        }
        edges_ = std::move(edges);
        adjacency_.assign(static_cast<std::size_t>(m_) * m_, false);
        for (auto [u, v] : edges_) {
            adjacency_[static_cast<std::size_t>(u) * m_ + v] = true;
            adjacency_[static_cast<std::size_t>(v) * m_ + u] = true;
        }
    }

    static BaseGraph path(int m) {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < m; ++i) {
            e.emplace_back(i, i + 1);
        }
        return BaseGraph(m, std::move(e));
    }

    static BaseGraph cycle(int m) {
        if (m < 3) {
            throw parse_error("cycle needs at least 3 vertices, got " + std::to_string(m));
        }
        std::vector<Edge> e;
        for (int i = 0; i + 1 < m; ++i) {
            e.emplace_back(i, i + 1);
        }
        e.emplace_back(0, m - 1);
        return BaseGraph(m, std::move(e));
    }

    static BaseGraph complete(int m) {
        std::vector<Edge> e;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                e.emplace_back(i, j);
            }
        }
        return BaseGraph(m, std::move(e));
    }

    int vertex_count() const noexcept { return m_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool adjacent(int u, int v) const {
        if (u < 0 || v < 0 || u >= m_ || v >= m_) {
            throw contract_violation("vertex index out of range");
        }
        return adjacency_[static_cast<std::size_t>(u) * m_ + v];
    }

    friend bool operator==(const BaseGraph& a, const BaseGraph& b) {
        return a.m_ == b.m_ && a.edges_ == b.edges_;
    }

private:
    int m_;
    std::vector<Edge> edges_;
    std::vector<bool> adjacency_;
};

// A vertex of G x P_n: which column of the path, which vertex of G.
struct ProductCoordinates {
    int column = 0;
    int row = 0;
};

// Adjacency in G x P_n, computed on demand without building the product.
inline bool product_adjacent(const BaseGraph& g, int n, ProductCoordinates a, ProductCoordinates b) {
    const int m = g.vertex_count();
    auto valid = [&](ProductCoordinates p) {
        return p.column >= 0 && p.column < n && p.row >= 0 && p.row < m;
    };
    if (n < 1 || !valid(a) || !valid(b)) {
        throw contract_violation("product coordinates out of range for G x P_" + std::to_string(n));
    }
    if (a.column == b.column) {
        return a.row != b.row && g.adjacent(a.row, b.row);
    }
    return a.row == b.row && (a.column - b.column == 1 || b.column - a.column == 1);
}

// Flat index of a product vertex: column * m + row.
inline int product_index(const BaseGraph& g, ProductCoordinates p) {
    return p.column * g.vertex_count() + p.row;
}

// All edges of G x P_n as flat-index pairs: in-column G edges first, then
// the rungs between consecutive columns.
inline std::vector<Edge> product_edges(const BaseGraph& g, int n) {
    const int m = g.vertex_count();
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(n) * g.edges().size() + static_cast<std::size_t>(n > 0 ? n - 1 : 0) * m);
    for (int col = 0; col < n; ++col) {
        for (auto [u, v] : g.edges()) {
            out.emplace_back(col * m + u, col * m + v);
        }
    }
    for (int col = 0; col + 1 < n; ++col) {
        for (int r = 0; r < m; ++r) {
            out.emplace_back(col * m + r, (col + 1) * m + r);
        }
    }
    return out;
}

namespace detail {

inline int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    auto first = text.data();
    auto last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw parse_error("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

} // namespace detail

// Edge-list format: first token m, then whitespace-separated "u v" pairs,
// 0-based. Duplicates and loops are rejected.
inline BaseGraph read_edge_list(std::istream& in) {
    std::string token;
    if (!(in >> token)) {
        throw parse_error("edge list is empty");
    }
    const int m = detail::parse_int(token, "vertex count");
    if (m < 1) {
        throw parse_error("vertex count must be positive, got " + std::to_string(m));
    }
    std::vector<Edge> edges;
    std::string a, b;
    while (in >> a) {
        if (!(in >> b)) {
            throw parse_error("dangling vertex '" + a + "' in edge list");
        }
        edges.emplace_back(detail::parse_int(a, "vertex"), detail::parse_int(b, "vertex"));
    }
    return BaseGraph(m, std::move(edges));
}

inline BaseGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open edge-list file '" + path + "'");
    }
    return read_edge_list(in);
}

// Graph spec mini-language: path:m, cycle:m, complete:m, file:<path>.
inline BaseGraph parse_graph_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw parse_error("graph spec '" + std::string(spec) + "' must look like kind:arg");
    }
    const auto kind = spec.substr(0, colon);
    const auto arg = spec.substr(colon + 1);
    if (kind == "file") {
        if (arg.empty()) {
            throw parse_error("file: spec needs a path");
        }
        return read_edge_list_file(std::string(arg));
    }
    const int m = detail::parse_int(arg, "vertex count");
    if (m < 1) {
        throw parse_error("vertex count must be positive in '" + std::string(spec) + "'");
    }
    if (kind == "path") {
        return BaseGraph::path(m);
    }
    if (kind == "cycle") {
        return BaseGraph::cycle(m);
    }
    if (kind == "complete") {
        return BaseGraph::complete(m);
    }
    throw parse_error("unknown graph kind '" + std::string(kind) + "'");
}

} // namespace colpart
