#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace colpart {

// Disjoint sets with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0) { reset(n); }

    void reset(std::size_t n) {
        parent_.resize(n);
        size_.assign(n, 1);
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
        sets_ = n;
    }

    std::size_t find(std::size_t v) {
        std::size_t root = v;
        while (parent_[root] != root) {
            root = parent_[root];
        }
        while (parent_[v] != root) {
            v = std::exchange(parent_[v], root);
        }
        return root;
    }

    // True when a and b were in different sets.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        --sets_;
        return true;
    }

    std::size_t set_count() const noexcept { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t sets_ = 0;
};

} // namespace colpart
