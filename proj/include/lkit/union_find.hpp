#pragma once

#include <numeric>
#include <vector>

namespace lkit {

/// Plain union-find with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(int n = 0) { reset(n); }

    void reset(int n) {
        parent_.resize(n);
        std::iota(parent_.begin(), parent_.end(), 0);
        size_.assign(n, 1);
    }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // Returns false if a and b were already connected.
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    int count_roots() {
        int roots = 0;
        for (int v = 0; v < static_cast<int>(parent_.size()); ++v)
            if (find(v) == v) ++roots;
        return roots;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

/// Union-find without path compression so that merges can be rolled back;
/// used by the enumeration search to share one structure down a DFS.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int capacity) { reset(capacity); }

    void reset(int capacity) {
        parent_.resize(capacity);
        std::iota(parent_.begin(), parent_.end(), 0);
        size_.assign(capacity, 1);
        trail_.clear();
    }

    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    bool connected(int a, int b) const { return find(a) == find(b); }

    // Returns false (and records nothing) if already connected.
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        return true;
    }

    size_t mark() const { return trail_.size(); }

    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            int b = trail_.back();
            trail_.pop_back();
            size_[parent_[b]] -= size_[b];
            parent_[b] = b;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> trail_;
};

}  // namespace lkit
