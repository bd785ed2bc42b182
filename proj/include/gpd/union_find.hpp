#pragma once

#include <numeric>
#include <vector>

namespace gpd {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smallest index as root
        parent_[b] = a;
        return true;
    }

    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

    /// Dense relabeling: classes numbered by smallest member, ascending.
    std::vector<int> labels() {
        std::vector<int> label(parent_.size(), -1);
        int next = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            std::size_t r = find(i);
            if (label[r] < 0) label[r] = next++;
            label[i] = label[r];
        }
        return label;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace gpd
