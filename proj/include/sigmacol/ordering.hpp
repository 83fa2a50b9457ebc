#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "sigmacol/errors.hpp"

namespace sigmacol {

/// A linear ordering of the vertices 0..n-1, with its inverse map.
class Ordering {
public:
    Ordering() = default;

    explicit Ordering(std::vector<int> perm) : perm_(std::move(perm)) {
        int n = static_cast<int>(perm_.size());
        pos_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            int v = perm_[i];
            if (v < 0 || v >= n || pos_[v] != -1)
                throw error("ordering: not a permutation of 0.." + std::to_string(n - 1));
            pos_[v] = i;
        }
    }

    static Ordering identity(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return Ordering(std::move(p));
    }

    int size() const { return static_cast<int>(perm_.size()); }
    int at(int i) const { return perm_[i]; }
    int position_of(int v) const { return pos_[v]; }
    bool before(int u, int v) const { return pos_[u] < pos_[v]; }
    const std::vector<int>& perm() const { return perm_; }

private:
    std::vector<int> perm_;
    std::vector<int> pos_;
};

} // namespace sigmacol
