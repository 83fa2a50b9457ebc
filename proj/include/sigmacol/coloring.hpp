#pragma once

#include <algorithm>
#include <vector>

#include "sigmacol/errors.hpp"

namespace sigmacol {

/// Total assignment of non-negative colors to the vertices 0..n-1.
/// Colors need not be contiguous; palette_size() counts distinct values.
class Coloring {
public:
    Coloring() = default;

    explicit Coloring(std::vector<int> colors) : color_(std::move(colors)) {
        for (int c : color_)
            if (c < 0) throw error("coloring: negative color");
        std::vector<int> sorted = color_;
        std::sort(sorted.begin(), sorted.end());
        palette_ = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    int size() const { return static_cast<int>(color_.size()); }
    int operator[](int v) const { return color_[v]; }
    int palette_size() const { return palette_; }
    const std::vector<int>& values() const { return color_; }

private:
    std::vector<int> color_;
    int palette_ = 0;
};

} // namespace sigmacol
