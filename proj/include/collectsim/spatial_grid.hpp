#pragma once

#include "collectsim/types.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace collectsim {

// Uniform bucket grid over a rectangle. Cell size must be >= the query
// radius so a 3x3 cell block covers every candidate.
class spatial_grid {
public:
    spatial_grid() = default;

    void reset(vec2 lo, vec2 hi, double cell) {
        lo_ = lo;
        cell_ = cell;
        nx_ = std::max(1, static_cast<int>((hi.x - lo.x) / cell) + 1);
        ny_ = std::max(1, static_cast<int>((hi.y - lo.y) / cell) + 1);
        cells_.assign(static_cast<std::size_t>(nx_) * ny_, {});
    }

    void insert(device_id id, vec2 p) { cells_[index(p)].push_back(id); }

    void relocate(device_id id, vec2 from, vec2 to) {
        const std::size_t a = index(from);
        const std::size_t b = index(to);
        if (a == b) return;
        auto& cell = cells_[a];
        cell.erase(std::find(cell.begin(), cell.end(), id));
        cells_[b].push_back(id);
    }

    // Visits every id stored in the 3x3 cell block around p; the caller
    // filters by true distance.
    template <typename F>
    void for_each_candidate(vec2 p, F&& f) const {
        const int cx = cell_x(p.x);
        const int cy = cell_y(p.y);
        const int y0 = std::max(0, cy - 1);
        const int y1 = std::min(ny_ - 1, cy + 1);
        const int x0 = std::max(0, cx - 1);
        const int x1 = std::min(nx_ - 1, cx + 1);
        for (int yy = y0; yy <= y1; ++yy) {
            for (int xx = x0; xx <= x1; ++xx) {
                for (device_id id : cells_[static_cast<std::size_t>(yy) * nx_ + xx]) f(id);
            }
        }
    }

private:
    std::size_t index(vec2 p) const {
        return static_cast<std::size_t>(cell_y(p.y)) * nx_ + cell_x(p.x);
    }
    int cell_x(double x) const {
        return std::clamp(static_cast<int>((x - lo_.x) / cell_), 0, nx_ - 1);
    }
    int cell_y(double y) const {
        return std::clamp(static_cast<int>((y - lo_.y) / cell_), 0, ny_ - 1);
    }

    vec2 lo_{};
    double cell_ = 1.0;
    int nx_ = 1;
    int ny_ = 1;
    std::vector<std::vector<device_id>> cells_;
};

} // namespace collectsim
