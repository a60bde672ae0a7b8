#pragma once

#include "collectsim/spatial_grid.hpp"
#include "collectsim/types.hpp"

#include <span>
#include <vector>

namespace collectsim {

enum class potential_mode { oracle, bellman_ford };

// Distance-to-source field over a deployment. Unreachable devices carry
// +infinity; the source itself is at 0.
struct potential_assignment {
    std::vector<double> potential;
    device_id source = 0;
};

struct neighbor_potential {
    double potential = 0.0;
    double link_distance = 0.0;
};

// Exact field: single-source shortest-path distances over the graph whose
// edges connect device pairs within `radius`, weighted by Euclidean
// distance.
potential_assignment oracle_potential(std::span<const vec2> positions, double radius,
                                      device_id source);

// One adaptive gradient update: 0 at the source, otherwise the minimum of
// neighbor potential + link distance, +infinity when no neighbor has a
// finite potential.
double bellman_ford_step(bool is_source, std::span<const neighbor_potential> neighbors);

// Dijkstra with reusable buffers for callers that re-solve every round.
// `grid` must index exactly the given positions.
class oracle_solver {
public:
    void solve(std::span<const vec2> positions, const spatial_grid& grid, double radius,
               device_id source, std::vector<double>& out);

private:
    std::vector<std::pair<double, device_id>> heap_;
    std::vector<char> settled_;
};

struct connectivity_info {
    bool connected = false;
    // Max hop count over reachable device pairs (0 for a single device).
    int hop_diameter = 0;
};

connectivity_info analyze_connectivity(std::span<const vec2> positions, double radius);

} // namespace collectsim
