#pragma once

#include <cmath>
#include <cstdint>

namespace collectsim {

using device_id = std::uint32_t;

struct vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double squared_distance(vec2 a, vec2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double distance(vec2 a, vec2 b) {
    return std::sqrt(squared_distance(a, b));
}

} // namespace collectsim
