#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

namespace testutil {

inline std::string fixed8(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.8f", v);
    return buf;
}

// Random convex CCW pentagon: vertices on a circle with well-separated
// angles, 8 decimal digits per coordinate (exact decimal inputs).
inline std::array<std::string, 10> random_convex_pentagon(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double cx = 2.0 * unit(rng) - 1.0;
    double cy = 2.0 * unit(rng) - 1.0;
    double radius = 0.5 + 1.5 * unit(rng);
    double base = 2.0 * M_PI * unit(rng);
    std::array<std::string, 10> out;
    for (int i = 0; i < 5; ++i) {
        // jitter < half the regular spacing keeps the order strictly CCW
        double theta = base + 2.0 * M_PI * i / 5.0 + 0.5 * (unit(rng) - 0.5);
        out[2 * i] = fixed8(cx + radius * std::cos(theta));
        out[2 * i + 1] = fixed8(cy + radius * std::sin(theta));
    }
    return out;
}

}  // namespace testutil
