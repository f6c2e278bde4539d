#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "optbench/optim/types.hpp"
#include "optbench/rng.hpp"

namespace optbench::optim {

/// Folds v into [lo, hi] by mirroring at the walls (triangle wave), so a
/// point overshooting the boundary lands inside at the reflected distance.
inline double reflect_into(double v, double lo, double hi) {
    const double w = hi - lo;
    if (w <= 0.0) return lo;
    double t = std::fmod(v - lo, 2.0 * w);
    if (t < 0.0) t += 2.0 * w;
    return lo + (t <= w ? t : 2.0 * w - t);
}

/// In-place repair of x onto the domain. `resample` redraws only the
/// offending coordinates.
inline void repair(std::span<double> x, const Domain& d, BoundaryHandling mode,
                   Xoshiro256pp& rng) {
    switch (mode) {
        case BoundaryHandling::clamp:
            for (auto& v : x) v = std::clamp(v, d.lo, d.hi);
            break;
        case BoundaryHandling::reflect:
            for (auto& v : x) {
                if (v < d.lo || v > d.hi) v = reflect_into(v, d.lo, d.hi);
            }
            break;
        case BoundaryHandling::resample:
            for (auto& v : x) {
                if (v < d.lo || v > d.hi) v = rng.uniform(d.lo, d.hi);
            }
            break;
    }
}

} // namespace optbench::optim
