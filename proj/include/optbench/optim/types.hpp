#pragma once

#include <map>
#include <string>

namespace optbench::optim {

enum class Family {
    random_search,
    evolution_strategy,
    differential_evolution,
    particle_swarm,
    covariance_adaptation,
    metaphor,
};

enum class BoundaryHandling { clamp, reflect, resample };

/// Closed box [lo, hi]^d, identical in every coordinate.
struct Domain {
    double lo = -5.0;
    double hi = 5.0;
    double width() const { return hi - lo; }
};

/// Registry entry: identity plus tunable scalar parameters. `baseline`
/// marks the portfolio members used as reference points in the
/// complementarity analysis.
struct AlgorithmSpec {
    std::string name;
    Family family;
    std::map<std::string, double> params;
    BoundaryHandling boundary = BoundaryHandling::clamp;
    bool baseline = false;

    double param(const std::string& key, double fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
};

} // namespace optbench::optim
