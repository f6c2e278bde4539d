#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "optbench/portfolio/value.hpp"

namespace optbench::portfolio {

/// AOCC gained by adding `algorithm` to the baseline portfolio; zero when
/// the baselines already cover everything it can do, and by convention
/// zero for the baselines themselves.
inline double baseline_contribution(const metrics::PerformanceTable& table,
                                    std::span<const std::string> baselines,
                                    const std::string& algorithm, int dimension) {
    if (baselines.empty()) {
        throw MissingBaseline("baseline set is empty");
    }
    if (std::find(baselines.begin(), baselines.end(), algorithm) != baselines.end()) {
        return 0.0;
    }
    PortfolioValueSpec spec{.mode = ValueMode::mean_aocc, .dimension = dimension};
    return marginal_contribution(table, baselines, algorithm, spec, 0.0);
}

/// Mean AOCC profile of one algorithm, laid out dimension-major in the
/// given orders; the shared coordinate system for distance comparisons.
inline std::vector<double> performance_vector(const metrics::PerformanceTable& table,
                                              const std::string& algorithm,
                                              std::span<const int> dimensions,
                                              std::span<const int> function_ids) {
    std::vector<double> v;
    v.reserve(dimensions.size() * function_ids.size());
    for (int d : dimensions) {
        for (int f : function_ids) {
            v.push_back(table.cell(algorithm, f, d).mean_aocc);
        }
    }
    return v;
}

struct NearestBaseline {
    std::string name;
    double distance = 0.0;
};

/// Closest baseline by L1 distance between performance vectors; distance
/// ties pick the lexicographically smallest name.
inline NearestBaseline nearest_baseline_distance(const metrics::PerformanceTable& table,
                                                 const std::string& algorithm,
                                                 std::span<const std::string> baselines,
                                                 std::span<const int> dimensions,
                                                 std::span<const int> function_ids) {
    if (baselines.empty()) {
        throw MissingBaseline("baseline set is empty");
    }
    const auto self = performance_vector(table, algorithm, dimensions, function_ids);
    std::vector<std::string> sorted(baselines.begin(), baselines.end());
    std::sort(sorted.begin(), sorted.end());
    NearestBaseline nearest;
    bool found = false;
    for (const auto& b : sorted) {
        const auto other = performance_vector(table, b, dimensions, function_ids);
        double dist = 0.0;
        for (std::size_t i = 0; i < self.size(); ++i) dist += std::fabs(self[i] - other[i]);
        if (!found || dist < nearest.distance) {
            nearest = {b, dist};
            found = true;
        }
    }
    return nearest;
}

} // namespace optbench::portfolio
