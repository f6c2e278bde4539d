#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "optbench/trajectory.hpp"

namespace optbench::metrics {

/// Log-precision window the convergence area is measured against.
struct AoccBounds {
    double lb = 1e-8;
    double ub = 1e2;

    static AoccBounds standard() { return {1e-8, 1e2}; }
    /// Wide variant for portfolios that rarely reach high precision.
    static AoccBounds large() { return {1e-8, 1e8}; }
};

/// Area over the convergence curve, normalized to [0, 1]. Every spent
/// evaluation contributes the log-scaled distance of its best-so-far
/// precision from the window's upper bound:
///
///   (1/B) * sum_i [ 1 - (log10(clamp(p_i)) - log10(lb)) / (log10(ub) - log10(lb)) ]
///
/// 1 means solved on the first evaluation, 0 means never better than ub.
/// The step curve is piecewise constant between improvement events, so the
/// sum collapses to one term per event. An empty trajectory (a run that
/// failed before evaluating) scores 0. The averaging length B is the
/// trajectory's own budget.
inline double aocc(const Trajectory& trajectory, AoccBounds bounds = AoccBounds::standard()) {
    if (bounds.lb <= 0.0 || bounds.ub <= bounds.lb) {
        throw NonPositiveValue("aocc bounds need 0 < lb < ub");
    }
    if (trajectory.empty()) return 0.0;
    const std::int64_t budget = trajectory.budget();
    if (budget < 1) {
        throw MalformedTrajectory("trajectory budget must be >= 1, got " +
                                  std::to_string(budget));
    }
    const auto& events = trajectory.events();

    const double log_lb = std::log10(bounds.lb);
    const double log_ub = std::log10(bounds.ub);
    const double window = log_ub - log_lb;

    double acc = 0.0;
    for (std::size_t k = 0; k < events.size(); ++k) {
        const std::int64_t until =
            k + 1 < events.size() ? events[k + 1].eval_index - 1 : budget;
        const auto count = static_cast<double>(until - events[k].eval_index + 1);
        // clamp in value space so the saturated cases stay exact
        double term;
        if (events[k].precision <= bounds.lb) {
            term = 1.0;
        } else if (events[k].precision >= bounds.ub) {
            term = 0.0;
        } else {
            term = 1.0 - (std::log10(events[k].precision) - log_lb) / window;
        }
        acc += term * count;
    }
    return acc / static_cast<double>(budget);
}

} // namespace optbench::metrics
