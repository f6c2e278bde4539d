#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "optbench/metrics/aggregate.hpp"

namespace optbench::portfolio {

enum class ValueMode {
    /// Sum over functions of the best (lowest) log10 precision any member
    /// reaches at a fixed budget. Lower is better; joining members can
    /// only lower it.
    fixed_budget_logspace,
    /// Mean over functions of the best member AOCC. Higher is better.
    mean_aocc,
};

struct PortfolioValueSpec {
    ValueMode mode = ValueMode::fixed_budget_logspace;
    int dimension = 0;
    /// evaluations = budget_factor * dimension; only read in fixed-budget
    /// mode
    double budget_factor = 0.0;
};

namespace detail {

inline double member_precision(const metrics::PerformanceTable& table, const std::string& name,
                               int function_id, const PortfolioValueSpec& spec) {
    const auto& stats = table.cell(name, function_id, spec.dimension);
    auto it = stats.precision_at.find(spec.budget_factor);
    if (it == stats.precision_at.end()) {
        throw MissingData("no precision at factor " + std::to_string(spec.budget_factor) +
                          " for " + name + " on f" + std::to_string(function_id));
    }
    return std::max(it->second, 1e-8);
}

} // namespace detail

/// Value of a set of algorithms acting as a portfolio (best member counts
/// on every function).
inline double portfolio_value(const metrics::PerformanceTable& table,
                              std::span<const std::string> members,
                              const PortfolioValueSpec& spec) {
    if (members.empty()) {
        throw EmptySet("portfolio_value needs at least one member; use "
                       "empty_portfolio_value for the empty set");
    }
    const auto functions = table.function_ids();
    if (spec.mode == ValueMode::fixed_budget_logspace) {
        double total = 0.0;
        for (int f : functions) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& name : members) {
                best = std::min(best, detail::member_precision(table, name, f, spec));
            }
            total += std::log10(best);
        }
        return total;
    }
    double total = 0.0;
    for (int f : functions) {
        double best = 0.0;
        for (const auto& name : members) {
            best = std::max(best, table.cell(name, f, spec.dimension).mean_aocc);
        }
        total += best;
    }
    return total / static_cast<double>(functions.size());
}

/// Reference value of the empty portfolio. In fixed-budget mode that is
/// the worst precision any pool member records per function, capped at
/// 1e2; in AOCC mode it is simply 0.
inline double empty_portfolio_value(const metrics::PerformanceTable& table,
                                    std::span<const std::string> pool,
                                    const PortfolioValueSpec& spec) {
    if (spec.mode == ValueMode::mean_aocc) return 0.0;
    if (pool.empty()) {
        throw EmptySet("empty_portfolio_value needs the candidate pool");
    }
    double total = 0.0;
    for (int f : table.function_ids()) {
        double worst = 0.0;
        for (const auto& name : pool) {
            worst = std::max(worst, detail::member_precision(table, name, f, spec));
        }
        total += std::log10(std::min(worst, 1e2));
    }
    return total;
}

/// Signed gain from adding `algorithm` to `base`, oriented so that an
/// improvement is positive in both value modes. Adding a member the base
/// already holds changes nothing, so that case is exactly zero.
inline double marginal_contribution(const metrics::PerformanceTable& table,
                                    std::span<const std::string> base,
                                    const std::string& algorithm,
                                    const PortfolioValueSpec& spec, double empty_value) {
    if (std::find(base.begin(), base.end(), algorithm) != base.end()) return 0.0;
    std::vector<std::string> extended(base.begin(), base.end());
    extended.push_back(algorithm);
    const double v_base = base.empty() ? empty_value : portfolio_value(table, base, spec);
    const double v_ext = portfolio_value(table, extended, spec);
    return spec.mode == ValueMode::fixed_budget_logspace ? v_base - v_ext : v_ext - v_base;
}

} // namespace optbench::portfolio
