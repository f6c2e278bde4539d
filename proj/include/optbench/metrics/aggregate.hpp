#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "optbench/metrics/aocc.hpp"
#include "optbench/optim/budgeted_problem.hpp"
#include "optbench/store/run_record.hpp"

namespace optbench::metrics {

inline double geometric_mean(std::span<const double> values) {
    if (values.empty()) {
        throw EmptyInput("geometric mean of nothing");
    }
    double log_sum = 0.0;
    for (double v : values) {
        if (v <= 0.0) {
            throw NonPositiveValue("geometric mean requires positive values, got " +
                                   std::to_string(v));
        }
        log_sum += std::log(v);
    }
    return std::exp(log_sum / static_cast<double>(values.size()));
}

/// Best precision after `evals` evaluations, floored at the solve
/// threshold so downstream log aggregation never sees zero. Runs that
/// failed before their first evaluation count as the failure sentinel.
inline double precision_at_budget(const Trajectory& trajectory, std::int64_t evals) {
    if (evals < 1 || evals > trajectory.budget()) {
        throw BudgetOutOfRange("evaluation count " + std::to_string(evals) +
                               " outside [1, " + std::to_string(trajectory.budget()) + "]");
    }
    if (trajectory.empty()) return optim::kFailedEvalPrecision;
    return std::max(trajectory.best_precision_at(evals), suite::kSolvedPrecision);
}

/// Aggregation cell: one algorithm on one function at one dimension.
struct CellKey {
    std::string algorithm;
    int function_id = 0;
    int dimension = 0;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct CellStats {
    double mean_aocc = 0.0;
    // keyed by budget factor (evaluations = factor * dimension)
    std::map<double, double> precision_at;
    std::size_t run_count = 0;
};

struct TableSpec {
    AoccBounds bounds = AoccBounds::standard();
    std::vector<double> budget_factors;
    /// geometric aggregation of precisions (the default); arithmetic
    /// otherwise
    bool geometric = true;
};

/// Per-cell aggregates over a set of run records.
class PerformanceTable {
public:
    PerformanceTable() = default;

    /// Builds a table from precomputed cells; mainly for tests and for
    /// analyses that synthesize hypothetical portfolios.
    explicit PerformanceTable(std::map<CellKey, CellStats> cells) : cells_(std::move(cells)) {}

    const std::map<CellKey, CellStats>& cells() const { return cells_; }

    const CellStats& cell(const std::string& algorithm, int function_id, int dimension) const {
        auto it = cells_.find({algorithm, function_id, dimension});
        if (it == cells_.end()) {
            throw MissingData("no runs for " + algorithm + " on f" +
                              std::to_string(function_id) + " at d" +
                              std::to_string(dimension));
        }
        return it->second;
    }

    bool has_cell(const std::string& algorithm, int function_id, int dimension) const {
        return cells_.count({algorithm, function_id, dimension}) > 0;
    }

    std::vector<std::string> algorithms() const {
        std::set<std::string> s;
        for (const auto& [k, v] : cells_) s.insert(k.algorithm);
        return {s.begin(), s.end()};
    }

    std::vector<int> function_ids() const {
        std::set<int> s;
        for (const auto& [k, v] : cells_) s.insert(k.function_id);
        return {s.begin(), s.end()};
    }

    std::vector<int> dimensions() const {
        std::set<int> s;
        for (const auto& [k, v] : cells_) s.insert(k.dimension);
        return {s.begin(), s.end()};
    }

    /// Mean over all functions of the per-function mean AOCC; throws
    /// MissingData when the algorithm misses any (function, dimension)
    /// cell present for others.
    double mean_aocc_over_functions(const std::string& algorithm, int dimension) const {
        double sum = 0.0;
        std::size_t n = 0;
        for (int f : function_ids()) {
            sum += cell(algorithm, f, dimension).mean_aocc;
            ++n;
        }
        if (n == 0) throw MissingData("table is empty");
        return sum / static_cast<double>(n);
    }

    friend PerformanceTable build_performance_table(std::span<const store::RunRecord>,
                                                    const TableSpec&);

private:
    std::map<CellKey, CellStats> cells_;
};

inline PerformanceTable build_performance_table(std::span<const store::RunRecord> records,
                                                const TableSpec& spec = {}) {
    if (records.empty()) {
        throw EmptyInput("no run records to aggregate");
    }
    struct Raw {
        std::vector<double> aoccs;
        std::map<double, std::vector<double>> precisions;
        std::int64_t min_budget = std::numeric_limits<std::int64_t>::max();
    };
    std::map<CellKey, Raw> raw;
    for (const auto& r : records) {
        auto& cell = raw[{r.key.algorithm, r.key.function_id, r.key.dimension}];
        cell.aoccs.push_back(aocc(r.trajectory, spec.bounds));
        cell.min_budget = std::min(cell.min_budget, r.trajectory.budget());
    }
    for (const auto& r : records) {
        auto& cell = raw[{r.key.algorithm, r.key.function_id, r.key.dimension}];
        for (double factor : spec.budget_factors) {
            const auto evals =
                static_cast<std::int64_t>(std::llround(factor * r.key.dimension));
            // a factor only counts where every run in the cell affords it
            if (evals < 1 || evals > cell.min_budget) continue;
            cell.precisions[factor].push_back(precision_at_budget(r.trajectory, evals));
        }
    }

    PerformanceTable table;
    for (auto& [key, cell] : raw) {
        CellStats stats;
        stats.run_count = cell.aoccs.size();
        double sum = 0.0;
        for (double a : cell.aoccs) sum += a;
        stats.mean_aocc = sum / static_cast<double>(cell.aoccs.size());
        for (const auto& [factor, values] : cell.precisions) {
            double agg;
            if (spec.geometric) {
                agg = geometric_mean(values);
            } else {
                double s = 0.0;
                for (double v : values) s += v;
                agg = s / static_cast<double>(values.size());
            }
            stats.precision_at[factor] = agg;
        }
        table.cells_[key] = stats;
    }
    return table;
}

} // namespace optbench::metrics
