#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "optbench/metrics/rankings.hpp"
#include "optbench/optim/registry.hpp"
#include "optbench/portfolio/complementarity.hpp"
#include "optbench/portfolio/shapley.hpp"
#include "optbench/report/svg.hpp"
#include "optbench/store/run_record.hpp"

namespace optbench::report {

/// Flat result table; cells are JSON scalars so one structure feeds the
/// CSV, JSON and SVG renderers.
struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
};

struct ReportOptions {
    metrics::AoccBounds bounds = metrics::AoccBounds::standard();
    std::optional<int> dimension;
    std::uint64_t shapley_seed = 1;
    int shapley_sets_per_size = 250;
    int shapley_max_size = 20;
};

inline const std::vector<std::string>& report_names() {
    static const std::vector<std::string> names = {
        "aocc-table",     "aocc-cdf", "rs-dominance",    "top3-loss-contribution",
        "best-at-budget", "shapley",  "complementarity",
    };
    return names;
}

namespace detail {

inline int resolve_dimension(std::span<const store::RunRecord> records,
                             const ReportOptions& options) {
    std::set<int> dims;
    for (const auto& r : records) dims.insert(r.key.dimension);
    if (options.dimension) {
        if (!dims.count(*options.dimension)) {
            throw MissingData("store has no runs at dimension " +
                              std::to_string(*options.dimension));
        }
        return *options.dimension;
    }
    if (dims.size() != 1) {
        throw MissingData("store spans several dimensions; pass --dim");
    }
    return *dims.begin();
}

inline std::vector<store::RunRecord> filter_dimension(
    std::span<const store::RunRecord> records, int dimension) {
    std::vector<store::RunRecord> out;
    for (const auto& r : records) {
        if (r.key.dimension == dimension) out.push_back(r);
    }
    return out;
}

/// Largest budget factor every run at this dimension affords; the spent
/// budgets are multiples of the dimension by construction.
inline double full_budget_factor(std::span<const store::RunRecord> records, int dimension) {
    std::int64_t min_budget = std::numeric_limits<std::int64_t>::max();
    for (const auto& r : records) {
        if (r.key.dimension == dimension) {
            min_budget = std::min(min_budget, r.trajectory.budget());
        }
    }
    if (min_budget == std::numeric_limits<std::int64_t>::max()) {
        throw MissingData("no runs at dimension " + std::to_string(dimension));
    }
    return static_cast<double>(min_budget / dimension);
}

/// Checkpoint grid: decade factors that fit, plus the full budget.
inline std::vector<double> default_factors(std::span<const store::RunRecord> records,
                                           int dimension) {
    const double full = full_budget_factor(records, dimension);
    std::set<double> factors{full};
    for (double f : {10.0, 100.0, 1000.0}) {
        if (f < full) factors.insert(f);
    }
    return {factors.begin(), factors.end()};
}

inline metrics::PerformanceTable table_for_dim(std::span<const store::RunRecord> records,
                                               const ReportOptions& options, int dimension,
                                               std::vector<double> factors = {}) {
    const auto filtered = filter_dimension(records, dimension);
    if (filtered.empty()) {
        throw MissingData("no runs at dimension " + std::to_string(dimension));
    }
    metrics::TableSpec spec;
    spec.bounds = options.bounds;
    spec.budget_factors = std::move(factors);
    return metrics::build_performance_table(filtered, spec);
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

inline std::string join_ints(const std::vector<int>& parts, const std::string& sep) {
    std::string out;
    for (int p : parts) {
        if (!out.empty()) out += sep;
        out += std::to_string(p);
    }
    return out;
}

} // namespace detail

/// Per-cell mean AOCC. Covers every dimension in the store unless one is
/// pinned via options.
inline ReportTable build_aocc_table(std::span<const store::RunRecord> records,
                                    const ReportOptions& options) {
    std::vector<store::RunRecord> scope(records.begin(), records.end());
    if (options.dimension) {
        scope = detail::filter_dimension(records, *options.dimension);
        if (scope.empty()) {
            throw MissingData("store has no runs at dimension " +
                              std::to_string(*options.dimension));
        }
    }
    metrics::TableSpec spec;
    spec.bounds = options.bounds;
    const auto table = metrics::build_performance_table(scope, spec);
    ReportTable out{.name = "aocc-table",
                    .columns = {"algorithm", "function_id", "dimension", "mean_aocc", "runs"},
                    .rows = {}};
    for (const auto& [key, stats] : table.cells()) {
        out.rows.push_back({key.algorithm, key.function_id, key.dimension, stats.mean_aocc,
                            stats.run_count});
    }
    return out;
}

/// Share of algorithms whose across-function mean AOCC falls below each
/// threshold on a fixed 0..1 grid.
inline ReportTable build_aocc_cdf(std::span<const store::RunRecord> records,
                                  const ReportOptions& options) {
    const int dim = detail::resolve_dimension(records, options);
    const auto table = detail::table_for_dim(records, options, dim);
    const metrics::AoccDistribution dist(table, dim);
    ReportTable out{.name = "aocc-cdf", .columns = {"x", "fraction_below"}, .rows = {}};
    for (int i = 0; i <= 100; ++i) {
        const double x = static_cast<double>(i) / 100.0;
        out.rows.push_back({x, dist.fraction_below(x)});
    }
    return out;
}

/// Functions where each algorithm fails to clear the random-search bar.
inline ReportTable build_rs_dominance(std::span<const store::RunRecord> records,
                                      const ReportOptions& options) {
    const int dim = detail::resolve_dimension(records, options);
    const auto table = detail::table_for_dim(records, options, dim);
    const auto report = metrics::randomsearch_dominance(table, dim);
    ReportTable out{.name = "rs-dominance",
                    .columns = {"algorithm", "worse_count", "function_ids"},
                    .rows = {}};
    for (const auto& [algorithm, functions] : report.worse_than_reference) {
        out.rows.push_back({algorithm, functions.size(), detail::join_ints(functions, " ")});
    }
    return out;
}

/// Top-3 appearance counts next to the mean AOCC loss, one row per
/// algorithm.
inline ReportTable build_top3_loss(std::span<const store::RunRecord> records,
                                   const ReportOptions& options) {
    const int dim = detail::resolve_dimension(records, options);
    const auto table = detail::table_for_dim(records, options, dim);
    const auto counts = metrics::top_k_counts(table, dim, 3);
    const auto loss = metrics::loss_table(table, dim);
    ReportTable out{.name = "top3-loss-contribution",
                    .columns = {"algorithm", "top3_count", "mean_aocc_loss"},
                    .rows = {}};
    for (const auto& [algorithm, count] : counts) {
        out.rows.push_back({algorithm, count, loss.at(algorithm)});
    }
    return out;
}

/// Winner per (function, budget checkpoint); exact-precision ties list
/// every winner.
inline ReportTable build_best_at_budget(std::span<const store::RunRecord> records,
                                        const ReportOptions& options) {
    const int dim = detail::resolve_dimension(records, options);
    const auto factors = detail::default_factors(records, dim);
    const auto table = detail::table_for_dim(records, options, dim, factors);
    ReportTable out{
        .name = "best-at-budget",
        .columns = {"function_id", "budget_factor", "evaluations", "algorithms", "precision"},
        .rows = {}};
    for (int f : table.function_ids()) {
        for (double factor : factors) {
            const auto best = metrics::best_at_budget(table, f, dim, factor);
            out.rows.push_back({f, factor,
                                static_cast<std::int64_t>(std::llround(factor * dim)),
                                detail::join(best.algorithms, " "), best.precision});
        }
    }
    return out;
}

/// Sampled Shapley attribution of the full-budget portfolio value, with
/// the normalized column scaled to the strongest contributor.
inline ReportTable build_shapley(std::span<const store::RunRecord> records,
                                 const ReportOptions& options) {
    const int dim = detail::resolve_dimension(records, options);
    const double full = detail::full_budget_factor(records, dim);
    const auto table = detail::table_for_dim(records, options, dim, {full});
    const auto pool = table.algorithms();
    portfolio::PortfolioValueSpec spec{.mode = portfolio::ValueMode::fixed_budget_logspace,
                                       .dimension = dim,
                                       .budget_factor = full};
    portfolio::ShapleySamplingParams params{.sets_per_size = options.shapley_sets_per_size,
                                            .max_size = options.shapley_max_size,
                                            .seed = options.shapley_seed};
    const auto estimates = portfolio::approximate_shapley_all(table, pool, spec, params);
    ReportTable out{.name = "shapley",
                    .columns = {"algorithm", "dimension", "budget_factor", "raw", "normalized",
                                "sample_count"},
                    .rows = {}};
    for (const auto& e : estimates) {
        out.rows.push_back(
            {e.algorithm, dim, full, e.value, e.normalized_value, e.sample_count});
    }
    return out;
}

/// What each algorithm adds on top of the baseline portfolio, plus its
/// closest baseline in mean-AOCC profile space.
inline ReportTable build_complementarity(std::span<const store::RunRecord> records,
                                         const ReportOptions& options) {
    const int dim = detail::resolve_dimension(records, options);
    const auto table = detail::table_for_dim(records, options, dim);
    const auto algorithms = table.algorithms();
    const auto function_ids = table.function_ids();
    const std::vector<int> dims = {dim};

    std::vector<std::string> baselines;
    const auto& registry = optim::builtin();
    for (const auto& a : algorithms) {
        if (registry.contains(a) && registry.spec(a).baseline) baselines.push_back(a);
    }
    if (baselines.empty()) {
        throw MissingBaseline("store contains no baseline algorithms");
    }

    ReportTable out{
        .name = "complementarity",
        .columns = {"algorithm", "baseline_contribution", "nearest_baseline", "l1_distance"},
        .rows = {}};
    for (const auto& a : algorithms) {
        const double contribution = portfolio::baseline_contribution(table, baselines, a, dim);
        const auto nearest =
            portfolio::nearest_baseline_distance(table, a, baselines, dims, function_ids);
        out.rows.push_back({a, contribution, nearest.name, nearest.distance});
    }
    return out;
}

inline ReportTable build_report(const std::string& name,
                                std::span<const store::RunRecord> records,
                                const ReportOptions& options) {
    if (records.empty()) {
        throw MissingData("store holds no records");
    }
    if (name == "aocc-table") return build_aocc_table(records, options);
    if (name == "aocc-cdf") return build_aocc_cdf(records, options);
    if (name == "rs-dominance") return build_rs_dominance(records, options);
    if (name == "top3-loss-contribution") return build_top3_loss(records, options);
    if (name == "best-at-budget") return build_best_at_budget(records, options);
    if (name == "shapley") return build_shapley(records, options);
    if (name == "complementarity") return build_complementarity(records, options);
    throw ConfigInvalid("unknown report '" + name + "' (known: " +
                        detail::join(report_names(), ", ") + ")");
}

inline std::string render_csv(const ReportTable& table) {
    std::string out = detail::join(table.columns, ",") + "\n";
    for (const auto& row : table.rows) {
        std::string line;
        for (const auto& cell : row) {
            if (!line.empty()) line += ',';
            if (cell.is_string()) {
                std::string s = cell.get<std::string>();
                if (s.find_first_of(",\"\n") != std::string::npos) {
                    std::string quoted = "\"";
                    for (char c : s) {
                        if (c == '"') quoted += '"';
                        quoted += c;
                    }
                    quoted += '"';
                    s = quoted;
                }
                line += s;
            } else {
                line += cell.dump();
            }
        }
        out += line + "\n";
    }
    return out;
}

inline std::string render_json(const ReportTable& table) {
    nlohmann::json j{{"name", table.name}, {"columns", table.columns}, {"rows", table.rows}};
    return j.dump(2) + "\n";
}

/// SVG rendering supports the two naturally grid-shaped reports; both
/// need a pinned dimension.
inline std::string render_svg(const std::string& name,
                              std::span<const store::RunRecord> records,
                              const ReportOptions& options) {
    if (!options.dimension) {
        throw ConfigInvalid("svg output needs --dim");
    }
    const int dim = *options.dimension;
    if (name == "aocc-table") {
        const auto table = detail::table_for_dim(records, options, dim);
        const auto algorithms = table.algorithms();
        const auto functions = table.function_ids();
        std::vector<std::string> cols;
        for (int f : functions) cols.push_back("f" + std::to_string(f));
        std::vector<std::vector<double>> values;
        for (const auto& a : algorithms) {
            std::vector<double> row;
            for (int f : functions) row.push_back(table.cell(a, f, dim).mean_aocc);
            values.push_back(std::move(row));
        }
        return svg_heatmap(algorithms, cols, values,
                           "mean AOCC at d=" + std::to_string(dim));
    }
    if (name == "best-at-budget") {
        const auto factors = detail::default_factors(records, dim);
        const auto table = detail::table_for_dim(records, options, dim, factors);
        const auto functions = table.function_ids();
        std::vector<std::string> rows_labels, cols;
        for (int f : functions) rows_labels.push_back("f" + std::to_string(f));
        for (double factor : factors) cols.push_back(detail::fmt("%gx", factor));
        std::vector<std::vector<std::string>> cells;
        for (int f : functions) {
            std::vector<std::string> row;
            for (double factor : factors) {
                const auto best = metrics::best_at_budget(table, f, dim, factor);
                row.push_back(best.algorithms.size() == 1
                                  ? best.algorithms.front()
                                  : "tie(" + std::to_string(best.algorithms.size()) + ")");
            }
            cells.push_back(std::move(row));
        }
        return svg_categorical_grid(rows_labels, cols, cells,
                                    "fastest to best precision at d=" + std::to_string(dim));
    }
    throw ConfigInvalid("report '" + name + "' has no svg rendering (use aocc-table or "
                        "best-at-budget)");
}

} // namespace optbench::report
