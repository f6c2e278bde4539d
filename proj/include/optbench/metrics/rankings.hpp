#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "optbench/metrics/aggregate.hpp"

namespace optbench::metrics {

/// Winner(s) of one (function, dimension, budget factor) slot by lowest
/// aggregated precision. Exact value ties keep every tied algorithm. The
/// slot must be populated for every algorithm in the table; a hole means
/// the comparison would be lopsided, so it throws MissingData instead.
struct BestAtBudget {
    std::vector<std::string> algorithms;
    double precision = 0.0;
};

inline BestAtBudget best_at_budget(const PerformanceTable& table, int function_id,
                                   int dimension, double factor) {
    BestAtBudget best;
    bool found = false;
    for (const auto& name : table.algorithms()) {
        const auto& stats = table.cell(name, function_id, dimension);
        auto it = stats.precision_at.find(factor);
        if (it == stats.precision_at.end()) {
            throw MissingData("no precision at factor " + std::to_string(factor) + " for " +
                              name + " on f" + std::to_string(function_id) + " at d" +
                              std::to_string(dimension));
        }
        if (!found || it->second < best.precision) {
            best = {{name}, it->second};
            found = true;
        } else if (it->second == best.precision) {
            best.algorithms.push_back(name);
        }
    }
    if (!found) {
        throw MissingData("no precision data for f" + std::to_string(function_id) + " at d" +
                          std::to_string(dimension) + ", factor " + std::to_string(factor));
    }
    return best;
}

/// Mean AOCC gap to the per-function front-runner, averaged over all
/// functions at one dimension. Zero means best (or tied best) everywhere.
inline std::map<std::string, double> loss_table(const PerformanceTable& table, int dimension) {
    const auto algorithms = table.algorithms();
    const auto functions = table.function_ids();
    if (algorithms.empty() || functions.empty()) {
        throw EmptyInput("performance table has no cells");
    }
    std::map<std::string, double> loss;
    for (int f : functions) {
        double best = 0.0;
        for (const auto& a : algorithms) {
            best = std::max(best, table.cell(a, f, dimension).mean_aocc);
        }
        for (const auto& a : algorithms) {
            loss[a] += best - table.cell(a, f, dimension).mean_aocc;
        }
    }
    for (auto& [a, total] : loss) total /= static_cast<double>(functions.size());
    return loss;
}

/// How often each algorithm lands in the AOCC top k across functions.
/// Ties at the cut are resolved in favor of the lexicographically smaller
/// name, keeping the count deterministic.
inline std::map<std::string, int> top_k_counts(const PerformanceTable& table, int dimension,
                                               int k) {
    if (k < 1) throw ConfigInvalid("k must be >= 1");
    const auto algorithms = table.algorithms();
    std::map<std::string, int> counts;
    for (const auto& a : algorithms) counts[a] = 0;
    for (int f : table.function_ids()) {
        std::vector<std::pair<double, std::string>> ranked;
        for (const auto& a : algorithms) {
            ranked.emplace_back(table.cell(a, f, dimension).mean_aocc, a);
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first > y.first;
            return x.second < y.second;
        });
        const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), ranked.size());
        for (std::size_t i = 0; i < take; ++i) ++counts[ranked[i].second];
    }
    return counts;
}

/// Functions on which an algorithm does not beat uniform random sampling
/// by a clear margin (mean AOCC at or below `margin` times the
/// random-search mean). A zero random-search mean flags nobody.
struct DominanceReport {
    std::map<std::string, std::vector<int>> worse_than_reference;
    /// per function: how many algorithms were flagged on it
    std::map<int, int> flagged_per_function;
    std::string reference;
    double margin = 0.9;
};

inline DominanceReport randomsearch_dominance(const PerformanceTable& table, int dimension,
                                              const std::string& reference = "random-search",
                                              double margin = 0.9) {
    const auto algorithms = table.algorithms();
    if (std::find(algorithms.begin(), algorithms.end(), reference) == algorithms.end()) {
        throw MissingBaseline("'" + reference + "' is not in the table");
    }
    DominanceReport report;
    report.reference = reference;
    report.margin = margin;
    for (const auto& a : algorithms) {
        if (a == reference) continue;
        report.worse_than_reference[a] = {};
    }
    for (int f : table.function_ids()) {
        report.flagged_per_function[f] = 0;
        const double rs = table.cell(reference, f, dimension).mean_aocc;
        if (rs <= 0.0) continue;
        for (const auto& a : algorithms) {
            if (a == reference) continue;
            if (table.cell(a, f, dimension).mean_aocc <= margin * rs) {
                report.worse_than_reference[a].push_back(f);
                ++report.flagged_per_function[f];
            }
        }
    }
    return report;
}

/// Empirical distribution of per-algorithm overall mean AOCC at one
/// dimension: fraction_below(x) is the share of algorithms whose mean sits
/// strictly below x.
class AoccDistribution {
public:
    AoccDistribution(const PerformanceTable& table, int dimension) {
        for (const auto& a : table.algorithms()) {
            means_[a] = table.mean_aocc_over_functions(a, dimension);
        }
        if (means_.empty()) throw EmptyInput("performance table has no algorithms");
    }

    const std::map<std::string, double>& means() const { return means_; }

    double fraction_below(double x) const {
        std::size_t below = 0;
        for (const auto& [a, m] : means_) {
            if (m < x) ++below;
        }
        return static_cast<double>(below) / static_cast<double>(means_.size());
    }

private:
    std::map<std::string, double> means_;
};

} // namespace optbench::metrics
