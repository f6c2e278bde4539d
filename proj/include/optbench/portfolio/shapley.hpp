#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "optbench/portfolio/value.hpp"
#include "optbench/rng.hpp"

namespace optbench::portfolio {

struct ShapleySamplingParams {
    int sets_per_size = 250;
    int max_size = 20;
    std::uint64_t seed = 0;
};

namespace detail {

/// The subset drawn for (seed, size, draw) depends on nothing else, so
/// every algorithm is scored against the same coalitions.
inline std::vector<std::size_t> sample_subset(std::size_t pool_size, std::size_t size,
                                              std::uint64_t seed, int draw_size,
                                              int draw_index) {
    std::uint64_t h = seed;
    h = hash_mix(h, static_cast<std::uint64_t>(draw_size));
    h = hash_mix(h, static_cast<std::uint64_t>(draw_index));
    Xoshiro256pp rng(h);
    std::vector<std::size_t> indices(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) indices[i] = i;
    for (std::size_t i = 0; i < size; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(pool_size - i));
        std::swap(indices[i], indices[j]);
    }
    indices.resize(size);
    return indices;
}

} // namespace detail

/// One algorithm's sampled contribution. `normalized_value` stays zero
/// until normalize_estimates rescales a whole batch.
struct ShapleyEstimate {
    std::string algorithm;
    double value = 0.0;
    double normalized_value = 0.0;
    std::size_t sample_count = 0;
};

/// Monte Carlo Shapley value of one algorithm: the average marginal
/// contribution over seeded random coalitions of every size from 1 up to
/// `max_size`. The pool is canonicalized by sorting and subsets depend
/// only on (seed, size, draw index), so estimates do not depend on caller
/// ordering or on which algorithm is scored first. The pool must hold at
/// least `max_size` algorithms or the largest coalitions cannot be drawn.
inline ShapleyEstimate approximate_shapley(const metrics::PerformanceTable& table,
                                           std::span<const std::string> pool,
                                           const std::string& algorithm,
                                           const PortfolioValueSpec& spec,
                                           const ShapleySamplingParams& params) {
    if (params.sets_per_size < 1 || params.max_size < 1) {
        throw ConfigInvalid("sets_per_size and max_size must be >= 1");
    }
    if (pool.size() < static_cast<std::size_t>(params.max_size)) {
        throw PoolTooSmall("pool of " + std::to_string(pool.size()) +
                           " cannot supply coalitions of size " +
                           std::to_string(params.max_size));
    }
    std::vector<std::string> canon(pool.begin(), pool.end());
    std::sort(canon.begin(), canon.end());
    if (std::find(canon.begin(), canon.end(), algorithm) == canon.end()) {
        throw MissingData("'" + algorithm + "' is not in the pool");
    }

    const double empty_value = empty_portfolio_value(table, canon, spec);
    const auto max_size = static_cast<std::size_t>(params.max_size);

    double total = 0.0;
    std::size_t samples = 0;
    std::vector<std::string> base;
    for (std::size_t s = 1; s <= max_size; ++s) {
        for (int draw = 0; draw < params.sets_per_size; ++draw) {
            const auto subset = detail::sample_subset(canon.size(), s, params.seed,
                                                      static_cast<int>(s), draw);
            base.clear();
            for (std::size_t idx : subset) {
                if (canon[idx] != algorithm) base.push_back(canon[idx]);
            }
            total += marginal_contribution(table, base, algorithm, spec, empty_value);
            ++samples;
        }
    }
    return {algorithm, total / static_cast<double>(samples), 0.0, samples};
}

/// Fills normalized_value across a batch: negatives clamp to zero, then
/// everything divides by the largest raw estimate. An all-nonpositive
/// batch maps to zeros.
inline void normalize_estimates(std::vector<ShapleyEstimate>& estimates) {
    if (estimates.empty()) {
        throw EmptyInput("nothing to normalize");
    }
    double max_value = 0.0;
    for (const auto& e : estimates) max_value = std::max(max_value, e.value);
    for (auto& e : estimates) {
        e.normalized_value = max_value > 0.0 ? std::max(e.value, 0.0) / max_value : 0.0;
    }
}

/// Estimates for every pool member, in sorted pool order, with
/// normalized_value already filled in.
inline std::vector<ShapleyEstimate> approximate_shapley_all(
    const metrics::PerformanceTable& table, std::span<const std::string> pool,
    const PortfolioValueSpec& spec, const ShapleySamplingParams& params) {
    std::vector<std::string> canon(pool.begin(), pool.end());
    std::sort(canon.begin(), canon.end());
    std::vector<ShapleyEstimate> estimates;
    estimates.reserve(canon.size());
    for (const auto& name : canon) {
        estimates.push_back(approximate_shapley(table, canon, name, spec, params));
    }
    normalize_estimates(estimates);
    return estimates;
}

} // namespace optbench::portfolio
