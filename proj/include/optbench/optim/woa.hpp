#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// Whale optimization: each whale either encircles the best-so-far
/// solution, chases a random whale while exploration is still wide, or
/// spirals in along a logarithmic path. Annealing horizon comes from the
/// evaluation budget.
class WhaleOptimizer final : public Optimizer {
public:
    WhaleOptimizer(std::size_t dim, Domain domain, std::uint64_t seed, const AlgorithmSpec& spec,
                   std::int64_t budget)
        : dim_(dim),
          domain_(domain),
          rng_(seed),
          pop_size_(static_cast<std::size_t>(spec.param("pop", 30.0))),
          spiral_b_(spec.param("spiral", 1.0)) {
        pop_size_ = std::max<std::size_t>(2, pop_size_);
        max_iters_ = std::max<std::int64_t>(
            1, budget / static_cast<std::int64_t>(pop_size_));
    }

    std::vector<std::vector<double>> ask() override {
        if (!initialized_) {
            return uniform_population(pop_size_, dim_, domain_, rng_);
        }
        const double t = static_cast<double>(std::min(iteration_, max_iters_));
        const double a = 2.0 * (1.0 - t / static_cast<double>(max_iters_));
        const double a2 = -1.0 - t / static_cast<double>(max_iters_);
        std::vector<std::vector<double>> batch(pop_.size());
        for (std::size_t i = 0; i < pop_.size(); ++i) {
            std::vector<double> x(dim_);
            const double p = rng_.uniform();
            for (std::size_t j = 0; j < dim_; ++j) {
                if (p < 0.5) {
                    const double coeff_a = 2.0 * a * rng_.uniform() - a;
                    const double coeff_c = 2.0 * rng_.uniform();
                    if (std::fabs(coeff_a) < 1.0) {
                        const double dist = std::fabs(coeff_c * best_pos_[j] - pop_[i][j]);
                        x[j] = best_pos_[j] - coeff_a * dist;
                    } else {
                        const auto r = static_cast<std::size_t>(rng_.below(pop_.size()));
                        const double dist = std::fabs(coeff_c * pop_[r][j] - pop_[i][j]);
                        x[j] = pop_[r][j] - coeff_a * dist;
                    }
                } else {
                    const double l = (a2 - 1.0) * rng_.uniform() + 1.0;
                    const double dist = std::fabs(best_pos_[j] - pop_[i][j]);
                    x[j] = dist * std::exp(spiral_b_ * l) *
                               std::cos(2.0 * std::numbers::pi * l) +
                           best_pos_[j];
                }
                x[j] = std::clamp(x[j], domain_.lo, domain_.hi);
            }
            batch[i] = std::move(x);
        }
        return batch;
    }

    void tell(std::span<const std::vector<double>> points,
              std::span<const double> values) override {
        if (!initialized_) {
            pop_.assign(points.begin(), points.end());
            const auto it = std::min_element(values.begin(), values.end());
            best_val_ = *it;
            best_pos_ = points[it - values.begin()];
            initialized_ = true;
            return;
        }
        for (std::size_t i = 0; i < points.size() && i < pop_.size(); ++i) {
            pop_[i] = points[i];
            if (values[i] < best_val_) {
                best_val_ = values[i];
                best_pos_ = points[i];
            }
        }
        ++iteration_;
    }

private:
    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    std::size_t pop_size_;
    double spiral_b_;
    std::int64_t max_iters_;
    std::int64_t iteration_ = 0;
    std::vector<std::vector<double>> pop_;
    std::vector<double> best_pos_;
    double best_val_ = 0.0;
    bool initialized_ = false;
};

} // namespace optbench::optim
