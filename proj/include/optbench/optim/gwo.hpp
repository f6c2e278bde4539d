#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// Grey wolf optimizer. The pack moves toward the three best wolves of the
/// current generation; the exploration coefficient `a` anneals linearly
/// from 2 to 0 across the iterations the budget affords.
class GreyWolf final : public Optimizer {
public:
    GreyWolf(std::size_t dim, Domain domain, std::uint64_t seed, const AlgorithmSpec& spec,
             std::int64_t budget)
        : dim_(dim),
          domain_(domain),
          rng_(seed),
          pop_size_(static_cast<std::size_t>(spec.param("pop", 30.0))) {
        pop_size_ = std::max<std::size_t>(3, pop_size_);
        max_iters_ = std::max<std::int64_t>(
            1, budget / static_cast<std::int64_t>(pop_size_));
    }

    std::vector<std::vector<double>> ask() override {
        if (!initialized_) {
            return uniform_population(pop_size_, dim_, domain_, rng_);
        }
        const double a =
            2.0 * (1.0 - static_cast<double>(std::min(iteration_, max_iters_)) /
                             static_cast<double>(max_iters_));
        const auto leaders = top_three();
        std::vector<std::vector<double>> batch(pop_.size());
        for (std::size_t i = 0; i < pop_.size(); ++i) {
            std::vector<double> x(dim_);
            for (std::size_t j = 0; j < dim_; ++j) {
                double sum = 0.0;
                for (std::size_t l : leaders) {
                    const double coeff_a = 2.0 * a * rng_.uniform() - a;
                    const double coeff_c = 2.0 * rng_.uniform();
                    const double dist = std::fabs(coeff_c * pop_[l][j] - pop_[i][j]);
                    sum += pop_[l][j] - coeff_a * dist;
                }
                x[j] = std::clamp(sum / 3.0, domain_.lo, domain_.hi);
            }
            batch[i] = std::move(x);
        }
        return batch;
    }

    void tell(std::span<const std::vector<double>> points,
              std::span<const double> values) override {
        if (!initialized_) {
            pop_.assign(points.begin(), points.end());
            values_.assign(values.begin(), values.end());
            initialized_ = true;
            return;
        }
        for (std::size_t i = 0; i < points.size() && i < pop_.size(); ++i) {
            pop_[i] = points[i];
            values_[i] = values[i];
        }
        ++iteration_;
    }

private:
    std::array<std::size_t, 3> top_three() const {
        std::array<std::size_t, 3> best{0, 0, 0};
        std::array<double, 3> val{values_[0], values_[0], values_[0]};
        val.fill(std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] < val[0]) {
                val = {values_[i], val[0], val[1]};
                best = {i, best[0], best[1]};
            } else if (values_[i] < val[1]) {
                val[2] = val[1];
                best[2] = best[1];
                val[1] = values_[i];
                best[1] = i;
            } else if (values_[i] < val[2]) {
                val[2] = values_[i];
                best[2] = i;
            }
        }
        return best;
    }

    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    std::size_t pop_size_;
    std::int64_t max_iters_;
    std::int64_t iteration_ = 0;
    std::vector<std::vector<double>> pop_;
    std::vector<double> values_;
    bool initialized_ = false;
};

} // namespace optbench::optim
