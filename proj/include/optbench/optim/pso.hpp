#pragma once

#include <algorithm>
#include <cmath>

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// Global-best particle swarm with constriction-style coefficients
/// (inertia 0.729, both attraction weights 1.49). Particles leaving the
/// box are clamped and their velocity zeroed in the offending coordinate.
class ParticleSwarm final : public Optimizer {
public:
    ParticleSwarm(std::size_t dim, Domain domain, std::uint64_t seed, const AlgorithmSpec& spec)
        : dim_(dim),
          domain_(domain),
          rng_(seed),
          inertia_(spec.param("inertia", 0.729)),
          cognitive_(spec.param("cognitive", 1.49)),
          social_(spec.param("social", 1.49)),
          pop_size_(static_cast<std::size_t>(spec.param("pop", 40.0))) {
        pop_size_ = std::max<std::size_t>(2, pop_size_);
        vmax_ = 0.5 * domain.width();
    }

    std::vector<std::vector<double>> ask() override {
        if (!initialized_) {
            return uniform_population(pop_size_, dim_, domain_, rng_);
        }
        std::vector<std::vector<double>> moved(pos_.size());
        for (std::size_t i = 0; i < pos_.size(); ++i) {
            auto x = pos_[i];
            for (std::size_t j = 0; j < dim_; ++j) {
                double v = inertia_ * vel_[i][j] +
                           cognitive_ * rng_.uniform() * (best_pos_[i][j] - x[j]) +
                           social_ * rng_.uniform() * (swarm_best_pos_[j] - x[j]);
                v = std::clamp(v, -vmax_, vmax_);
                vel_[i][j] = v;
                x[j] += v;
                if (x[j] < domain_.lo || x[j] > domain_.hi) {
                    x[j] = std::clamp(x[j], domain_.lo, domain_.hi);
                    vel_[i][j] = 0.0;
                }
            }
            moved[i] = std::move(x);
        }
        return moved;
    }

    void tell(std::span<const std::vector<double>> points,
              std::span<const double> values) override {
        if (!initialized_) {
            pos_.assign(points.begin(), points.end());
            vel_.assign(pos_.size(), std::vector<double>(dim_, 0.0));
            best_pos_ = pos_;
            best_val_.assign(values.begin(), values.end());
            const auto it = std::min_element(best_val_.begin(), best_val_.end());
            swarm_best_pos_ = best_pos_[it - best_val_.begin()];
            swarm_best_val_ = *it;
            initialized_ = true;
            return;
        }
        for (std::size_t i = 0; i < points.size() && i < pos_.size(); ++i) {
            pos_[i] = points[i];
            if (values[i] <= best_val_[i]) {
                best_val_[i] = values[i];
                best_pos_[i] = points[i];
                if (values[i] < swarm_best_val_) {
                    swarm_best_val_ = values[i];
                    swarm_best_pos_ = points[i];
                }
            }
        }
    }

private:
    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    double inertia_, cognitive_, social_;
    std::size_t pop_size_;
    double vmax_;
    std::vector<std::vector<double>> pos_, vel_, best_pos_;
    std::vector<double> best_val_;
    std::vector<double> swarm_best_pos_;
    double swarm_best_val_ = 0.0;
    bool initialized_ = false;
};

} // namespace optbench::optim
