#pragma once

#include <cmath>

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// (1+1) evolution strategy with the one-fifth success rule: the step size
/// grows by `step_grow` on success and shrinks by step_grow^(-1/4)
/// otherwise, keeping the long-run success rate near 1/5.
class OnePlusOneEs final : public Optimizer {
public:
    OnePlusOneEs(std::size_t dim, Domain domain, std::uint64_t seed, const AlgorithmSpec& spec)
        : dim_(dim),
          domain_(domain),
          rng_(seed),
          boundary_(spec.boundary),
          sigma_(spec.param("sigma0", 2.5)),
          grow_(spec.param("step_grow", 1.5)) {
        shrink_ = std::pow(grow_, -0.25);
    }

    std::vector<std::vector<double>> ask() override {
        if (!have_parent_) {
            return uniform_population(1, dim_, domain_, rng_);
        }
        std::vector<double> child(dim_);
        for (std::size_t i = 0; i < dim_; ++i) child[i] = parent_[i] + sigma_ * rng_.normal();
        repair(child, domain_, boundary_, rng_);
        return {std::move(child)};
    }

    void tell(std::span<const std::vector<double>> points,
              std::span<const double> values) override {
        if (points.empty()) return;
        if (!have_parent_) {
            parent_ = points[0];
            parent_value_ = values[0];
            have_parent_ = true;
            return;
        }
        if (values[0] <= parent_value_) {
            parent_ = points[0];
            parent_value_ = values[0];
            sigma_ *= grow_;
        } else {
            sigma_ *= shrink_;
        }
    }

private:
    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    BoundaryHandling boundary_;
    double sigma_;
    double grow_;
    double shrink_;
    std::vector<double> parent_;
    double parent_value_ = 0.0;
    bool have_parent_ = false;
};

} // namespace optbench::optim
