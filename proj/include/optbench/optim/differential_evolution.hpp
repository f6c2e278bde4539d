#pragma once

#include <algorithm>
#include <cmath>
#include <tuple>

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// Classic generational DE with binomial crossover. The mutation base is
/// either a random population member (rand/1) or the incumbent best
/// (best/1); both variants in the portfolio share this implementation.
class DifferentialEvolution final : public Optimizer {
public:
    enum class Base { rand, best };

    DifferentialEvolution(std::size_t dim, Domain domain, std::uint64_t seed,
                          const AlgorithmSpec& spec, Base base)
        : dim_(dim),
          domain_(domain),
          rng_(seed),
          boundary_(spec.boundary),
          base_(base),
          weight_(spec.param("weight", 0.5)),
          crossover_(spec.param("crossover", 0.9)) {
        const double per_dim = spec.param("pop_per_dim", 10.0);
        pop_size_ = std::max<std::size_t>(
            4, static_cast<std::size_t>(std::lround(per_dim * static_cast<double>(dim))));
    }

    std::vector<std::vector<double>> ask() override {
        if (!initialized_) {
            return uniform_population(pop_size_, dim_, domain_, rng_);
        }
        if (pop_.size() < 4) {
            // init was cut short by the budget; just keep sampling
            return uniform_population(pop_size_, dim_, domain_, rng_);
        }
        std::vector<std::vector<double>> trials(pop_.size());
        for (std::size_t i = 0; i < pop_.size(); ++i) {
            const auto [r1, r2, r3] = pick_distinct(i);
            const auto& donor_base = base_ == Base::best ? pop_[best_] : pop_[r1];
            const auto& a = base_ == Base::best ? pop_[r1] : pop_[r2];
            const auto& b = base_ == Base::best ? pop_[r2] : pop_[r3];
            std::vector<double> trial(dim_);
            const std::size_t jrand = static_cast<std::size_t>(rng_.below(dim_));
            for (std::size_t j = 0; j < dim_; ++j) {
                const bool cross = rng_.uniform() < crossover_ || j == jrand;
                trial[j] = cross ? donor_base[j] + weight_ * (a[j] - b[j]) : pop_[i][j];
            }
            repair(trial, domain_, boundary_, rng_);
            trials[i] = std::move(trial);
        }
        return trials;
    }

    void tell(std::span<const std::vector<double>> points,
              std::span<const double> values) override {
        if (!initialized_) {
            pop_.assign(points.begin(), points.end());
            values_.assign(values.begin(), values.end());
            best_ = std::min_element(values_.begin(), values_.end()) - values_.begin();
            initialized_ = true;
            return;
        }
        if (pop_.size() < 4) return;
        // greedy one-to-one replacement over the evaluated prefix
        for (std::size_t i = 0; i < points.size() && i < pop_.size(); ++i) {
            if (values[i] <= values_[i]) {
                pop_[i] = points[i];
                values_[i] = values[i];
                if (values_[i] < values_[best_]) best_ = i;
            }
        }
    }

private:
    std::tuple<std::size_t, std::size_t, std::size_t> pick_distinct(std::size_t i) {
        const std::size_t n = pop_.size();
        std::size_t r1, r2, r3;
        do r1 = static_cast<std::size_t>(rng_.below(n)); while (r1 == i);
        do r2 = static_cast<std::size_t>(rng_.below(n)); while (r2 == i || r2 == r1);
        do r3 = static_cast<std::size_t>(rng_.below(n)); while (r3 == i || r3 == r1 || r3 == r2);
        return {r1, r2, r3};
    }

    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    BoundaryHandling boundary_;
    Base base_;
    double weight_;
    double crossover_;
    std::size_t pop_size_;
    std::vector<std::vector<double>> pop_;
    std::vector<double> values_;
    std::size_t best_ = 0;
    bool initialized_ = false;
};

} // namespace optbench::optim
