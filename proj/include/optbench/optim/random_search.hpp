#pragma once

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// Uniform random sampling over the domain; the reference floor every
/// other portfolio member is measured against.
class RandomSearch final : public Optimizer {
public:
    RandomSearch(std::size_t dim, Domain domain, std::uint64_t seed, std::size_t batch = 32)
        : dim_(dim), domain_(domain), rng_(seed), batch_(batch) {}

    std::vector<std::vector<double>> ask() override {
        return uniform_population(batch_, dim_, domain_, rng_);
    }

    void tell(std::span<const std::vector<double>>, std::span<const double>) override {}

private:
    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    std::size_t batch_;
};

} // namespace optbench::optim
