#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// Cuckoo search: Levy-flight moves around the incumbent best alternate
/// with a discovery phase that relocates a fraction `pa` of nests along
/// random nest differences. Levy steps use the Mantegna construction.
class CuckooSearch final : public Optimizer {
public:
    CuckooSearch(std::size_t dim, Domain domain, std::uint64_t seed, const AlgorithmSpec& spec)
        : dim_(dim),
          domain_(domain),
          rng_(seed),
          nests_count_(static_cast<std::size_t>(spec.param("nests", 25.0))),
          pa_(spec.param("pa", 0.25)),
          alpha_(spec.param("alpha", 0.01)),
          beta_(spec.param("beta", 1.5)) {
        nests_count_ = std::max<std::size_t>(3, nests_count_);
        const double num = std::tgamma(1.0 + beta_) * std::sin(std::numbers::pi * beta_ / 2.0);
        const double den = std::tgamma((1.0 + beta_) / 2.0) * beta_ *
                           std::pow(2.0, (beta_ - 1.0) / 2.0);
        sigma_u_ = std::pow(num / den, 1.0 / beta_);
    }

    std::vector<std::vector<double>> ask() override {
        switch (phase_) {
            case Phase::init:
                return uniform_population(nests_count_, dim_, domain_, rng_);
            case Phase::levy: {
                std::vector<std::vector<double>> batch(nests_.size());
                for (std::size_t i = 0; i < nests_.size(); ++i) {
                    auto x = nests_[i];
                    for (std::size_t j = 0; j < dim_; ++j) {
                        x[j] += alpha_ * levy_step() * (nests_[i][j] - nests_[best_][j]);
                        x[j] = std::clamp(x[j], domain_.lo, domain_.hi);
                    }
                    batch[i] = std::move(x);
                }
                return batch;
            }
            case Phase::discovery: {
                std::vector<std::size_t> perm_a(nests_.size()), perm_b(nests_.size());
                std::iota(perm_a.begin(), perm_a.end(), 0);
                std::iota(perm_b.begin(), perm_b.end(), 0);
                std::shuffle(perm_a.begin(), perm_a.end(), rng_);
                std::shuffle(perm_b.begin(), perm_b.end(), rng_);
                const double r = rng_.uniform();
                std::vector<std::vector<double>> batch(nests_.size());
                for (std::size_t i = 0; i < nests_.size(); ++i) {
                    auto x = nests_[i];
                    for (std::size_t j = 0; j < dim_; ++j) {
                        if (rng_.uniform() < pa_) {
                            x[j] += r * (nests_[perm_a[i]][j] - nests_[perm_b[i]][j]);
                            x[j] = std::clamp(x[j], domain_.lo, domain_.hi);
                        }
                    }
                    batch[i] = std::move(x);
                }
                return batch;
            }
        }
        return {};
    }

    void tell(std::span<const std::vector<double>> points,
              std::span<const double> values) override {
        if (phase_ == Phase::init) {
            nests_.assign(points.begin(), points.end());
            values_.assign(values.begin(), values.end());
            best_ = std::min_element(values_.begin(), values_.end()) - values_.begin();
            phase_ = Phase::levy;
            return;
        }
        for (std::size_t i = 0; i < points.size() && i < nests_.size(); ++i) {
            if (values[i] <= values_[i]) {
                nests_[i] = points[i];
                values_[i] = values[i];
                if (values_[i] < values_[best_]) best_ = i;
            }
        }
        phase_ = phase_ == Phase::levy ? Phase::discovery : Phase::levy;
    }

private:
    enum class Phase { init, levy, discovery };

    double levy_step() {
        const double u = rng_.normal() * sigma_u_;
        const double v = rng_.normal();
        return u / std::pow(std::fabs(v), 1.0 / beta_);
    }

    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    std::size_t nests_count_;
    double pa_, alpha_, beta_, sigma_u_;
    Phase phase_ = Phase::init;
    std::vector<std::vector<double>> nests_;
    std::vector<double> values_;
    std::size_t best_ = 0;
};

} // namespace optbench::optim
