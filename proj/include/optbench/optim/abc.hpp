#pragma once

#include <algorithm>
#include <cmath>

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// Artificial bee colony. Half the colony are food sources; employed and
/// onlooker phases perturb one coordinate per candidate, and sources that
/// fail to improve for `limit` trials are abandoned by scouts. The three
/// phases surface as consecutive ask/tell exchanges.
class BeeColony final : public Optimizer {
public:
    BeeColony(std::size_t dim, Domain domain, std::uint64_t seed, const AlgorithmSpec& spec)
        : dim_(dim), domain_(domain), rng_(seed) {
        const auto colony = static_cast<std::size_t>(spec.param("colony", 40.0));
        sources_ = std::max<std::size_t>(2, colony / 2);
        limit_ = static_cast<std::size_t>(
            spec.param("limit", static_cast<double>(sources_ * dim_)));
    }

    std::vector<std::vector<double>> ask() override {
        switch (phase_) {
            case Phase::init:
                return uniform_population(sources_, dim_, domain_, rng_);
            case Phase::employed: {
                parent_of_.resize(sources_);
                std::vector<std::vector<double>> batch(sources_);
                for (std::size_t i = 0; i < sources_; ++i) {
                    parent_of_[i] = i;
                    batch[i] = perturb(i);
                }
                return batch;
            }
            case Phase::onlooker: {
                parent_of_.resize(sources_);
                std::vector<std::vector<double>> batch(sources_);
                for (std::size_t i = 0; i < sources_; ++i) {
                    const std::size_t pick = roulette();
                    parent_of_[i] = pick;
                    batch[i] = perturb(pick);
                }
                return batch;
            }
            case Phase::scout: {
                scout_targets_.clear();
                std::vector<std::vector<double>> batch;
                for (std::size_t i = 0; i < sources_; ++i) {
                    if (trials_[i] > limit_) {
                        scout_targets_.push_back(i);
                        std::vector<double> fresh(dim_);
                        for (auto& v : fresh) v = rng_.uniform(domain_.lo, domain_.hi);
                        batch.push_back(std::move(fresh));
                    }
                }
                if (batch.empty()) {
                    // nothing exhausted its trials; fall through to employed
                    phase_ = Phase::employed;
                    return ask();
                }
                return batch;
            }
        }
        return {};
    }

    void tell(std::span<const std::vector<double>> points,
              std::span<const double> values) override {
        switch (phase_) {
            case Phase::init:
                pop_.assign(points.begin(), points.end());
                values_.assign(values.begin(), values.end());
                trials_.assign(pop_.size(), 0);
                sources_ = pop_.size();
                phase_ = Phase::employed;
                break;
            case Phase::employed:
            case Phase::onlooker: {
                for (std::size_t i = 0; i < points.size(); ++i) {
                    const std::size_t t = parent_of_[i];
                    if (values[i] < values_[t]) {
                        pop_[t] = points[i];
                        values_[t] = values[i];
                        trials_[t] = 0;
                    } else {
                        ++trials_[t];
                    }
                }
                phase_ = phase_ == Phase::employed ? Phase::onlooker : Phase::scout;
                break;
            }
            case Phase::scout: {
                for (std::size_t i = 0; i < points.size() && i < scout_targets_.size(); ++i) {
                    const std::size_t t = scout_targets_[i];
                    pop_[t] = points[i];
                    values_[t] = values[i];
                    trials_[t] = 0;
                }
                phase_ = Phase::employed;
                break;
            }
        }
    }

private:
    enum class Phase { init, employed, onlooker, scout };

    std::vector<double> perturb(std::size_t i) {
        auto candidate = pop_[i];
        std::size_t k;
        do k = static_cast<std::size_t>(rng_.below(sources_)); while (k == i && sources_ > 1);
        const auto j = static_cast<std::size_t>(rng_.below(dim_));
        const double phi = rng_.uniform(-1.0, 1.0);
        candidate[j] += phi * (candidate[j] - pop_[k][j]);
        candidate[j] = std::clamp(candidate[j], domain_.lo, domain_.hi);
        return candidate;
    }

    /// Roulette wheel on the classic nonnegative fitness transform.
    std::size_t roulette() {
        double total = 0.0;
        fitness_.resize(sources_);
        for (std::size_t i = 0; i < sources_; ++i) {
            const double f = values_[i];
            fitness_[i] = f >= 0.0 ? 1.0 / (1.0 + f) : 1.0 + std::fabs(f);
            total += fitness_[i];
        }
        double ticket = rng_.uniform() * total;
        for (std::size_t i = 0; i < sources_; ++i) {
            ticket -= fitness_[i];
            if (ticket <= 0.0) return i;
        }
        return sources_ - 1;
    }

    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    std::size_t sources_;
    std::size_t limit_;
    Phase phase_ = Phase::init;
    std::vector<std::vector<double>> pop_;
    std::vector<double> values_;
    std::vector<double> fitness_;
    std::vector<std::size_t> trials_;
    std::vector<std::size_t> parent_of_;
    std::vector<std::size_t> scout_targets_;
};

} // namespace optbench::optim
