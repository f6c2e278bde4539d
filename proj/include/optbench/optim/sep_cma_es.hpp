#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>

#include "optbench/optim/optimizer.hpp"

namespace optbench::optim {

/// CMA-ES restricted to a diagonal covariance matrix. Linear-time updates
/// per coordinate; the covariance learning rates carry the (d+2)/3 speedup
/// that compensates for the lost off-diagonal terms. Partial generations
/// (budget ran out mid-batch) are evaluated but trigger no update.
class SepCmaEs final : public Optimizer {
public:
    SepCmaEs(std::size_t dim, Domain domain, std::uint64_t seed, const AlgorithmSpec& spec)
        : dim_(dim), domain_(domain), rng_(seed), boundary_(spec.boundary) {
        const double d = static_cast<double>(dim);
        lambda_ = static_cast<std::size_t>(
            spec.param("lambda", 4.0 + std::floor(3.0 * std::log(d))));
        lambda_ = std::max<std::size_t>(4, lambda_);
        mu_ = lambda_ / 2;

        weights_.resize(mu_);
        for (std::size_t i = 0; i < mu_; ++i)
            weights_[i] = std::log(static_cast<double>(mu_) + 0.5) -
                          std::log(static_cast<double>(i + 1));
        const double wsum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
        double sq = 0.0;
        for (auto& w : weights_) {
            w /= wsum;
            sq += w * w;
        }
        mu_eff_ = 1.0 / sq;

        c_sigma_ = (mu_eff_ + 2.0) / (d + mu_eff_ + 5.0);
        d_sigma_ = 1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff_ - 1.0) / (d + 1.0)) - 1.0) +
                   c_sigma_;
        c_c_ = (4.0 + mu_eff_ / d) / (d + 4.0 + 2.0 * mu_eff_ / d);
        const double boost = (d + 2.0) / 3.0; // diagonal-model speedup
        c_1_ = std::min(1.0, boost * 2.0 / (std::pow(d + 1.3, 2.0) + mu_eff_));
        c_mu_ = std::min(1.0 - c_1_, boost * 2.0 * (mu_eff_ - 2.0 + 1.0 / mu_eff_) /
                                         (std::pow(d + 2.0, 2.0) + mu_eff_));
        chi_n_ = std::sqrt(d) * (1.0 - 1.0 / (4.0 * d) + 1.0 / (21.0 * d * d));

        sigma_ = spec.param("sigma0", 2.5);
        mean_.resize(dim_);
        for (auto& m : mean_) m = rng_.uniform(domain_.lo, domain_.hi);
        diag_c_.assign(dim_, 1.0);
        p_sigma_.assign(dim_, 0.0);
        p_c_.assign(dim_, 0.0);
    }

    std::vector<std::vector<double>> ask() override {
        std::vector<std::vector<double>> batch(lambda_, std::vector<double>(dim_));
        for (auto& x : batch) {
            for (std::size_t j = 0; j < dim_; ++j)
                x[j] = mean_[j] + sigma_ * std::sqrt(diag_c_[j]) * rng_.normal();
            repair(x, domain_, boundary_, rng_);
        }
        return batch;
    }

    void tell(std::span<const std::vector<double>> points,
              std::span<const double> values) override {
        if (points.size() < lambda_) return;

        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

        // steps are recomputed from the (possibly repaired) told points
        std::vector<std::vector<double>> steps(mu_, std::vector<double>(dim_));
        for (std::size_t i = 0; i < mu_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                steps[i][j] = (points[order[i]][j] - mean_[j]) / sigma_;

        std::vector<double> mean_step(dim_, 0.0);
        for (std::size_t i = 0; i < mu_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) mean_step[j] += weights_[i] * steps[i][j];

        for (std::size_t j = 0; j < dim_; ++j) mean_[j] += sigma_ * mean_step[j];

        ++generation_;
        double ps_norm_sq = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            const double whitened = mean_step[j] / std::sqrt(diag_c_[j]);
            p_sigma_[j] = (1.0 - c_sigma_) * p_sigma_[j] +
                          std::sqrt(c_sigma_ * (2.0 - c_sigma_) * mu_eff_) * whitened;
            ps_norm_sq += p_sigma_[j] * p_sigma_[j];
        }
        const double ps_norm = std::sqrt(ps_norm_sq);
        const double decay = 1.0 - std::pow(1.0 - c_sigma_,
                                            2.0 * static_cast<double>(generation_));
        const bool h_sigma =
            ps_norm / std::sqrt(decay) < (1.4 + 2.0 / (static_cast<double>(dim_) + 1.0)) * chi_n_;

        for (std::size_t j = 0; j < dim_; ++j) {
            p_c_[j] = (1.0 - c_c_) * p_c_[j] +
                      (h_sigma ? std::sqrt(c_c_ * (2.0 - c_c_) * mu_eff_) * mean_step[j] : 0.0);
            double rank_mu = 0.0;
            for (std::size_t i = 0; i < mu_; ++i)
                rank_mu += weights_[i] * steps[i][j] * steps[i][j];
            const double stall = h_sigma ? 0.0 : c_c_ * (2.0 - c_c_) * diag_c_[j];
            diag_c_[j] = (1.0 - c_1_ - c_mu_) * diag_c_[j] + c_1_ * (p_c_[j] * p_c_[j] + stall) +
                         c_mu_ * rank_mu;
            diag_c_[j] = std::max(diag_c_[j], 1e-20);
        }

        sigma_ *= std::exp((c_sigma_ / d_sigma_) * (ps_norm / chi_n_ - 1.0));
        sigma_ = std::clamp(sigma_, 1e-15, 1e8);
    }

private:
    std::size_t dim_;
    Domain domain_;
    Xoshiro256pp rng_;
    BoundaryHandling boundary_;
    std::size_t lambda_, mu_;
    std::vector<double> weights_;
    double mu_eff_, c_sigma_, d_sigma_, c_c_, c_1_, c_mu_, chi_n_, sigma_;
    std::vector<double> mean_, diag_c_, p_sigma_, p_c_;
    std::int64_t generation_ = 0;
};

} // namespace optbench::optim
