#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>

#include "optbench/suite/instance.hpp"
#include "optbench/trajectory.hpp"

namespace optbench::optim {

/// Precision recorded when an evaluation returns a non-finite value. Large
/// enough to rank below any real result, small enough to serialize as a
/// plain JSON number.
inline constexpr double kFailedEvalPrecision = 1e300;

/// Counts evaluations against a fixed budget and logs the improvement
/// trajectory. Algorithms only ever see raw objective values; the optimum
/// shift stays hidden on this side of the interface.
class BudgetedProblem {
public:
    BudgetedProblem(const suite::ProblemInstance& instance, std::int64_t budget)
        : instance_(&instance), budget_(budget), trajectory_(budget) {
        if (budget < 1) {
            throw ConfigInvalid("budget must be >= 1, got " + std::to_string(budget));
        }
    }

    double operator()(std::span<const double> x) {
        if (used_ >= budget_) {
            throw BudgetExhausted("budget of " + std::to_string(budget_) + " evaluations spent");
        }
        const double raw = instance_->evaluate(x);
        ++used_;
        double prec = std::isfinite(raw) ? instance_->precision_of(raw).value
                                         : kFailedEvalPrecision;
        if (trajectory_.empty() || prec < best_precision_) {
            best_precision_ = prec;
            trajectory_.record(used_, prec);
        }
        return raw;
    }

    std::int64_t budget() const { return budget_; }
    std::int64_t used() const { return used_; }
    std::int64_t remaining() const { return budget_ - used_; }
    bool exhausted() const { return used_ >= budget_; }
    bool solved() const {
        return !trajectory_.empty() && best_precision_ <= suite::kSolvedPrecision;
    }
    double best_precision() const { return best_precision_; }
    const Trajectory& trajectory() const { return trajectory_; }
    std::size_t dimension() const { return instance_->dimension(); }

private:
    const suite::ProblemInstance* instance_;
    std::int64_t budget_;
    std::int64_t used_ = 0;
    double best_precision_ = kFailedEvalPrecision;
    Trajectory trajectory_;
};

} // namespace optbench::optim
