#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optbench/errors.hpp"

namespace optbench {

/// One improvement: the evaluation (1-based) at which the best precision
/// seen so far dropped to `precision`.
struct TrajectoryEvent {
    std::int64_t eval_index = 0;
    double precision = 0.0;

    friend bool operator==(const TrajectoryEvent&, const TrajectoryEvent&) = default;
};

/// Sparse best-so-far curve of a single run over a fixed evaluation
/// budget. Events are strictly increasing in eval_index and strictly
/// decreasing in precision, the first event is the initial evaluation, and
/// no event lies past the budget. An empty event list is only meaningful
/// for runs that failed before evaluating anything.
class Trajectory {
public:
    Trajectory() = default;

    explicit Trajectory(std::int64_t budget) : budget_(budget) {}

    Trajectory(std::vector<TrajectoryEvent> events, std::int64_t budget)
        : events_(std::move(events)), budget_(budget) {
        validate();
    }

    const std::vector<TrajectoryEvent>& events() const { return events_; }
    std::int64_t budget() const { return budget_; }
    bool empty() const { return events_.empty(); }
    std::size_t size() const { return events_.size(); }

    friend bool operator==(const Trajectory&, const Trajectory&) = default;

    /// Appends an improvement; enforces the monotonicity invariants.
    void record(std::int64_t eval_index, double precision) {
        if (eval_index > budget_) {
            throw MalformedTrajectory("event at evaluation " + std::to_string(eval_index) +
                                      " exceeds the budget of " + std::to_string(budget_));
        }
        if (events_.empty()) {
            if (eval_index != 1) {
                throw MalformedTrajectory("first event must be at evaluation 1, got " +
                                          std::to_string(eval_index));
            }
        } else {
            const auto& last = events_.back();
            if (eval_index <= last.eval_index) {
                throw MalformedTrajectory("eval_index must increase: " +
                                          std::to_string(last.eval_index) + " then " +
                                          std::to_string(eval_index));
            }
            if (!(precision < last.precision)) {
                throw MalformedTrajectory("precision must strictly decrease");
            }
        }
        events_.push_back({eval_index, precision});
    }

    /// Best precision seen up to and including evaluation t; the
    /// right-continuous step reconstruction of the full best-so-far curve.
    double best_precision_at(std::int64_t t) const {
        if (events_.empty() || t < events_.front().eval_index) {
            throw MalformedTrajectory("no evaluation at or before " + std::to_string(t));
        }
        double best = events_.front().precision;
        for (const auto& e : events_) {
            if (e.eval_index > t) break;
            best = e.precision;
        }
        return best;
    }

    double final_precision() const {
        if (events_.empty()) throw MalformedTrajectory("empty trajectory has no precision");
        return events_.back().precision;
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < events_.size(); ++i) {
            if (i == 0) {
                if (events_[0].eval_index != 1) {
                    throw MalformedTrajectory("first event must be at evaluation 1");
                }
                continue;
            }
            if (events_[i].eval_index <= events_[i - 1].eval_index) {
                throw MalformedTrajectory("eval_index must be strictly increasing");
            }
            if (!(events_[i].precision < events_[i - 1].precision)) {
                throw MalformedTrajectory("precision must be strictly decreasing");
            }
        }
        if (!events_.empty() && events_.back().eval_index > budget_) {
            throw MalformedTrajectory("last event exceeds the budget of " +
                                      std::to_string(budget_));
        }
    }

    std::vector<TrajectoryEvent> events_;
    std::int64_t budget_ = 0;
};

} // namespace optbench
