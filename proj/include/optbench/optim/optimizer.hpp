#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "optbench/errors.hpp"
#include "optbench/optim/boundary.hpp"
#include "optbench/optim/budgeted_problem.hpp"
#include "optbench/optim/types.hpp"
#include "optbench/rng.hpp"

namespace optbench::optim {

/// Ask/tell iteration contract shared by every algorithm in the portfolio.
///
/// `ask()` proposes a batch of in-domain candidates; the driver evaluates
/// some prefix of it (possibly shorter when the budget runs out) and hands
/// the values back through `tell()`. Implementations must accept partial
/// batches and must not evaluate anything themselves.
class Optimizer {
public:
    virtual ~Optimizer() = default;

    virtual std::vector<std::vector<double>> ask() = 0;
    virtual void tell(std::span<const std::vector<double>> points,
                      std::span<const double> values) = 0;
};

/// Uniformly seeded population, the common initializer across the portfolio.
inline std::vector<std::vector<double>> uniform_population(std::size_t count, std::size_t dim,
                                                           const Domain& domain,
                                                           Xoshiro256pp& rng) {
    std::vector<std::vector<double>> pop(count, std::vector<double>(dim));
    for (auto& x : pop)
        for (auto& v : x) v = rng.uniform(domain.lo, domain.hi);
    return pop;
}

/// Drives one optimizer against one budgeted problem until the budget is
/// spent or the problem is solved. Ask batches are truncated to the
/// remaining budget; the truncated prefix is still told back.
inline void run_loop(Optimizer& opt, BudgetedProblem& problem) {
    while (!problem.exhausted() && !problem.solved()) {
        auto batch = opt.ask();
        if (batch.empty()) {
            throw EmptyInput("optimizer returned an empty ask batch");
        }
        const auto want = static_cast<std::size_t>(problem.remaining());
        if (batch.size() > want) batch.resize(want);
        std::vector<double> values(batch.size());
        for (std::size_t i = 0; i < batch.size(); ++i) values[i] = problem(batch[i]);
        opt.tell(batch, values);
    }
}

} // namespace optbench::optim
