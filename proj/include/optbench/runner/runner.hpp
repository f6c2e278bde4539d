#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "optbench/optim/registry.hpp"
#include "optbench/runner/config.hpp"
#include "optbench/store/datastore.hpp"

namespace optbench::runner {

struct ExperimentSummary {
    std::size_t runs = 0;
    std::size_t ok = 0;
    std::size_t failed = 0;
    std::string output;
    double elapsed = 0.0;

    nlohmann::json to_json() const {
        return nlohmann::json{{"runs", runs},
                              {"ok", ok},
                              {"failed", failed},
                              {"output", output},
                              {"elapsed", elapsed}};
    }
};

/// Executes the full experiment grid. Jobs are distributed over a small
/// worker pool; per-run determinism comes from the derived seeds, so the
/// append order in the store may vary but every record's content is fixed.
/// A crashing algorithm yields a failure record and the experiment goes
/// on; store-level IO errors abort it.
inline ExperimentSummary run_experiment(const ExperimentConfig& config,
                                        const optim::Registry& registry = optim::builtin()) {
    namespace fs = std::filesystem;
    if (fs::exists(config.output) && fs::file_size(config.output) > 0) {
        throw ConfigInvalid("output '" + config.output +
                            "' already exists and is not empty; refusing to mix experiments");
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto store = store::Store::create(config.output);

    // instances are immutable after construction and shared across workers
    std::map<std::tuple<int, int, int>, suite::ProblemInstance> instances;
    for (int f : config.function_ids)
        for (int d : config.dimensions)
            for (int i : config.instance_ids)
                instances.emplace(std::tuple{f, i, d}, suite::make_instance(f, i, d));

    const auto jobs = config.jobs();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::mutex store_mutex;
    std::exception_ptr io_error;
    ExperimentSummary summary;
    summary.runs = jobs.size();
    summary.output = config.output;

    auto worker = [&] {
        while (!abort.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= jobs.size()) break;
            const RunKey& key = jobs[i];
            const auto& instance =
                instances.at({key.function_id, key.instance_id, key.dimension});
            const std::int64_t budget = config.budget_for(key.dimension);
            const std::uint64_t seed = derive_seed(config.base_seed, key);

            store::RunRecord record;
            record.key = key;
            record.seed = seed;

            optim::BudgetedProblem problem(instance, budget);
            const auto run_start = std::chrono::steady_clock::now();
            try {
                std::map<std::string, double> overrides;
                if (auto it = config.algo_overrides.find(key.algorithm);
                    it != config.algo_overrides.end()) {
                    overrides = it->second;
                }
                auto algorithm = registry.make(key.algorithm, instance.dimension(),
                                               optim::Domain{suite::ProblemInstance::kDomainLo,
                                                             suite::ProblemInstance::kDomainHi},
                                               budget, seed, overrides);
                optim::run_loop(*algorithm, problem);
                record.status = store::RunStatus::ok;
            } catch (const std::exception&) {
                record.status = store::RunStatus::failed;
            }
            record.trajectory = problem.trajectory();
            record.wall_time =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - run_start)
                    .count();

            std::lock_guard lock(store_mutex);
            try {
                store.append(record);
                if (record.status == store::RunStatus::ok) {
                    ++summary.ok;
                } else {
                    ++summary.failed;
                }
            } catch (...) {
                io_error = std::current_exception();
                abort.store(true, std::memory_order_relaxed);
                break;
            }
        }
    };

    const auto pool = static_cast<std::size_t>(config.parallelism);
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (std::size_t t = 0; t < pool; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (io_error) std::rethrow_exception(io_error);

    summary.elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

} // namespace optbench::runner
