// Minimal end-to-end tour: run two algorithms on two functions, then pull
// the numbers straight from the library instead of the CLI.
#include <cstdio>

#include "optbench/metrics/aggregate.hpp"
#include "optbench/optim/registry.hpp"
#include "optbench/runner/config.hpp"
#include "optbench/runner/runner.hpp"
#include "optbench/store/datastore.hpp"

int main() {
    using namespace optbench;

    nlohmann::json config_json{
        {"algorithms", {"de-a", "random-search"}},
        {"function_ids", {1, 12}},
        {"dimensions", {2}},
        {"instance_ids", {0, 1}},
        {"repetitions", 2},
        {"budget_multiplier", 500},
        {"base_seed", 7},
        {"parallelism", 1},
        {"output", "quickstart_runs.jsonl"},
    };
    const auto config = runner::ExperimentConfig::from_json(config_json);

    std::remove(config.output.c_str());
    const auto summary = runner::run_experiment(config);
    std::printf("ran %zu runs (%zu ok, %zu failed) in %.2fs\n", summary.runs, summary.ok,
                summary.failed, summary.elapsed);

    const auto records = store::Store::load(config.output);
    metrics::TableSpec spec;
    spec.budget_factors = {100.0, 500.0};
    const auto table = metrics::build_performance_table(records, spec);

    for (const auto& [key, stats] : table.cells()) {
        std::printf("%-14s f%-3d d%d  mean AOCC %.4f  precision@500d %.3e\n",
                    key.algorithm.c_str(), key.function_id, key.dimension, stats.mean_aocc,
                    stats.precision_at.at(500.0));
    }
    return 0;
}
