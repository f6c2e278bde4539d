#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "optbench/optim/registry.hpp"
#include "optbench/runner/run_key.hpp"
#include "optbench/suite/functions.hpp"

namespace optbench::runner {

/// Full experiment description: the algorithm x function x dimension x
/// instance x repetition grid plus budget and seeding. Loading validates
/// everything up front so a bad config never starts a partial experiment.
struct ExperimentConfig {
    std::vector<std::string> algorithms;
    std::vector<int> function_ids;
    std::vector<int> dimensions;
    std::vector<int> instance_ids;
    int repetitions = 1;
    std::int64_t budget_multiplier = 2000;
    std::uint64_t base_seed = 1;
    int parallelism = 1;
    std::string output;
    std::map<std::string, std::map<std::string, double>> algo_overrides;

    std::int64_t budget_for(int dimension) const {
        return budget_multiplier * static_cast<std::int64_t>(dimension);
    }

    std::size_t run_count() const {
        return algorithms.size() * function_ids.size() * dimensions.size() *
               instance_ids.size() * static_cast<std::size_t>(repetitions);
    }

    /// Every run key of the experiment, in canonical (sorted) order.
    std::vector<RunKey> jobs() const {
        std::vector<RunKey> keys;
        keys.reserve(run_count());
        for (const auto& a : algorithms)
            for (int f : function_ids)
                for (int d : dimensions)
                    for (int i : instance_ids)
                        for (int r = 0; r < repetitions; ++r)
                            keys.push_back({a, f, d, i, r});
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    static ExperimentConfig from_json(const nlohmann::json& j,
                                      const optim::Registry& registry = optim::builtin());
    static ExperimentConfig from_file(const std::string& path,
                                      const optim::Registry& registry = optim::builtin());
};

namespace detail {

template <typename T>
std::vector<T> unique_list(const nlohmann::json& j, const std::string& key) {
    if (!j.is_array() || j.empty()) {
        throw ConfigInvalid("'" + key + "' must be a non-empty array");
    }
    std::vector<T> out;
    for (const auto& v : j) out.push_back(v.get<T>());
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw ConfigInvalid("'" + key + "' contains duplicates");
    }
    return out;
}

} // namespace detail

inline ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j,
                                                    const optim::Registry& registry) {
    static const std::set<std::string> known_keys = {
        "algorithms",  "function_ids",      "dimensions", "instance_ids", "repetitions",
        "budget_multiplier", "base_seed",   "parallelism", "output",      "algo"};
    if (!j.is_object()) {
        throw ConfigInvalid("experiment config must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!known_keys.count(key)) {
            throw ConfigInvalid("unknown config key '" + key + "'");
        }
    }
    for (const char* required : {"algorithms", "function_ids", "dimensions", "instance_ids",
                                 "repetitions", "budget_multiplier", "base_seed", "output"}) {
        if (!j.contains(required)) {
            throw ConfigInvalid(std::string("missing config key '") + required + "'");
        }
    }

    ExperimentConfig c;
    c.algorithms = detail::unique_list<std::string>(j.at("algorithms"), "algorithms");
    for (const auto& a : c.algorithms) {
        if (!registry.contains(a)) {
            throw ConfigInvalid("unknown algorithm '" + a + "' in 'algorithms'");
        }
    }
    c.function_ids = detail::unique_list<int>(j.at("function_ids"), "function_ids");
    for (int f : c.function_ids) {
        suite::function_info(f); // throws UnknownFunction for bad ids
    }
    c.dimensions = detail::unique_list<int>(j.at("dimensions"), "dimensions");
    for (int d : c.dimensions) {
        if (d < 1) throw ConfigInvalid("dimension " + std::to_string(d) + " must be >= 1");
    }
    c.instance_ids = detail::unique_list<int>(j.at("instance_ids"), "instance_ids");
    for (int i : c.instance_ids) {
        if (i < 0) throw ConfigInvalid("instance_id " + std::to_string(i) + " must be >= 0");
    }
    c.repetitions = j.at("repetitions").get<int>();
    if (c.repetitions < 1) throw ConfigInvalid("'repetitions' must be >= 1");
    c.budget_multiplier = j.at("budget_multiplier").get<std::int64_t>();
    if (c.budget_multiplier < 1) throw ConfigInvalid("'budget_multiplier' must be >= 1");
    c.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("parallelism")) {
        c.parallelism = j.at("parallelism").get<int>();
        if (c.parallelism < 1) throw ConfigInvalid("'parallelism' must be >= 1");
    }
    c.output = j.at("output").get<std::string>();
    if (c.output.empty()) throw ConfigInvalid("'output' must be a non-empty path");

    if (j.contains("algo")) {
        const auto& overrides = j.at("algo");
        if (!overrides.is_object()) {
            throw ConfigInvalid("'algo' must be an object keyed by algorithm name");
        }
        for (const auto& [name, params] : overrides.items()) {
            if (std::find(c.algorithms.begin(), c.algorithms.end(), name) ==
                c.algorithms.end()) {
                throw ConfigInvalid("'algo." + name + "' overrides an algorithm not in "
                                    "'algorithms'");
            }
            if (!params.is_object()) {
                throw ConfigInvalid("'algo." + name + "' must be an object of parameters");
            }
            const auto tunable = registry.tunables(name);
            for (const auto& [pkey, pval] : params.items()) {
                if (std::find(tunable.begin(), tunable.end(), pkey) == tunable.end()) {
                    throw ConfigInvalid("'algo." + name + "." + pkey +
                                        "' is not a parameter of " + name);
                }
                if (!pval.is_number()) {
                    throw ConfigInvalid("'algo." + name + "." + pkey + "' must be a number");
                }
                c.algo_overrides[name][pkey] = pval.get<double>();
            }
        }
    }

    // distinct keys must get distinct seeds; collisions would silently
    // correlate runs
    std::set<std::uint64_t> seeds;
    for (const auto& key : c.jobs()) {
        if (!seeds.insert(derive_seed(c.base_seed, key)).second) {
            throw ConfigInvalid("seed collision in derived run seeds; change 'base_seed'");
        }
    }
    return c;
}

inline ExperimentConfig ExperimentConfig::from_file(const std::string& path,
                                                    const optim::Registry& registry) {
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open config '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigInvalid("config '" + path + "' is not valid JSON: " + ex.what());
    }
    return from_json(j, registry);
}

} // namespace optbench::runner
