#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "optbench/optim/abc.hpp"
#include "optbench/optim/cuckoo.hpp"
#include "optbench/optim/differential_evolution.hpp"
#include "optbench/optim/gwo.hpp"
#include "optbench/optim/one_plus_one_es.hpp"
#include "optbench/optim/pso.hpp"
#include "optbench/optim/random_search.hpp"
#include "optbench/optim/sep_cma_es.hpp"
#include "optbench/optim/woa.hpp"

namespace optbench::optim {

/// Name-keyed algorithm catalog. Every entry carries its default
/// parameters; per-experiment overrides are validated against the entry's
/// tunable keys so a typo in a config fails loudly instead of being
/// silently ignored.
class Registry {
public:
    using Factory = std::function<std::unique_ptr<Optimizer>(
        const AlgorithmSpec&, std::size_t dim, Domain, std::int64_t budget, std::uint64_t seed)>;

    struct Entry {
        AlgorithmSpec spec;
        std::vector<std::string> extra_tunables; // dimension-derived defaults
        Factory factory;
    };

    void add(AlgorithmSpec spec, Factory factory, std::vector<std::string> extra_tunables = {}) {
        if (index_.count(spec.name)) {
            throw DuplicateKey("algorithm '" + spec.name + "' is already registered");
        }
        index_[spec.name] = entries_.size();
        entries_.push_back({std::move(spec), std::move(extra_tunables), std::move(factory)});
    }

    bool contains(const std::string& name) const { return index_.count(name) > 0; }

    /// Names in registration order.
    std::vector<std::string> list() const {
        std::vector<std::string> names;
        names.reserve(entries_.size());
        for (const auto& e : entries_) names.push_back(e.spec.name);
        return names;
    }

    const AlgorithmSpec& spec(const std::string& name) const { return entry(name).spec; }

    /// Parameter keys accepted as overrides for this algorithm.
    std::vector<std::string> tunables(const std::string& name) const {
        const Entry& e = entry(name);
        std::vector<std::string> keys;
        for (const auto& [k, v] : e.spec.params) keys.push_back(k);
        keys.insert(keys.end(), e.extra_tunables.begin(), e.extra_tunables.end());
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    /// Instantiates an algorithm with optional parameter overrides. An
    /// override key that is not tunable for this algorithm throws
    /// ConfigInvalid naming the offending key.
    std::unique_ptr<Optimizer> make(const std::string& name, std::size_t dim, Domain domain,
                                    std::int64_t budget, std::uint64_t seed,
                                    const std::map<std::string, double>& overrides = {}) const {
        const Entry& e = entry(name);
        AlgorithmSpec spec = e.spec;
        for (const auto& [key, value] : overrides) {
            const bool known = spec.params.count(key) > 0 ||
                               std::find(e.extra_tunables.begin(), e.extra_tunables.end(), key) !=
                                   e.extra_tunables.end();
            if (!known) {
                throw ConfigInvalid("algorithm '" + name + "' has no parameter '" + key + "'");
            }
            spec.params[key] = value;
        }
        return e.factory(spec, dim, domain, budget, seed);
    }

private:
    const Entry& entry(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) {
            std::string known;
            for (const auto& e : entries_) {
                if (!known.empty()) known += ", ";
                known += e.spec.name;
            }
            throw UnknownAlgorithm("no algorithm named '" + name + "' (known: " + known + ")");
        }
        return entries_[it->second];
    }

    std::vector<Entry> entries_;
    std::map<std::string, std::size_t> index_;
};

/// The shipped ten-algorithm portfolio. Baselines are the five classic
/// reference methods; the rest are the nature-inspired contenders under
/// study. Registration order is the canonical display order.
inline const Registry& builtin() {
    static const Registry registry = [] {
        Registry r;
        r.add({.name = "random-search",
               .family = Family::random_search,
               .params = {{"batch", 32.0}},
               .boundary = BoundaryHandling::clamp,
               .baseline = true},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<RandomSearch>(
                      dim, dom, seed, static_cast<std::size_t>(s.param("batch", 32.0)));
              });
        r.add({.name = "one-plus-one-es",
               .family = Family::evolution_strategy,
               .params = {{"sigma0", 2.5}, {"step_grow", 1.5}},
               .boundary = BoundaryHandling::reflect,
               .baseline = true},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<OnePlusOneEs>(dim, dom, seed, s);
              });
        r.add({.name = "de-a",
               .family = Family::differential_evolution,
               .params = {{"weight", 0.5}, {"crossover", 0.9}, {"pop_per_dim", 10.0}},
               .boundary = BoundaryHandling::clamp,
               .baseline = true},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<DifferentialEvolution>(
                      dim, dom, seed, s, DifferentialEvolution::Base::rand);
              });
        r.add({.name = "de-b",
               .family = Family::differential_evolution,
               .params = {{"weight", 0.8}, {"crossover", 0.7}, {"pop_per_dim", 5.0}},
               .boundary = BoundaryHandling::resample,
               .baseline = false},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<DifferentialEvolution>(
                      dim, dom, seed, s, DifferentialEvolution::Base::best);
              });
        r.add({.name = "pso",
               .family = Family::particle_swarm,
               .params = {{"inertia", 0.729},
                          {"cognitive", 1.49},
                          {"social", 1.49},
                          {"pop", 40.0}},
               .boundary = BoundaryHandling::clamp,
               .baseline = true},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<ParticleSwarm>(dim, dom, seed, s);
              });
        r.add({.name = "sep-cma-es",
               .family = Family::covariance_adaptation,
               .params = {{"sigma0", 2.5}},
               .boundary = BoundaryHandling::clamp,
               .baseline = true},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<SepCmaEs>(dim, dom, seed, s);
              },
              {"lambda"});
        r.add({.name = "abc",
               .family = Family::metaphor,
               .params = {{"colony", 40.0}},
               .boundary = BoundaryHandling::clamp,
               .baseline = false},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<BeeColony>(dim, dom, seed, s);
              },
              {"limit"});
        r.add({.name = "cs",
               .family = Family::metaphor,
               .params = {{"nests", 25.0}, {"pa", 0.25}, {"alpha", 0.01}, {"beta", 1.5}},
               .boundary = BoundaryHandling::clamp,
               .baseline = false},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<CuckooSearch>(dim, dom, seed, s);
              });
        r.add({.name = "gwo",
               .family = Family::metaphor,
               .params = {{"pop", 30.0}},
               .boundary = BoundaryHandling::clamp,
               .baseline = false},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t budget,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<GreyWolf>(dim, dom, seed, s, budget);
              });
        r.add({.name = "woa",
               .family = Family::metaphor,
               .params = {{"pop", 30.0}, {"spiral", 1.0}},
               .boundary = BoundaryHandling::clamp,
               .baseline = false},
              [](const AlgorithmSpec& s, std::size_t dim, Domain dom, std::int64_t budget,
                 std::uint64_t seed) -> std::unique_ptr<Optimizer> {
                  return std::make_unique<WhaleOptimizer>(dim, dom, seed, s, budget);
              });
        return r;
    }();
    return registry;
}

/// Names of the baseline subset, in registry order.
inline std::vector<std::string> baseline_names(const Registry& r) {
    std::vector<std::string> out;
    for (const auto& name : r.list()) {
        if (r.spec(name).baseline) out.push_back(name);
    }
    return out;
}

/// Full specs of the shipped portfolio, in registration order.
inline std::vector<AlgorithmSpec> list_portfolio(const Registry& r = builtin()) {
    std::vector<AlgorithmSpec> out;
    for (const auto& name : r.list()) out.push_back(r.spec(name));
    return out;
}

/// Drives one algorithm against a budgeted problem until the budget is
/// spent or the target precision is hit, and returns the improvement
/// trajectory. The spec's params are applied as overrides on top of the
/// registered defaults, so a spec obtained from list_portfolio() and
/// tweaked in place behaves like a config-file override.
inline Trajectory run_algorithm(const AlgorithmSpec& spec, BudgetedProblem& problem,
                                std::uint64_t seed, const Registry& r = builtin()) {
    const Domain domain{suite::ProblemInstance::kDomainLo, suite::ProblemInstance::kDomainHi};
    auto optimizer =
        r.make(spec.name, problem.dimension(), domain, problem.budget(), seed, spec.params);
    run_loop(*optimizer, problem);
    return problem.trajectory();
}

} // namespace optbench::optim
