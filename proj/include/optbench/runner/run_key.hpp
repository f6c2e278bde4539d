#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "optbench/rng.hpp"

namespace optbench::runner {

/// Identity of a single run within an experiment. Ordering is the
/// canonical job order: algorithm, then function, dimension, instance,
/// repetition.
struct RunKey {
    std::string algorithm;
    int function_id = 0;
    int dimension = 0;
    int instance_id = 0;
    int repetition = 0;

    friend auto operator<=>(const RunKey&, const RunKey&) = default;
};

/// Per-run seed: a documented hash chain over the experiment seed and the
/// full key, so any single run can be reproduced in isolation and distinct
/// keys get decorrelated streams.
inline std::uint64_t derive_seed(std::uint64_t base_seed, const RunKey& key) {
    std::uint64_t h = base_seed;
    h = hash_mix(h, fnv1a(key.algorithm));
    h = hash_mix(h, static_cast<std::uint64_t>(key.function_id));
    h = hash_mix(h, static_cast<std::uint64_t>(key.dimension));
    h = hash_mix(h, static_cast<std::uint64_t>(key.instance_id));
    h = hash_mix(h, static_cast<std::uint64_t>(key.repetition));
    return h;
}

} // namespace optbench::runner
