#pragma once

#include <array>
#include <string_view>

#include "optbench/errors.hpp"

namespace optbench::suite {

inline constexpr int kMinFunctionId = 1;
inline constexpr int kMaxFunctionId = 24;

/// Function groups of the standard noiseless suite.
enum class FunctionGroup {
    separable,
    low_conditioning,
    high_conditioning,
    multimodal_adequate,
    multimodal_weak,
};

struct FunctionInfo {
    int id;
    std::string_view name;
    FunctionGroup group;
    bool rotated; // instance carries a random orthogonal matrix
};

/// Implemented subset of the 24-function suite. Ids keep the conventional
/// numbering; unimplemented ids are rejected at instance creation.
inline constexpr std::array<FunctionInfo, 12> kImplementedFunctions = {{
    {1, "sphere", FunctionGroup::separable, false},
    {2, "separable-ellipsoid", FunctionGroup::separable, false},
    {3, "rastrigin", FunctionGroup::separable, false},
    {5, "linear-slope", FunctionGroup::separable, false},
    {6, "attractive-sector", FunctionGroup::low_conditioning, true},
    {8, "rosenbrock", FunctionGroup::low_conditioning, false},
    {10, "rotated-ellipsoid", FunctionGroup::high_conditioning, true},
    {11, "discus", FunctionGroup::high_conditioning, true},
    {12, "bent-cigar", FunctionGroup::high_conditioning, true},
    {14, "sum-of-different-powers", FunctionGroup::high_conditioning, true},
    {17, "schaffers-f7", FunctionGroup::multimodal_adequate, true},
    {20, "schwefel", FunctionGroup::multimodal_weak, false},
}};

inline const FunctionInfo* find_function(int id) {
    for (const auto& info : kImplementedFunctions) {
        if (info.id == id) return &info;
    }
    return nullptr;
}

inline bool is_implemented(int id) { return find_function(id) != nullptr; }

/// Looks up an implemented function or throws UnknownFunction.
inline const FunctionInfo& function_info(int id) {
    const FunctionInfo* info = find_function(id);
    if (info == nullptr) {
        throw UnknownFunction("function id " + std::to_string(id) +
                              " is not implemented (valid ids: 1,2,3,5,6,8,10,11,12,14,17,20)");
    }
    return *info;
}

} // namespace optbench::suite
