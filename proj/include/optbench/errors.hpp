#pragma once

#include <stdexcept>
#include <string>

namespace optbench {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// suite
struct UnknownFunction : Error { using Error::Error; };
struct InvalidDimension : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// optim
struct UnknownAlgorithm : Error { using Error::Error; };
struct BudgetExhausted : Error { using Error::Error; };

// runner / config
struct ConfigInvalid : Error { using Error::Error; };

// datastore
struct IoFailure : Error { using Error::Error; };
struct StorageFull : IoFailure { using IoFailure::IoFailure; };
struct DuplicateKey : Error { using Error::Error; };
struct CorruptRecord : Error { using Error::Error; };

// metrics
struct MalformedTrajectory : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct NonPositiveValue : Error { using Error::Error; };
struct BudgetOutOfRange : Error { using Error::Error; };
struct MissingData : Error { using Error::Error; };
struct MissingBaseline : Error { using Error::Error; };

// portfolio
struct EmptySet : Error { using Error::Error; };
struct PoolTooSmall : Error { using Error::Error; };

} // namespace optbench
