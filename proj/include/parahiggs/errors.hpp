#pragma once

#include <stdexcept>
#include <string>

namespace parahiggs {

enum class ErrorKind {
    ViolatedFlag,
    WeightCollision,
    OrientationError,
    DimensionMismatch,
    TooLarge,
    SurfaceMismatch,
    UnboundedInterval,
    NonGenericWeights,
    NoIntegralSolution,
    Unsupported,
    Schema,
};

const char* to_string(ErrorKind kind);

// Input-shape problems (exit code 2 in the CLI) as opposed to domain failures (exit code 3).
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace parahiggs
