#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binpart {

enum class ErrorCode {
    DivisionByZero,
    BothZero,
    ZeroInput,
    ModulusDegree,
    DegreeLimit,
    DegreeCap,
    ConstantTermZero,
    Reducible,
    InfiniteSet,
    DegenerateSet,
    NotPrime,
    OutOfRange,
    Overflow,
    Parse,
    InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace binpart
