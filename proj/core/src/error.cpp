#include "binpart/error.hpp"

namespace binpart {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "division by zero";
        case ErrorCode::BothZero: return "both operands zero";
        case ErrorCode::ZeroInput: return "zero input";
        case ErrorCode::ModulusDegree: return "modulus degree";
        case ErrorCode::DegreeLimit: return "degree limit";
        case ErrorCode::DegreeCap: return "degree cap";
        case ErrorCode::ConstantTermZero: return "constant term zero";
        case ErrorCode::Reducible: return "reducible input";
        case ErrorCode::InfiniteSet: return "infinite set";
        case ErrorCode::DegenerateSet: return "degenerate set";
        case ErrorCode::NotPrime: return "not prime";
        case ErrorCode::OutOfRange: return "out of range";
        case ErrorCode::Overflow: return "overflow";
        case ErrorCode::Parse: return "parse error";
        case ErrorCode::InvariantViolation: return "invariant violation";
    }
    return "unknown";
}

}  // namespace binpart
