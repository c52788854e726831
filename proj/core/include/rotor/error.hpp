#pragma once

#include <stdexcept>
#include <string>

namespace rotor {

enum class ErrorCode {
    InvalidInput,
    NotADegreeOneMap,
    InvalidArcSystem,
    InvalidWord,
    InvalidWidths,
    InvalidOrbit,
    NotAPrimitive,
    NotSemiconjugate,
    Inconclusive,
    CannotGlue,
    Invalid,
    TooLarge,
    InvalidAction,
    ValidationError,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rotor
