#pragma once

#include <stdexcept>
#include <string>

namespace yoknot {

// Domain/math failures: division by zero, specialization pole, invalid
// parameters. CLI maps these to exit code 3.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual/JSON input. CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace yoknot
