#pragma once

#include <stdexcept>
#include <string>

namespace arlab {

// Bad arguments or malformed data structures. CLI maps this to exit code 1.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical hypothesis required by an operation does not hold for the
// given input (e.g. a claimed bound is violated). CLI maps this to exit 1.
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

// File and serialization problems. CLI maps this to exit code 2.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace arlab
