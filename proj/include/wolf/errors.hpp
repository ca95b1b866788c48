#pragma once

#include <stdexcept>
#include <string>

namespace wolf {

// Bad parameters, malformed config files, out-of-range requests.
// CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical blow-up or other mid-run failure. Exit code 2.
class SimulationError : public std::runtime_error {
public:
    explicit SimulationError(const std::string& msg) : std::runtime_error(msg) {}
};

// File system and format problems. Exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wolf
