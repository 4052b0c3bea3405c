#pragma once

#include <stdexcept>
#include <string>

namespace iads {

// Invalid input or configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
	explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure such as non-convergence (CLI exit code 3).
struct NumericError : std::runtime_error {
	explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace iads
