#pragma once

#include <stdexcept>
#include <string>

namespace rcross {

// Error taxonomy. The CLI maps these onto process exit codes
// (parse/parameter -> 2, degeneracy -> 3, budget/cap -> 4).

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParameterError : std::runtime_error {
  explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Collinear or coincident input where general position is required.
struct DegeneracyError : std::runtime_error {
  explicit DegeneracyError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured search or size cap would be exceeded.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rcross
