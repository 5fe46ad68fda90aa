#ifndef LOOPIDEAL_ERRORS_HPP
#define LOOPIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace loopideal {

/// Operands live in rings with different variable counts.
struct dimension_error : std::invalid_argument {
  explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

struct parse_error : std::invalid_argument {
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured search or enumeration budget was hit before a definite answer.
struct budget_exhausted : std::runtime_error {
  explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Asked for a closed form outside the covered cases.
struct unsupported_case : std::invalid_argument {
  explicit unsupported_case(const std::string& what) : std::invalid_argument(what) {}
};

/// The ideal does not admit linear quotients, so the requested quantity is undefined.
struct no_linear_quotients : std::runtime_error {
  explicit no_linear_quotients(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed. Never expected to fire.
struct check_failed : std::logic_error {
  explicit check_failed(const std::string& what) : std::logic_error(what) {}
};

}  // namespace loopideal

#endif
