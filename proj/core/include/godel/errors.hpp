#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace godel {

/// Raised by the concrete-syntax parser; `column` is 1-based.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}
  std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

/// Contract violations: unassigned atoms, first-order syntax where
/// propositional input is required, symbols missing from a chain, ...
class semantic_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite-model enumeration would exceed the configured model budget.
class budget_exceeded : public std::runtime_error {
public:
  budget_exceeded(const std::string& what, long long required, long long budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  long long required() const { return required_; }
  long long budget() const { return budget_; }

private:
  long long required_;
  long long budget_;
};

}  // namespace godel
