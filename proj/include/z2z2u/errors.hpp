#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace z2z2u {

/// Malformed textual input (polynomial strings, spec files).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string field, const std::string& what)
        : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// An enumeration or search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
  public:
    /// `required_log2` is log2 of the size that was requested.
    BudgetExceeded(const std::string& what, double required_log2)
        : std::runtime_error(what), required_log2_(required_log2) {}

    double required_log2() const noexcept { return required_log2_; }

  private:
    double required_log2_;
};

/// A generator quadruple failed the structural conditions, or an operation
/// was called on input outside its domain (e.g. even beta for the dual chain).
class InvalidSpec : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// The linear congruence q*h = target has no solution at all.
class NoSolution : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Solutions exist but none of the enumerated ones is a unit.
class NoUnitSolution : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace z2z2u
