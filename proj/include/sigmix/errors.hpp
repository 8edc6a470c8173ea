#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sigmix {

// Base for every error raised by the library. The CLI maps SolverError to
// exit status 2 and everything else to 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A quantity that is not an integer multiple of its declared resolution.
class ResolutionError : public Error {
 public:
  ResolutionError(std::string what_value, double value, double resolution)
      : Error(what_value + " = " + std::to_string(value) +
              " is not a multiple of resolution " + std::to_string(resolution)),
        value_name_(std::move(what_value)),
        value_(value) {}
  explicit ResolutionError(const std::string& message) : Error(message) {}

  const std::string& value_name() const noexcept { return value_name_; }
  double value() const noexcept { return value_; }

 private:
  std::string value_name_;
  double value_ = 0.0;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnknownSolverError : public Error {
 public:
  explicit UnknownSolverError(const std::string& name)
      : Error("unknown solver '" + name + "' (expected exact, greedy or oracle)") {}
};

class SolverError : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExhausted : public SolverError {
 public:
  explicit SearchBudgetExhausted(std::uint64_t limit)
      : SolverError("search budget exhausted after " + std::to_string(limit) +
                    " nodes"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

class SearchSpaceTooLarge : public SolverError {
 public:
  SearchSpaceTooLarge(double product, double limit)
      : SolverError("search space too large: " + whole(product) +
                    " candidate mixes exceeds limit " + whole(limit)),
        product_(product) {}

  double product() const noexcept { return product_; }

 private:
  static std::string whole(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.0f", v);
    return buffer;
  }

  double product_;
};

}  // namespace sigmix
