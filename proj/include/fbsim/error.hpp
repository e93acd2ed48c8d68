#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a value outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list, community, relevance or config input.
class ParseError : public Error {
 public:
  ParseError(const std::string& detail, std::size_t line, const std::string& source = {})
      : Error((source.empty() ? "" : source + ":") + "line " + std::to_string(line) + ": " + detail),
        detail_(detail),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
};

class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("empty graph") {}
};

/// A statistic that has no value on the given input (no edges, no communities).
class UndefinedStatistic : public Error {
 public:
  using Error::Error;
};

/// Power iteration hit its iteration cap. Carries the last iterate so callers
/// can still inspect or use it.
class NonConvergence : public Error {
 public:
  NonConvergence(std::vector<double> last_iterate, double residual, std::size_t iterations)
      : Error("no convergence after " + std::to_string(iterations) +
              " iterations (residual " + std::to_string(residual) + ")"),
        last_iterate_(std::move(last_iterate)),
        residual_(residual),
        iterations_(iterations) {}

  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::vector<double> last_iterate_;
  double residual_;
  std::size_t iterations_;
};

}  // namespace fbsim
