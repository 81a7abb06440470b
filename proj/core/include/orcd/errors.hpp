#pragma once

#include <stdexcept>
#include <string>

namespace orcd {

// Argument outside the mathematical domain of a function (e.g. p > 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed model, pmf or table. `path` names the offending field when known.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, std::string path = {})
      : std::invalid_argument(path.empty() ? what : path + ": " + what),
        message_(what),
        path_(std::move(path)) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string message_;
  std::string path_;
};

// Caller misuse: overlapping axis sets, unknown sweep parameter, size caps.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative routine failed to reach its stopping criterion.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what, double last_gap = 0.0)
      : std::runtime_error(what), last_gap_(last_gap) {}

  double last_gap() const noexcept { return last_gap_; }

 private:
  double last_gap_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orcd
