#pragma once

#include <stdexcept>
#include <string>

namespace mills {

/// Raised when an argument lies outside the domain of an approximation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A continued fraction hit a non-finite coefficient or a zero denominator.
/// `level()` is the coefficient index or recurrence level that failed.
class evaluation_error : public std::runtime_error {
 public:
  evaluation_error(const std::string& what, int level)
      : std::runtime_error(what + " (level " + std::to_string(level) + ")"),
        level_(level) {}

  int level() const noexcept { return level_; }

 private:
  int level_;
};

class invalid_transform : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive evaluation hit its depth cap before the stopping rule fired.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reference computation failed its own consistency budget.
class oracle_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mills
