#ifndef PERISPEC_ERRORS_HPP
#define PERISPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace perispec {

// Argument at a pole of the function (e.g. Γ at a nonpositive integer).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument outside the function's domain (ψ(x) for x <= 0, log z at z = 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Finite mathematical result not representable as a double.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class InvalidSeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Required working precision or term count exceeds the configured maximum.
class PrecisionExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Kernel not integrable for the oracle (beta >= n + 2).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace perispec

#endif  // PERISPEC_ERRORS_HPP
