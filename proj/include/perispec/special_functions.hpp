#ifndef PERISPEC_SPECIAL_FUNCTIONS_HPP
#define PERISPEC_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "perispec/errors.hpp"
#include "perispec/xreal.hpp"

namespace perispec {

/// Euler–Mascheroni constant γ = −ψ(1).
constexpr double euler_gamma() { return std::numbers::egamma; }

/// Γ(x). Lanczos approximation on [1/2, 10), Stirling series above, reflection
/// below 1/2, exact factorials at positive integers. Relative error below
/// 1e-13 on [−170, 170].
/// Throws PoleError at nonpositive integers and OverflowError past ~171.62.
double gamma(double x);

/// ln|Γ(x)|. Throws PoleError at nonpositive integers.
double log_gamma(double x);

/// 1/Γ(x); entire, exactly 0 at nonpositive integers.
double reciprocal_gamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0. When 2x is a positive integer the value is
/// built from ψ(1) = −γ, ψ(1/2) = −γ − 2 ln 2 and ψ(x+1) = ψ(x) + 1/x;
/// otherwise the argument is shifted above 10 and the asymptotic series used.
double digamma(double x);

/// Rising factorial (a)_k = a (a+1) ... (a+k−1), (a)_0 = 1.
template <typename Scalar>
Scalar pochhammer(const Scalar& a, unsigned k) {
  Scalar out = a;
  out = 1.0;
  for (unsigned i = 0; i < k; ++i) {
    out *= a + static_cast<double>(i);
  }
  if constexpr (std::is_floating_point_v<Scalar>) {
    if (!std::isfinite(out)) {
      throw OverflowError("pochhammer(" + std::to_string(a) + ", " + std::to_string(k) +
                          ") overflows; use the ratio recurrence instead");
    }
  }
  return out;
}

}  // namespace perispec

#endif  // PERISPEC_SPECIAL_FUNCTIONS_HPP
