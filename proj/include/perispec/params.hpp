#ifndef PERISPEC_PARAMS_HPP
#define PERISPEC_PARAMS_HPP

#include <string>

namespace perispec {

/// Physical and nonlocal parameters of the linear peridynamic operator.
/// beta = n + 2 is admitted and reproduces the Navier (local) limit.
/// lambda_star may be negative; physical admissibility is the caller's concern.
struct MaterialParams {
  int n = 3;
  double delta = 1.0;
  double beta = 2.0;
  double mu = 1.0;
  double lambda_star = 2.0;

  /// Throws std::invalid_argument on n < 1, delta <= 0, beta > n + 2, mu <= 0.
  void validate() const;
  std::string describe() const;
};

/// a = (n+2−β)/2, b = (n+2)/2, and the scaling constant
/// c = 2(n+2−β) Γ(n/2+1) / (π^{n/2} δ^{n+2−β}).
struct DerivedParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

DerivedParams derive(const MaterialParams& params);

/// ‖ν‖ and the dimensionless argument z = δ‖ν‖/2 the formulas depend on.
struct WaveNumber {
  double nu_norm = 0.0;
  double z = 0.0;

  static WaveNumber from_norm(double nu_norm, double delta) { return {nu_norm, 0.5 * delta * nu_norm}; }
};

}  // namespace perispec

#endif  // PERISPEC_PARAMS_HPP
