#ifndef PERISPEC_EIGENVALUES_HPP
#define PERISPEC_EIGENVALUES_HPP

#include <optional>
#include <span>
#include <vector>

#include "perispec/hypergeometric.hpp"
#include "perispec/params.hpp"

namespace perispec {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kDefaultZSwitch = 20.0;

/// Transverse eigenvalue −μ‖ν‖² ₂F₃(1, a; 2, b+1, a+1; −z²).
EvalResult lambda2(const MaterialParams& params, double nu_norm, double tol = kDefaultTolerance,
                   const EvalOptions& options = {});

/// −3μ‖ν‖² ₃F₄(1, 5/2, a; 2, 3/2, b+1, a+1; −z²).
EvalResult lambda11(const MaterialParams& params, double nu_norm, double tol = kDefaultTolerance,
                    const EvalOptions& options = {});

/// −‖ν‖² (λ* − μ) ₁F₂(a; b, a+1; −z²)². Note the square.
EvalResult lambda12(const MaterialParams& params, double nu_norm, double tol = kDefaultTolerance,
                    const EvalOptions& options = {});

/// Longitudinal eigenvalue λ₁ = λ₁,₁ + λ₁,₂.
EvalResult lambda1(const MaterialParams& params, double nu_norm, double tol = kDefaultTolerance,
                   const EvalOptions& options = {});

struct NavierEigenvalues {
  double longitudinal = 0.0;  // −(λ* + 2μ)‖ν‖²
  double transverse = 0.0;    // −μ‖ν‖²
};

/// Plane-wave eigenvalues of the Navier operator (λ*+μ)∇(∇·u) + μΔu.
NavierEigenvalues navier_eigenvalues(const MaterialParams& params, double nu_norm);

enum class EvalPath { Series, Asymptotic };

struct EvalPolicy {
  enum class Kind { SeriesOnly, Hybrid };
  Kind kind = Kind::SeriesOnly;
  double z_switch = kDefaultZSwitch;

  static EvalPolicy series_only() { return {Kind::SeriesOnly, kDefaultZSwitch}; }
  static EvalPolicy hybrid(double z_switch = kDefaultZSwitch) { return {Kind::Hybrid, z_switch}; }
};

struct SpectrumSample {
  double nu_norm = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda11 = 0.0;
  double lambda12 = 0.0;
  std::optional<double> asym1;  // absent at ‖ν‖ = 0 and for β = n + 2
  std::optional<double> asym2;
  EvalPath path = EvalPath::Series;
};

/// One sample per grid point, in grid order. Under Hybrid, points with
/// z > z_switch take their eigenvalues from the asymptotic formulas (when
/// β < n + 2). Points may be evaluated on `threads` workers (0 = hardware
/// concurrency); the output does not depend on the thread count.
std::vector<SpectrumSample> eval_spectrum(const MaterialParams& params,
                                          std::span<const double> grid, const EvalPolicy& policy,
                                          double tol = kDefaultTolerance, unsigned threads = 0);

/// n equispaced points on [lo, hi] (a single point lo when n = 1).
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace perispec

#endif  // PERISPEC_EIGENVALUES_HPP
