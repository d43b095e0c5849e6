#ifndef PERISPEC_ORACLE_HPP
#define PERISPEC_ORACLE_HPP

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "perispec/params.hpp"

namespace perispec {

/// Tensor-product quadrature over the horizon ball: radius × angles.
/// The radius is mapped as r = δ t^{1/γ} (γ = grading_exponent, default
/// n + 2 − β), which makes the r^{n+1−β} behaviour at the origin bounded, and
/// the t-interval is split into geometrically graded Gauss–Legendre panels
/// toward t = 0 plus uniform panels sized to the oscillation of cos(ν·w).
struct QuadratureSpec {
  int radial_points = 24;       // Gauss nodes per radial panel, >= 16
  int angular_points = 48;      // nodes per angular dimension
  double grading_exponent = 0;  // <= 0 selects n + 2 − β
  double target_rel_err = 1e-7;

  void validate() const;
  QuadratureSpec refined() const;
};

struct OracleResult {
  double lambda1 = 0.0;  // longitudinal: ν̂ᵀ M ν̂
  double lambda2 = 0.0;  // transverse; for n = 1 the dimension-continued value
  /// Relative change against a quadrature with doubled radial and angular nodes.
  double rel_error_estimate = 0.0;
  /// |M ν̂ − λ₁ ν̂| / |λ₁|: how far ν̂ is from being an eigenvector.
  double off_axis = 0.0;
  /// Plane-wave multiplier: (n+2)μc ∫ w⊗w/|w|^{β+2} (cos(ν·w) − 1) dw − (λ*−μ)(c²/4) g gᵀ
  /// with g = ∫ w/|w|^β sin(ν·w) dw.
  Eigen::MatrixXd multiplier;
};

/// Eigenvalues of the operator's plane-wave multiplier computed directly
/// from its integral definition, with ν = ‖ν‖ e₁. Throws
/// UnsupportedDimensionError for n > 3, SingularityError for β >= n + 2 and
/// NonConvergenceError when the refined quadrature disagrees beyond target.
OracleResult oracle_multipliers(const MaterialParams& params, double nu_norm,
                                const QuadratureSpec& spec = {});

/// Same, for an arbitrary wave vector (equivalently, a rotated grid).
OracleResult oracle_multipliers(const MaterialParams& params, const Eigen::VectorXd& nu,
                                const QuadratureSpec& spec = {});

struct LatticePoint {
  int n = 3;
  double beta = 2.0;
  double delta = 1.0;
  double nu_norm = 1.0;
};

enum class EntryStatus { Ok, Failed, Unsupported, Error };

struct SelftestEntry {
  LatticePoint point;
  EntryStatus status = EntryStatus::Ok;
  double series_lambda1 = 0.0;
  double series_lambda2 = 0.0;
  double oracle_lambda1 = 0.0;
  double oracle_lambda2 = 0.0;
  double discrepancy = 0.0;
  std::string message;
};

struct SelftestReport {
  std::vector<SelftestEntry> entries;
  double max_discrepancy = 0.0;
  double threshold = 0.0;
  bool pass = true;
};

/// n ∈ {1,2,3}, β ∈ {n−1, n−½, n, n+½, n+1}, δ ∈ {½, 1, 2}, ‖ν‖ ∈ {½, 2, 10}.
std::vector<LatticePoint> default_lattice();

/// Relative series/quadrature discrepancy |s − q| / max(|s|, 1e-8).
double relative_discrepancy(double series, double quadrature);

/// Oracle against the hypergeometric formulas at every lattice point, with μ
/// and λ* taken from `base`. Fails when any discrepancy exceeds
/// 10 × spec.target_rel_err or any point is unsupported (β >= n + 2, n > 3).
SelftestReport oracle_selftest(const std::vector<LatticePoint>& lattice,
                               const MaterialParams& base, const QuadratureSpec& spec = {},
                               unsigned threads = 0);

}  // namespace perispec

#endif  // PERISPEC_ORACLE_HPP
