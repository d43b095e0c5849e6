#ifndef PERISPEC_VALIDATION_HPP
#define PERISPEC_VALIDATION_HPP

#include <span>
#include <string>
#include <vector>

#include "perispec/eigenvalues.hpp"
#include "perispec/oracle.hpp"

namespace perispec {

// Figure protocol: μ = 1, λ* = 2, 1000 equispaced ‖ν‖ on [0, 30].
inline constexpr std::size_t kFigurePoints = 1000;
inline constexpr double kFigureNuMax = 30.0;

struct FigurePanel {
  int dim = 3;
  double beta = 2.0;
  double delta = 1.0;
};

/// β ∈ {n−1, n−½, n, n+1, n+3/2} × δ ∈ {1, 2}: bounded, logarithmic, linear
/// and near-quadratic regimes.
std::vector<FigurePanel> default_panels(int dim);
MaterialParams figure_params(const FigurePanel& panel, double mu = 1.0, double lambda_star = 2.0);
std::vector<SpectrumSample> figure_table(const FigurePanel& panel,
                                         const EvalPolicy& policy = EvalPolicy::series_only(),
                                         double tol = kDefaultTolerance, unsigned threads = 0);

/// Maxima of y over consecutive blocks (x_end − (j+1)w, x_end − jw] lying
/// inside [x_start, x_end], ordered by increasing x.
std::vector<double> block_maxima(std::span<const double> x, std::span<const double> y,
                                 double x_start, double x_end, double width);

bool strictly_decreasing(std::span<const double> v);

struct SlopeFit {
  double slope = 0.0;
  double expected = 0.0;
  std::size_t blocks = 0;
};

/// Least-squares slope of log(max y) against log(x at the max) over `blocks`
/// equal-count blocks: the decay rate of an oscillating upper envelope.
SlopeFit block_maxima_slope(std::span<const double> x, std::span<const double> y,
                            std::size_t blocks);

enum class EnvelopeTarget { Lambda2, Lambda11 };

/// |exact − asymptotic| on `points` equispaced z in [z_lo, z_hi], fitted
/// with block_maxima_slope. Exact values use the series at tol 1e-15.
SlopeFit envelope_slope(const MaterialParams& params, EnvelopeTarget target, double z_lo = 50.0,
                        double z_hi = 500.0, std::size_t points = 1000, std::size_t blocks = 20,
                        unsigned threads = 0);

struct PanelCheck {
  bool ordered = true;         // λ₁ <= λ₂ for ν > 0
  bool error_decreasing = true;
  bool growth_ok = true;       // bounded (β < n) or divergent (β >= n)
  std::string detail;
  bool pass() const { return ordered && error_decreasing && growth_ok; }
};

PanelCheck check_panel(const FigurePanel& panel, const std::vector<SpectrumSample>& table);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

CriterionResult check_navier_limit();
CriterionResult check_oracle_equivalence(unsigned threads = 0);
CriterionResult check_boundedness();
CriterionResult check_envelope_slopes(unsigned threads = 0);
CriterionResult check_delta_limit();
CriterionResult check_figure_protocol(unsigned threads = 0);
CriterionResult check_cancellation();

enum class ValidationLevel { Quick, Full };

/// Quick skips the z ∈ [50, 500] envelope regressions.
std::vector<CriterionResult> run_validation(ValidationLevel level, unsigned threads = 0);

}  // namespace perispec

#endif  // PERISPEC_VALIDATION_HPP
