#ifndef PERISPEC_HYPERGEOMETRIC_HPP
#define PERISPEC_HYPERGEOMETRIC_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "perispec/errors.hpp"
#include "perispec/xreal.hpp"

namespace perispec {

/// pFq parameter lists: numerator a_1..a_p, denominator b_1..b_q.
struct HypergeometricSeries {
  std::vector<double> numerator_params;
  std::vector<double> denominator_params;

  std::size_t p() const { return numerator_params.size(); }
  std::size_t q() const { return denominator_params.size(); }

  /// Throws InvalidSeriesError unless p <= q and no b_j is a nonpositive integer.
  void validate() const;
};

struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t terms_used = 1;
  int precision_bits_used = 53;
};

struct EvalOptions {
  /// Multiplier on the cancellation-derived working precision (2 = "doubled").
  double precision_scale = 1.0;
  int max_bits = 1 << 16;
  /// Base term cap; the effective cap is base_term_cap + 4 ceil(z).
  std::size_t base_term_cap = 10000;
};

/// Σ_k t_k with t_0 = 1 and t_{k+1} = t_k (−z²) Π(a_i+k) / (Π(b_j+k)(k+1)),
/// summed in extended precision (53 + ceil(2 z log2 e) + 40 bits, times
/// options.precision_scale). Summation stops once |t_k| < target_rel_err
/// |partial sum| for three consecutive k past the term-magnitude peak, or
/// when a numerator parameter terminates the series.
EvalResult eval_pfq(const HypergeometricSeries& series, double z_sq, double target_rel_err,
                    const EvalOptions& options = {});

EvalResult eval_1f2(double a, double b1, double b2, double z_sq, double tol,
                    const EvalOptions& options = {});
EvalResult eval_2f3(double a1, double a2, double b1, double b2, double b3, double z_sq, double tol,
                    const EvalOptions& options = {});
EvalResult eval_3f4(double a1, double a2, double a3, double b1, double b2, double b3, double b4,
                    double z_sq, double tol, const EvalOptions& options = {});

/// The same series summed term by term in plain double arithmetic with the
/// same stopping rule. Loses roughly 0.87 z decimal digits to cancellation;
/// kept as a regression witness for why eval_pfq works in extended precision.
double naive_pfq_double(const HypergeometricSeries& series, double z_sq, double target_rel_err);

namespace detail {

/// Index past which |t_{k+1}/t_k| stays below one: every a_i + k and b_j + k
/// is positive and k exceeds (z²)^{1/(q−p+1)}.
std::size_t term_peak_index(const HypergeometricSeries& series, double z_sq);

/// Term recurrence t_{k+1} = t_k (−z²) Π(a_i+k) / (Π(b_j+k)(k+1)) in the
/// scalar type of `unit`. The shifted parameters a_i + k and b_j + k are kept
/// in that scalar type so no rounding enters through them.
template <typename Scalar>
class TermRecurrence {
 public:
  TermRecurrence(const HypergeometricSeries& series, double z_sq, const Scalar& unit)
      : minus_z_sq_(unit), term_(unit), index_(unit) {
    minus_z_sq_ *= -z_sq;
    index_ = 1.0;
    for (double a : series.numerator_params) num_.push_back(unit * a);
    for (double b : series.denominator_params) den_.push_back(unit * b);
  }

  const Scalar& term() const { return term_; }

  void advance() {
    Scalar num = minus_z_sq_;
    for (Scalar& a : num_) {
      num *= a;
      a += 1.0;
    }
    Scalar den = index_;
    for (Scalar& b : den_) {
      den *= b;
      b += 1.0;
    }
    index_ += 1.0;
    term_ *= num;
    term_ /= den;
  }

 private:
  Scalar minus_z_sq_;
  Scalar term_;
  Scalar index_;
  std::vector<Scalar> num_;
  std::vector<Scalar> den_;
};

}  // namespace detail

}  // namespace perispec

#endif  // PERISPEC_HYPERGEOMETRIC_HPP
