#include "perispec/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace perispec {
namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

void check_arguments(const HypergeometricSeries& series, double z_sq, double target_rel_err) {
  series.validate();
  if (!(z_sq >= 0.0) || !std::isfinite(z_sq)) {
    throw std::invalid_argument("eval_pfq: z_sq must be finite and >= 0");
  }
  if (!(target_rel_err >= 1e-15 && target_rel_err <= 1e-2)) {
    throw std::invalid_argument("eval_pfq: target_rel_err must lie in [1e-15, 1e-2]");
  }
}

// |t_{k+1} / t_k|
double term_ratio(const HypergeometricSeries& series, double z_sq, std::size_t k) {
  const double kk = static_cast<double>(k);
  double r = z_sq / (kk + 1.0);
  for (double a : series.numerator_params) r *= std::abs(a + kk);
  for (double b : series.denominator_params) r /= std::abs(b + kk);
  return r;
}

}  // namespace

void HypergeometricSeries::validate() const {
  if (p() > q()) {
    throw InvalidSeriesError("pFq with p > q is not entire; got p = " + std::to_string(p()) +
                             ", q = " + std::to_string(q()));
  }
  for (double b : denominator_params) {
    if (!std::isfinite(b) || is_nonpositive_integer(b)) {
      throw InvalidSeriesError("denominator parameter " + std::to_string(b) +
                               " is a nonpositive integer");
    }
  }
  for (double a : numerator_params) {
    if (!std::isfinite(a)) throw InvalidSeriesError("non-finite numerator parameter");
  }
}

namespace detail {

std::size_t term_peak_index(const HypergeometricSeries& series, double z_sq) {
  double k0 = 0.0;
  for (double a : series.numerator_params) k0 = std::max(k0, std::ceil(-a) + 1.0);
  for (double b : series.denominator_params) k0 = std::max(k0, std::ceil(-b) + 1.0);
  const double order = static_cast<double>(series.q() - series.p() + 1);
  const double kz = std::ceil(std::pow(z_sq, 1.0 / order));
  return static_cast<std::size_t>(std::max(k0, kz));
}

}  // namespace detail

EvalResult eval_pfq(const HypergeometricSeries& series, double z_sq, double target_rel_err,
                    const EvalOptions& options) {
  check_arguments(series, z_sq, target_rel_err);
  if (z_sq == 0.0) return EvalResult{1.0, 0.0, 1, 53};

  const double z = std::sqrt(z_sq);
  const int base_bits = Precision::for_cancellation(z).bits;
  const double scaled = std::ceil(base_bits * std::max(1.0, options.precision_scale));
  if (scaled > options.max_bits) {
    throw PrecisionExhaustedError("eval_pfq: z = " + std::to_string(z) + " needs " +
                                  std::to_string(static_cast<long>(scaled)) +
                                  " bits, above the configured maximum of " +
                                  std::to_string(options.max_bits));
  }
  const Precision prec{static_cast<int>(scaled)};
  const std::size_t term_cap = options.base_term_cap + 4 * static_cast<std::size_t>(std::ceil(z));
  const std::size_t peak = detail::term_peak_index(series, z_sq);

  const XReal unit(1.0, prec);
  detail::TermRecurrence<XReal> rec(series, z_sq, unit);
  XReal sum = unit;
  XReal threshold(prec);
  long max_exponent = 1;
  int consecutive_small = 0;
  bool terminated = false;
  std::size_t k = 0;

  for (;; ++k) {
    if (k >= term_cap) {
      throw PrecisionExhaustedError("eval_pfq: no convergence within " +
                                    std::to_string(term_cap) + " terms");
    }
    rec.advance();  // term is now t_{k+1}
    const XReal& t = rec.term();
    if (t.is_zero()) {
      terminated = true;
      break;
    }
    sum += t;
    max_exponent = std::max(max_exponent, t.exponent());

    threshold = sum;
    threshold *= target_rel_err;
    consecutive_small = (mpfr_cmpabs(t.raw(), threshold.raw()) < 0) ? consecutive_small + 1 : 0;
    if (consecutive_small >= 3 && k + 1 > peak) break;
  }

  EvalResult out;
  out.value = sum.to_double();
  out.precision_bits_used = prec.bits;
  out.terms_used = k + (terminated ? 1 : 2);

  const double ops_per_term = static_cast<double>(series.p() + series.q() + 4);
  const double rounding =
      std::ldexp(static_cast<double>(out.terms_used) * ops_per_term, static_cast<int>(std::max(
                                                                         max_exponent - prec.bits,
                                                                         -100000L)));
  double tail = 0.0;
  if (!terminated) {
    const double last = std::abs(rec.term().to_double());
    const double r = term_ratio(series, z_sq, k + 1);
    tail = r < 1.0 ? last * r / (1.0 - r) : last;
  }
  out.abs_error_estimate = tail + rounding + std::ldexp(std::abs(out.value), -51);
  return out;
}

EvalResult eval_1f2(double a, double b1, double b2, double z_sq, double tol,
                    const EvalOptions& options) {
  return eval_pfq(HypergeometricSeries{{a}, {b1, b2}}, z_sq, tol, options);
}

EvalResult eval_2f3(double a1, double a2, double b1, double b2, double b3, double z_sq, double tol,
                    const EvalOptions& options) {
  return eval_pfq(HypergeometricSeries{{a1, a2}, {b1, b2, b3}}, z_sq, tol, options);
}

EvalResult eval_3f4(double a1, double a2, double a3, double b1, double b2, double b3, double b4,
                    double z_sq, double tol, const EvalOptions& options) {
  return eval_pfq(HypergeometricSeries{{a1, a2, a3}, {b1, b2, b3, b4}}, z_sq, tol, options);
}

double naive_pfq_double(const HypergeometricSeries& series, double z_sq, double target_rel_err) {
  check_arguments(series, z_sq, target_rel_err);
  if (z_sq == 0.0) return 1.0;
  const std::size_t peak = detail::term_peak_index(series, z_sq);
  const std::size_t term_cap = 10000 + 4 * static_cast<std::size_t>(std::ceil(std::sqrt(z_sq)));
  detail::TermRecurrence<double> rec(series, z_sq, 1.0);
  double sum = 1.0;
  int consecutive_small = 0;
  for (std::size_t k = 0; k < term_cap; ++k) {
    rec.advance();
    const double t = rec.term();
    if (t == 0.0) break;
    sum += t;
    consecutive_small = std::abs(t) < target_rel_err * std::abs(sum) ? consecutive_small + 1 : 0;
    if (consecutive_small >= 3 && k + 1 > peak) break;
  }
  return sum;
}

}  // namespace perispec
