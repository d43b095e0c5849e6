#include "perispec/eigenvalues.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "perispec/asymptotics.hpp"
#include "perispec/special_functions.hpp"

namespace perispec {

void MaterialParams::validate() const {
  if (n < 1) throw std::invalid_argument("MaterialParams: n must be >= 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("MaterialParams: delta must be finite and > 0");
  }
  if (!std::isfinite(beta) || beta > n + 2) {
    throw std::invalid_argument("MaterialParams: beta must be finite and <= n + 2");
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("MaterialParams: mu must be finite and > 0");
  }
  if (!std::isfinite(lambda_star)) {
    throw std::invalid_argument("MaterialParams: lambda_star must be finite");
  }
}

std::string MaterialParams::describe() const {
  std::ostringstream os;
  os << "n=" << n << " delta=" << delta << " beta=" << beta << " mu=" << mu
     << " lambda_star=" << lambda_star;
  return os.str();
}

DerivedParams derive(const MaterialParams& params) {
  params.validate();
  const double order = params.n + 2 - params.beta;
  DerivedParams d;
  d.a = 0.5 * order;
  d.b = 0.5 * (params.n + 2);
  d.c = 2.0 * order * gamma(0.5 * params.n + 1.0) /
        (std::pow(std::numbers::pi, 0.5 * params.n) * std::pow(params.delta, order));
  return d;
}

namespace {

struct Prepared {
  DerivedParams d;
  double nu_sq;
  double z_sq;
};

Prepared prepare(const MaterialParams& params, double nu_norm) {
  const DerivedParams d = derive(params);
  if (!(nu_norm >= 0.0) || !std::isfinite(nu_norm)) {
    throw std::invalid_argument("nu_norm must be finite and >= 0");
  }
  const double z = WaveNumber::from_norm(nu_norm, params.delta).z;
  return {d, nu_norm * nu_norm, z * z};
}

EvalResult scaled(const EvalResult& series, double factor) {
  return {factor * series.value, std::abs(factor) * series.abs_error_estimate, series.terms_used,
          series.precision_bits_used};
}

}  // namespace

EvalResult lambda2(const MaterialParams& params, double nu_norm, double tol,
                   const EvalOptions& options) {
  const auto [d, nu_sq, z_sq] = prepare(params, nu_norm);
  if (nu_norm == 0.0) return {};
  const EvalResult f = eval_2f3(1.0, d.a, 2.0, d.b + 1.0, d.a + 1.0, z_sq, tol, options);
  return scaled(f, -params.mu * nu_sq);
}

EvalResult lambda11(const MaterialParams& params, double nu_norm, double tol,
                    const EvalOptions& options) {
  const auto [d, nu_sq, z_sq] = prepare(params, nu_norm);
  if (nu_norm == 0.0) return {};
  const EvalResult f =
      eval_3f4(1.0, 2.5, d.a, 2.0, 1.5, d.b + 1.0, d.a + 1.0, z_sq, tol, options);
  return scaled(f, -3.0 * params.mu * nu_sq);
}

EvalResult lambda12(const MaterialParams& params, double nu_norm, double tol,
                    const EvalOptions& options) {
  const auto [d, nu_sq, z_sq] = prepare(params, nu_norm);
  if (nu_norm == 0.0) return {};
  const EvalResult f = eval_1f2(d.a, d.b, d.a + 1.0, z_sq, tol, options);
  const double factor = -nu_sq * (params.lambda_star - params.mu);
  const double e = f.abs_error_estimate;
  return {factor * f.value * f.value, std::abs(factor) * (2.0 * std::abs(f.value) * e + e * e),
          f.terms_used, f.precision_bits_used};
}

EvalResult lambda1(const MaterialParams& params, double nu_norm, double tol,
                   const EvalOptions& options) {
  const EvalResult l11 = lambda11(params, nu_norm, tol, options);
  const EvalResult l12 = lambda12(params, nu_norm, tol, options);
  return {l11.value + l12.value, l11.abs_error_estimate + l12.abs_error_estimate,
          l11.terms_used + l12.terms_used,
          std::max(l11.precision_bits_used, l12.precision_bits_used)};
}

NavierEigenvalues navier_eigenvalues(const MaterialParams& params, double nu_norm) {
  const double nu_sq = nu_norm * nu_norm;
  return {-(params.lambda_star + 2.0 * params.mu) * nu_sq, -params.mu * nu_sq};
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  if (n > 1) out.back() = hi;
  return out;
}

namespace {

SpectrumSample sample_at(const MaterialParams& params, double nu_norm, const EvalPolicy& policy,
                         double tol) {
  SpectrumSample s;
  s.nu_norm = nu_norm;
  const bool has_asymptotics = nu_norm > 0.0 && params.beta < params.n + 2;
  if (has_asymptotics) {
    s.asym1 = asym_lambda1(params, nu_norm);
    s.asym2 = asym_lambda2(params, nu_norm);
  }
  const double z = WaveNumber::from_norm(nu_norm, params.delta).z;
  if (policy.kind == EvalPolicy::Kind::Hybrid && has_asymptotics && z > policy.z_switch) {
    s.path = EvalPath::Asymptotic;
    s.lambda11 = asym_lambda11(params, nu_norm);
    s.lambda12 = asym_lambda12(params, nu_norm);
    s.lambda1 = *s.asym1;
    s.lambda2 = *s.asym2;
    return s;
  }
  s.path = EvalPath::Series;
  s.lambda11 = lambda11(params, nu_norm, tol).value;
  s.lambda12 = lambda12(params, nu_norm, tol).value;
  s.lambda1 = s.lambda11 + s.lambda12;
  s.lambda2 = lambda2(params, nu_norm, tol).value;
  return s;
}

}  // namespace

std::vector<SpectrumSample> eval_spectrum(const MaterialParams& params,
                                          std::span<const double> grid, const EvalPolicy& policy,
                                          double tol, unsigned threads) {
  params.validate();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) {
      throw std::invalid_argument("eval_spectrum: grid values must be finite and >= 0");
    }
    if (i > 0 && grid[i] < grid[i - 1]) {
      throw std::invalid_argument("eval_spectrum: grid must be sorted");
    }
  }
  std::vector<SpectrumSample> out(grid.size());
  detail::parallel_for(grid.size(), threads,
                       [&](std::size_t i) { out[i] = sample_at(params, grid[i], policy, tol); });
  return out;
}

}  // namespace perispec
