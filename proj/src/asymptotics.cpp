#include "perispec/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "perispec/errors.hpp"
#include "perispec/special_functions.hpp"

namespace perispec {
namespace {

struct Setup {
  DerivedParams d;
  double z;
};

Setup prepare(const MaterialParams& params, double nu_norm, const char* who) {
  params.validate();
  if (!(params.beta < params.n + 2)) {
    throw DomainError(std::string(who) + ": asymptotic formulas require beta < n + 2");
  }
  if (!(nu_norm > 0.0) || !std::isfinite(nu_norm)) {
    throw DomainError(std::string(who) + ": requires a finite nu_norm > 0");
  }
  return {derive(params), WaveNumber::from_norm(nu_norm, params.delta).z};
}

// 4 μ a b / δ²
double log_scale(const MaterialParams& p, const DerivedParams& d) {
  return 4.0 * p.mu * d.a * d.b / (p.delta * p.delta);
}

// Γ(b+1) Γ(a+1) / Γ((β+2)/2)
double power_coefficient(const MaterialParams& p, const DerivedParams& d) {
  return gamma(d.b + 1.0) * gamma(d.a + 1.0) * reciprocal_gamma(0.5 * (p.beta + 2.0));
}

}  // namespace

BranchInfo classify_branch(const MaterialParams& params) {
  const double gap = std::abs(params.beta - params.n);
  if (gap < kBranchTolerance) return {AsymptoticBranch::Logarithmic, gap > 0.0};
  return {AsymptoticBranch::PowerLaw, false};
}

double asym_lambda2(const MaterialParams& params, double nu_norm) {
  const auto [d, z] = prepare(params, nu_norm, "asym_lambda2");
  const double k0 = log_scale(params, d);
  if (classify_branch(params).kind == AsymptoticBranch::Logarithmic) {
    return -k0 * (2.0 * std::log(z) + euler_gamma() - digamma(d.b));
  }
  const double half_gap = 0.5 * (params.beta - params.n);
  return -k0 / (d.a - 1.0) - power_coefficient(params, d) / half_gap *
                                 (4.0 * params.mu / (params.delta * params.delta)) *
                                 std::pow(z, params.beta - params.n);
}

double asym_lambda11(const MaterialParams& params, double nu_norm) {
  const auto [d, z] = prepare(params, nu_norm, "asym_lambda11");
  const double k0 = log_scale(params, d);
  if (classify_branch(params).kind == AsymptoticBranch::Logarithmic) {
    return -k0 * (2.0 * std::log(z) + euler_gamma() + 2.0 - digamma(d.b));
  }
  const double n_minus_beta = params.n - params.beta;
  return -k0 / (d.a - 1.0) - (n_minus_beta - 1.0) / n_minus_beta * power_coefficient(params, d) *
                                 (8.0 * params.mu / (params.delta * params.delta)) *
                                 std::pow(z, params.beta - params.n);
}

double asym_lambda12(const MaterialParams& params, double nu_norm) {
  const auto [d, z] = prepare(params, nu_norm, "asym_lambda12");
  const double ratio = gamma(d.b) * gamma(d.a + 1.0) * reciprocal_gamma(0.5 * params.beta);
  return -(params.lambda_star - params.mu) * ratio * ratio *
         (4.0 / (params.delta * params.delta)) *
         std::pow(z, 2.0 * (params.beta - (params.n + 1)));
}

double asym_lambda1(const MaterialParams& params, double nu_norm) {
  return asym_lambda12(params, nu_norm) + asym_lambda11(params, nu_norm);
}

ErrorEnvelope envelope_shape(Eigenvalue which, int n) {
  if (which == Eigenvalue::Lambda2) {
    return {-(n + 3) / 2.0, "mu |nu|^2 a Gamma(b+1) * 2 (2 pi)^-1/2 2^(b+2) (2z)^-(2b+5)/2"};
  }
  return {-(n + 1) / 2.0,
          "3 mu |nu|^2 (2/3) a Gamma(b+1) * 2 (2 pi)^-1/2 2^(b+1) (2z)^-(2b+3)/2, plus the "
          "1F2 cross term |lambda*-mu| |nu|^2 (a Gamma(b))^2 (2|H| E + E^2)"};
}

double error_envelope(Eigenvalue which, const MaterialParams& params, double nu_norm) {
  const auto [d, z] = prepare(params, nu_norm, "error_envelope");
  const double nu_sq = nu_norm * nu_norm;
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  // 2 * (2π)^{-1/2} 2^{shift} (2z)^{-power}: both conjugate oscillatory terms
  const auto oscillatory = [&](double shift, double power) {
    return 2.0 * inv_sqrt_2pi * std::pow(2.0, shift) * std::pow(2.0 * z, -power);
  };
  const double a_gamma_b1 = d.a * gamma(d.b + 1.0);

  if (which == Eigenvalue::Lambda2) {
    return params.mu * nu_sq * a_gamma_b1 * oscillatory(d.b + 2.0, (2.0 * d.b + 5.0) / 2.0);
  }
  const double part11 = 2.0 * params.mu * nu_sq * a_gamma_b1 *
                        oscillatory(d.b + 1.0, (2.0 * d.b + 3.0) / 2.0);
  const double e12 = oscillatory(d.b + 1.0, (2.0 * d.b + 1.0) / 2.0);
  const double h12 = std::abs(gamma(d.a) * reciprocal_gamma(d.b - d.a)) * std::pow(z, -2.0 * d.a);
  const double a_gamma_b = d.a * gamma(d.b);
  const double part12 = std::abs(params.lambda_star - params.mu) * nu_sq * a_gamma_b * a_gamma_b *
                        (2.0 * h12 * e12 + e12 * e12);
  return part11 + part12;
}

Growth classify_growth(const MaterialParams& params) {
  params.validate();
  if (!(params.beta < params.n + 2)) {
    throw DomainError("classify_growth: requires beta < n + 2");
  }
  if (classify_branch(params).kind == AsymptoticBranch::Logarithmic) {
    return {Growth::Kind::LogDivergent, 0.0};
  }
  if (params.beta < params.n) return {Growth::Kind::Bounded, 0.0};
  // λ₁,₂ grows like z^{2(β−n−1)}, which is slower than z^{β−n} for β < n + 2
  return {Growth::Kind::PowerDivergent, params.beta - params.n};
}

}  // namespace perispec
