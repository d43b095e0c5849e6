#include "perispec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "perispec/eigenvalues.hpp"
#include "perispec/errors.hpp"

namespace perispec {
namespace {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss–Legendre on [lo, hi].
Rule gauss_legendre(int m, double lo, double hi) {
  Rule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[m - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[m - 1 - i] = half * w;
  }
  return rule;
}

void append(Rule& into, const Rule& part) {
  into.nodes.insert(into.nodes.end(), part.nodes.begin(), part.nodes.end());
  into.weights.insert(into.weights.end(), part.weights.begin(), part.weights.end());
}

// Radial nodes r and weights for ∫_0^δ f(r) dr through r = δ t^{1/γ}.
Rule radial_rule(double delta, double grading, double phase_span, int per_panel) {
  constexpr double kGradedEnd = 0.25;
  constexpr double kRatio = 0.2;
  constexpr int kGradedPanels = 12;

  Rule t_rule;
  double hi = kGradedEnd;
  for (int j = 0; j < kGradedPanels; ++j) {
    const double lo = hi * kRatio;
    append(t_rule, gauss_legendre(per_panel, lo, hi));
    hi = lo;
  }
  append(t_rule, gauss_legendre(per_panel, 0.0, hi));
  const int uniform = std::max(2, static_cast<int>(std::ceil(phase_span / 4.0)));
  for (int j = 0; j < uniform; ++j) {
    const double lo = kGradedEnd + (1.0 - kGradedEnd) * j / uniform;
    const double up = kGradedEnd + (1.0 - kGradedEnd) * (j + 1) / uniform;
    append(t_rule, gauss_legendre(per_panel, lo, up));
  }

  Rule r_rule;
  r_rule.nodes.reserve(t_rule.nodes.size());
  r_rule.weights.reserve(t_rule.nodes.size());
  const double inv = 1.0 / grading;
  for (std::size_t i = 0; i < t_rule.nodes.size(); ++i) {
    const double t = t_rule.nodes[i];
    r_rule.nodes.push_back(delta * std::pow(t, inv));
    r_rule.weights.push_back(t_rule.weights[i] * delta * inv * std::pow(t, inv - 1.0));
  }
  return r_rule;
}

struct Direction {
  Eigen::VectorXd theta;
  double weight;
};

// Quadrature on the unit sphere S^{n−1} with total mass |S^{n−1}|.
std::vector<Direction> sphere_rule(int n, int m) {
  std::vector<Direction> dirs;
  if (n == 1) {
    dirs.push_back({Eigen::VectorXd::Constant(1, 1.0), 1.0});
    dirs.push_back({Eigen::VectorXd::Constant(1, -1.0), 1.0});
    return dirs;
  }
  const double dphi = 2.0 * std::numbers::pi / m;
  if (n == 2) {
    for (int j = 0; j < m; ++j) {
      const double phi = (j + 0.5) * dphi;
      Eigen::VectorXd th(2);
      th << std::cos(phi), std::sin(phi);
      dirs.push_back({th, dphi});
    }
    return dirs;
  }
  const Rule polar = gauss_legendre(m, -1.0, 1.0);
  for (int i = 0; i < m; ++i) {
    const double t = polar.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (int j = 0; j < m; ++j) {
      const double phi = (j + 0.5) * dphi;
      Eigen::VectorXd th(3);
      th << t, s * std::cos(phi), s * std::sin(phi);
      dirs.push_back({th, polar.weights[i] * dphi});
    }
  }
  return dirs;
}

double grading_for(const MaterialParams& params, const QuadratureSpec& spec) {
  return spec.grading_exponent > 0.0 ? spec.grading_exponent : params.n + 2 - params.beta;
}

struct RawResult {
  double lambda1;
  double lambda2;
  double off_axis;
  Eigen::MatrixXd multiplier;
};

RawResult integrate(const MaterialParams& params, const Eigen::VectorXd& nu,
                    const QuadratureSpec& spec) {
  const int n = params.n;
  const DerivedParams d = derive(params);
  const double s = nu.norm();
  const Eigen::VectorXd nu_hat = nu / s;
  const Rule radial = radial_rule(params.delta, grading_for(params, spec), s * params.delta,
                                  spec.radial_points);
  const std::vector<Direction> dirs = sphere_rule(n, spec.angular_points);

  // A = ∫ θθᵀ r^{n−1−β} (cos(s r θ·ν̂) − 1), G = ∫ θ r^{n−β} sin(s r θ·ν̂)
  std::vector<double> radial_factor(radial.nodes.size());
  for (std::size_t k = 0; k < radial.nodes.size(); ++k) {
    radial_factor[k] = radial.weights[k] * std::pow(radial.nodes[k], n - 1 - params.beta);
  }

  Eigen::MatrixXd dyadic = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd odd = Eigen::VectorXd::Zero(n);
  for (const Direction& dir : dirs) {
    const double proj = dir.theta.dot(nu_hat);
    double acc_even = 0.0;
    double acc_odd = 0.0;
    for (std::size_t k = 0; k < radial.nodes.size(); ++k) {
      const double r = radial.nodes[k];
      const double phase = s * r * proj;
      const double half_sin = std::sin(0.5 * phase);
      const double rb = radial_factor[k];
      acc_even += rb * (-2.0 * half_sin * half_sin);
      acc_odd += rb * r * std::sin(phase);
    }
    dyadic.noalias() += (dir.weight * acc_even) * dir.theta * dir.theta.transpose();
    odd.noalias() += (dir.weight * acc_odd) * dir.theta;
  }

  RawResult out;
  out.multiplier = ((n + 2) * params.mu * d.c) * dyadic -
                   ((params.lambda_star - params.mu) * d.c * d.c / 4.0) * odd * odd.transpose();
  out.lambda1 = nu_hat.dot(out.multiplier * nu_hat);
  const Eigen::VectorXd residual = out.multiplier * nu_hat - out.lambda1 * nu_hat;
  out.off_axis = residual.norm() / std::max(std::abs(out.lambda1), 1e-300);

  if (n >= 2) {
    out.lambda2 = (out.multiplier.trace() - out.lambda1) / (n - 1);
  } else {
    // no transverse direction: continue the transverse multiplier in n,
    // 3μc ∫_0^δ r^{−β} ∫_{−1}^{1} (cos(s r t) − 1) dt dr
    const Rule cosine = gauss_legendre(spec.angular_points, -1.0, 1.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < cosine.nodes.size(); ++i) {
      for (std::size_t k = 0; k < radial.nodes.size(); ++k) {
        const double r = radial.nodes[k];
        const double half_sin = std::sin(0.5 * s * r * cosine.nodes[i]);
        // r^{n−1−β} = r^{−β} at n = 1
        acc += cosine.weights[i] * radial_factor[k] * (-2.0 * half_sin * half_sin);
      }
    }
    out.lambda2 = 3.0 * params.mu * d.c * acc;
  }
  return out;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (radial_points < 16) throw std::invalid_argument("QuadratureSpec: radial_points must be >= 16");
  if (angular_points < 4) throw std::invalid_argument("QuadratureSpec: angular_points must be >= 4");
  if (!(target_rel_err >= 1e-8)) {
    throw std::invalid_argument("QuadratureSpec: target_rel_err must be >= 1e-8");
  }
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec out = *this;
  out.radial_points *= 2;
  out.angular_points *= 2;
  return out;
}

OracleResult oracle_multipliers(const MaterialParams& params, const Eigen::VectorXd& nu,
                                const QuadratureSpec& spec) {
  params.validate();
  spec.validate();
  if (params.n > 3) {
    throw UnsupportedDimensionError("oracle: only n <= 3 is supported, got n = " +
                                    std::to_string(params.n));
  }
  if (!(params.beta < params.n + 2)) {
    throw SingularityError("oracle: kernel not integrable for beta >= n + 2");
  }
  if (nu.size() != params.n || !nu.allFinite()) {
    throw std::invalid_argument("oracle: wave vector must be finite with n components");
  }

  OracleResult out;
  if (nu.norm() == 0.0) {
    out.multiplier = Eigen::MatrixXd::Zero(params.n, params.n);
    return out;
  }
  const RawResult coarse = integrate(params, nu, spec);
  const RawResult fine = integrate(params, nu, spec.refined());
  const auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
  out.lambda1 = fine.lambda1;
  out.lambda2 = fine.lambda2;
  out.off_axis = fine.off_axis;
  out.multiplier = fine.multiplier;
  out.rel_error_estimate = std::max(rel(coarse.lambda1, fine.lambda1), rel(coarse.lambda2, fine.lambda2));
  if (out.rel_error_estimate > spec.target_rel_err) {
    throw NonConvergenceError("oracle: refinement changed the result by " +
                              std::to_string(out.rel_error_estimate) + " (target " +
                              std::to_string(spec.target_rel_err) + ") at " + params.describe());
  }
  return out;
}

OracleResult oracle_multipliers(const MaterialParams& params, double nu_norm,
                                const QuadratureSpec& spec) {
  if (!(nu_norm >= 0.0)) throw std::invalid_argument("oracle: nu_norm must be >= 0");
  params.validate();
  Eigen::VectorXd nu = Eigen::VectorXd::Zero(std::max(params.n, 1));
  nu(0) = nu_norm;
  return oracle_multipliers(params, nu, spec);
}

std::vector<LatticePoint> default_lattice() {
  std::vector<LatticePoint> out;
  for (int n = 1; n <= 3; ++n) {
    for (double dbeta : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      for (double delta : {0.5, 1.0, 2.0}) {
        for (double nu : {0.5, 2.0, 10.0}) out.push_back({n, n + dbeta, delta, nu});
      }
    }
  }
  return out;
}

double relative_discrepancy(double series, double quadrature) {
  return std::abs(series - quadrature) / std::max(std::abs(series), 1e-8);
}

SelftestReport oracle_selftest(const std::vector<LatticePoint>& lattice,
                               const MaterialParams& base, const QuadratureSpec& spec,
                               unsigned threads) {
  SelftestReport report;
  report.threshold = 10.0 * spec.target_rel_err;
  report.entries.resize(lattice.size());

  const auto run_one = [&](std::size_t i) {
    SelftestEntry& e = report.entries[i];
    e.point = lattice[i];
    MaterialParams p = base;
    p.n = e.point.n;
    p.beta = e.point.beta;
    p.delta = e.point.delta;
    if (p.n > 3 || !(p.beta < p.n + 2)) {
      e.status = EntryStatus::Unsupported;
      e.message = p.n > 3 ? "dimension above 3" : "beta >= n + 2 (kernel not integrable)";
      return;
    }
    try {
      e.series_lambda1 = lambda1(p, e.point.nu_norm).value;
      e.series_lambda2 = lambda2(p, e.point.nu_norm).value;
      const OracleResult q = oracle_multipliers(p, e.point.nu_norm, spec);
      e.oracle_lambda1 = q.lambda1;
      e.oracle_lambda2 = q.lambda2;
      e.discrepancy = std::max(relative_discrepancy(e.series_lambda1, q.lambda1),
                               relative_discrepancy(e.series_lambda2, q.lambda2));
      e.status = e.discrepancy <= report.threshold ? EntryStatus::Ok : EntryStatus::Failed;
    } catch (const std::exception& ex) {
      e.status = EntryStatus::Error;
      e.message = ex.what();
    }
  };

  detail::parallel_for(lattice.size(), threads, run_one);

  for (const SelftestEntry& e : report.entries) {
    report.max_discrepancy = std::max(report.max_discrepancy, e.discrepancy);
    if (e.status != EntryStatus::Ok) report.pass = false;
  }
  return report;
}

}  // namespace perispec
