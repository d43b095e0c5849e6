#include "perispec/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "perispec/asymptotics.hpp"
#include "perispec/hypergeometric.hpp"

namespace perispec {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

// −4μab / (δ²(a−1)), the β ≠ n constant of the large-‖ν‖ approximation.
double bounded_limit(const MaterialParams& p) {
  const DerivedParams d = derive(p);
  return -4.0 * p.mu * d.a * d.b / (p.delta * p.delta * (d.a - 1.0));
}

CriterionResult finish(CriterionResult r, bool ok, const std::ostringstream& detail,
                       Clock::time_point start) {
  r.seconds = seconds_since(start);
  r.pass = ok && r.seconds < r.budget_seconds;
  r.detail = detail.str();
  if (r.seconds >= r.budget_seconds) r.detail += " [over runtime budget]";
  return r;
}

}  // namespace

std::vector<FigurePanel> default_panels(int dim) {
  std::vector<FigurePanel> out;
  for (double dbeta : {-1.0, -0.5, 0.0, 1.0, 1.5}) {
    for (double delta : {1.0, 2.0}) out.push_back({dim, dim + dbeta, delta});
  }
  return out;
}

MaterialParams figure_params(const FigurePanel& panel, double mu, double lambda_star) {
  return MaterialParams{panel.dim, panel.delta, panel.beta, mu, lambda_star};
}

std::vector<SpectrumSample> figure_table(const FigurePanel& panel, const EvalPolicy& policy,
                                         double tol, unsigned threads) {
  const auto grid = linspace(0.0, kFigureNuMax, kFigurePoints);
  return eval_spectrum(figure_params(panel), grid, policy, tol, threads);
}

std::vector<double> block_maxima(std::span<const double> x, std::span<const double> y,
                                 double x_start, double x_end, double width) {
  std::vector<double> out;
  for (int j = 0;; ++j) {
    const double hi = x_end - j * width;
    const double lo = hi - width;
    if (lo < x_start - 1e-12 * std::abs(x_end)) break;
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > lo && x[i] <= hi) m = std::max(m, y[i]);
    }
    out.push_back(m);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool strictly_decreasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

SlopeFit block_maxima_slope(std::span<const double> x, std::span<const double> y,
                            std::size_t blocks) {
  if (x.size() != y.size() || blocks < 2 || x.size() < blocks) {
    throw std::invalid_argument("block_maxima_slope: need at least `blocks` >= 2 samples");
  }
  std::vector<double> lx, ly;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * x.size() / blocks;
    const std::size_t hi = (b + 1) * x.size() / blocks;
    std::size_t best = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      if (y[i] > y[best]) best = i;
    }
    lx.push_back(std::log(x[best]));
    ly.push_back(std::log(y[best]));
  }
  const double k = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  SlopeFit fit;
  fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  fit.blocks = blocks;
  return fit;
}

SlopeFit envelope_slope(const MaterialParams& params, EnvelopeTarget target, double z_lo,
                        double z_hi, std::size_t points, std::size_t blocks, unsigned threads) {
  const auto zs = linspace(z_lo, z_hi, points);
  std::vector<double> err(points);
  detail::parallel_for(points, threads, [&](std::size_t i) {
    const double nu = 2.0 * zs[i] / params.delta;
    if (target == EnvelopeTarget::Lambda2) {
      err[i] = std::abs(lambda2(params, nu, 1e-15).value - asym_lambda2(params, nu));
    } else {
      err[i] = std::abs(lambda11(params, nu, 1e-15).value - asym_lambda11(params, nu));
    }
  });
  SlopeFit fit = block_maxima_slope(zs, err, blocks);
  fit.expected = envelope_shape(
                     target == EnvelopeTarget::Lambda2 ? Eigenvalue::Lambda2 : Eigenvalue::Lambda1,
                     params.n)
                     .decay_exponent;
  return fit;
}

PanelCheck check_panel(const FigurePanel& panel, const std::vector<SpectrumSample>& table) {
  PanelCheck check;
  std::ostringstream detail;
  const MaterialParams params = figure_params(panel);

  std::vector<double> nu, l1, l2, e1, e2;
  for (const SpectrumSample& s : table) {
    nu.push_back(s.nu_norm);
    l1.push_back(s.lambda1);
    l2.push_back(s.lambda2);
    e1.push_back(s.asym1 ? std::abs(s.lambda1 - *s.asym1) : 0.0);
    e2.push_back(s.asym2 ? std::abs(s.lambda2 - *s.asym2) : 0.0);
    if (s.nu_norm > 0.0 && !(s.lambda1 <= s.lambda2)) check.ordered = false;
  }

  // the neglected terms oscillate like cos(δ‖ν‖ + φ): |·| has period π/δ
  const double width = std::numbers::pi / panel.delta;
  const double nu_end = nu.empty() ? 0.0 : nu.back();
  const auto m1 = block_maxima(nu, e1, 2.0 * nu_end / 3.0, nu_end, width);
  const auto m2 = block_maxima(nu, e2, 2.0 * nu_end / 3.0, nu_end, width);
  check.error_decreasing = m1.size() >= 2 && m2.size() >= 2 && strictly_decreasing(m1) &&
                           strictly_decreasing(m2);

  if (panel.beta < panel.dim) {
    const double bound = 1.25 * std::abs(bounded_limit(params));
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (std::abs(l1[i]) > bound || std::abs(l2[i]) > bound) check.growth_ok = false;
    }
    detail << "bounded by " << bound;
  } else {
    for (std::size_t i = 1; i < nu.size(); ++i) {
      if (nu[i - 1] >= 10.0 && !(l1[i] < l1[i - 1] && l2[i] < l2[i - 1])) check.growth_ok = false;
    }
    detail << "divergent beyond nu=10";
  }
  detail << "; ordered=" << check.ordered << " err_blocks=" << m1.size() << "/" << m2.size()
         << " decreasing=" << check.error_decreasing << " growth=" << check.growth_ok;
  check.detail = detail.str();
  return check;
}

CriterionResult check_navier_limit() {
  const auto start = Clock::now();
  CriterionResult r{1, "Navier limit beta = n+2", false, "", 0.0, 1.0};
  std::ostringstream detail;
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const MaterialParams p{n, 1.0, n + 2.0, 1.0, 2.0};
    for (double nu : {0.1, 1.0, 2.0, 10.0, 30.0}) {
      worst = std::max(worst, rel_err(lambda1(p, nu).value, -4.0 * nu * nu));
      worst = std::max(worst, rel_err(lambda2(p, nu).value, -nu * nu));
    }
  }
  detail << "max relative error " << worst << " (limit 1e-12)";
  return finish(r, worst <= 1e-12, detail, start);
}

CriterionResult check_oracle_equivalence(unsigned threads) {
  const auto start = Clock::now();
  CriterionResult r{2, "Oracle equivalence on the 135-point lattice", false, "", 0.0, 300.0};
  std::ostringstream detail;
  const SelftestReport report =
      oracle_selftest(default_lattice(), MaterialParams{3, 1.0, 2.0, 1.0, 2.0}, {}, threads);
  bool ok = !report.entries.empty();
  std::size_t problems = 0;
  for (const SelftestEntry& e : report.entries) {
    if (e.status == EntryStatus::Unsupported || e.status == EntryStatus::Error ||
        e.discrepancy > 1e-5) {
      ok = false;
      ++problems;
    }
  }
  detail << report.entries.size() << " points, max discrepancy " << report.max_discrepancy
         << " (limit 1e-5), " << problems << " problem entries";
  return finish(r, ok, detail, start);
}

CriterionResult check_boundedness() {
  const auto start = Clock::now();
  CriterionResult r{3, "Boundedness (beta < n) and log branch (beta = n)", false, "", 0.0, 120.0};
  std::ostringstream detail;
  bool ok = true;
  for (auto [n, beta] : {std::pair{2, 1.0}, std::pair{3, 2.0}}) {
    const MaterialParams p{n, 1.0, beta, 1.0, 2.0};
    const double limit = bounded_limit(p);
    const double value = lambda2(p, 1e4).value;
    const double dev = std::abs(value - limit) / std::abs(limit);
    ok = ok && dev <= 0.05;
    detail << "(n=" << n << ",beta=" << beta << ") |l2-L|/|L|=" << dev << "; ";
  }
  for (int n = 1; n <= 3; ++n) {
    const MaterialParams p{n, 1.0, static_cast<double>(n), 1.0, 2.0};
    const double value = lambda2(p, 1e3).value;
    const double dev = std::abs(value - asym_lambda2(p, 1e3)) / std::abs(value);
    ok = ok && dev <= 0.01;
    detail << "(n=" << n << ",beta=n) |l2-asym|/|l2|=" << dev << "; ";
  }
  return finish(r, ok, detail, start);
}

CriterionResult check_envelope_slopes(unsigned threads) {
  const auto start = Clock::now();
  CriterionResult r{4, "Envelope slopes over z in [50, 500]", false, "", 0.0, 300.0};
  std::ostringstream detail;
  bool ok = true;
  for (auto [n, beta] : {std::pair{1, 1.0}, std::pair{2, 2.0}, std::pair{3, 3.0},
                         std::pair{3, 2.0}, std::pair{3, 4.0}}) {
    const MaterialParams p{n, 1.0, beta, 1.0, 2.0};
    const SlopeFit f2 = envelope_slope(p, EnvelopeTarget::Lambda2, 50, 500, 1000, 20, threads);
    const SlopeFit f11 = envelope_slope(p, EnvelopeTarget::Lambda11, 50, 500, 1000, 20, threads);
    ok = ok && std::abs(f2.slope - f2.expected) <= 0.3 && std::abs(f11.slope - f11.expected) <= 0.3;
    detail << "(n=" << n << ",beta=" << beta << ") l2 " << f2.slope << " vs " << f2.expected
           << ", l11 " << f11.slope << " vs " << f11.expected << "; ";
  }
  return finish(r, ok, detail, start);
}

CriterionResult check_delta_limit() {
  const auto start = Clock::now();
  CriterionResult r{5, "delta -> 0 convergence to Navier", false, "", 0.0, 10.0};
  std::ostringstream detail;
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const MaterialParams p{n, 1e-3, static_cast<double>(n), 1.0, 2.0};
    const NavierEigenvalues nav = navier_eigenvalues(p, 1.0);
    const double d2 = std::abs(lambda2(p, 1.0).value - nav.transverse);
    const double d1 = std::abs(lambda1(p, 1.0).value - nav.longitudinal);
    ok = ok && d1 <= 1e-4 && d2 <= 1e-4;
    detail << "(n=" << n << ") |dl1|=" << d1 << " |dl2|=" << d2 << "; ";
  }
  return finish(r, ok, detail, start);
}

CriterionResult check_figure_protocol(unsigned threads) {
  const auto start = Clock::now();
  CriterionResult r{6, "Figure protocol (dim 3 and 2 panels)", false, "", 0.0, 0.0};
  std::ostringstream detail;
  bool ok = true;
  std::size_t panels = 0;
  for (int dim : {3, 2}) {
    for (const FigurePanel& panel : default_panels(dim)) {
      const auto table = figure_table(panel, EvalPolicy::series_only(), kDefaultTolerance, threads);
      const PanelCheck c = check_panel(panel, table);
      ++panels;
      if (table.size() != kFigurePoints || !c.pass()) {
        ok = false;
        detail << "FAIL (dim=" << dim << ",beta=" << panel.beta << ",delta=" << panel.delta
               << "): " << c.detail << "; ";
      }
    }
  }
  r.budget_seconds = 30.0 * static_cast<double>(panels);
  detail << panels << " panels checked";
  return finish(r, ok, detail, start);
}

CriterionResult check_cancellation() {
  const auto start = Clock::now();
  CriterionResult r{7, "Cancellation regression (2F3 at z = 30)", false, "", 0.0, 5.0};
  std::ostringstream detail;
  const MaterialParams p{3, 2.0, 2.0, 1.0, 2.0};
  const DerivedParams d = derive(p);
  const double z = WaveNumber::from_norm(30.0, p.delta).z;
  const HypergeometricSeries series{{1.0, d.a}, {2.0, d.b + 1.0, d.a + 1.0}};
  const EvalResult extended = eval_pfq(series, z * z, 1e-15);
  EvalOptions doubled;
  doubled.precision_scale = 2.0;
  const EvalResult reference = eval_pfq(series, z * z, 1e-15, doubled);
  const double naive = naive_pfq_double(series, z * z, 1e-15);
  const double naive_dev = rel_err(naive, extended.value);
  const double doubled_dev = rel_err(reference.value, extended.value);
  detail << "naive rel dev " << naive_dev << " (> 1e-6 required), doubled-precision rel dev "
         << doubled_dev << " (<= 1e-12 required), bits " << extended.precision_bits_used << "/"
         << reference.precision_bits_used;
  return finish(r, naive_dev > 1e-6 && doubled_dev <= 1e-12, detail, start);
}

std::vector<CriterionResult> run_validation(ValidationLevel level, unsigned threads) {
  std::vector<CriterionResult> out;
  out.push_back(check_navier_limit());
  out.push_back(check_oracle_equivalence(threads));
  out.push_back(check_boundedness());
  if (level == ValidationLevel::Full) out.push_back(check_envelope_slopes(threads));
  out.push_back(check_delta_limit());
  out.push_back(check_figure_protocol(threads));
  out.push_back(check_cancellation());
  return out;
}

}  // namespace perispec
