#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "perispec/asymptotics.hpp"
#include "perispec/eigenvalues.hpp"
#include "perispec/special_functions.hpp"
#include "reference_series.hpp"

using namespace perispec;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

MaterialParams make(int n, double beta, double delta = 1.0, double mu = 1.0, double ls = 2.0) {
  MaterialParams p;
  p.n = n;
  p.beta = beta;
  p.delta = delta;
  p.mu = mu;
  p.lambda_star = ls;
  return p;
}

}  // namespace

TEST_CASE("derived parameters") {
  const DerivedParams d1 = derive(make(1, 0.0));
  CHECK(d1.a == 1.5);
  CHECK(d1.b == 1.5);
  CHECK(rel(d1.c, 3.0) < 1e-14);

  const DerivedParams d2 = derive(make(3, 5.0));
  CHECK(d2.a == 0.0);
  CHECK(d2.c == 0.0);

  const DerivedParams d3 = derive(make(3, 2.0, 2.0));
  CHECK(rel(d3.c, 0.5625 / std::numbers::pi) < 1e-13);
  CHECK(d3.a == 1.5);
  CHECK(d3.b == 2.5);

  // c > 0 strictly below the Navier exponent
  for (int n = 1; n <= 4; ++n)
    for (double beta : {n - 3.0, n - 0.5, n + 1.0, n + 1.999}) CHECK(derive(make(n, beta)).c > 0.0);

  // against the formula in long double
  for (int n = 1; n <= 3; ++n) {
    const double beta = n - 0.3, delta = 0.7;
    const long double g = std::tgamma(static_cast<long double>(n) / 2 + 1);
    const long double c = 2 * (n + 2 - beta) * g /
                          (std::pow(std::numbers::pi_v<long double>, n / 2.0L) *
                           std::pow(static_cast<long double>(delta), n + 2 - beta));
    CHECK(rel(derive(make(n, beta, delta)).c, static_cast<double>(c)) < 1e-13);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make(0, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make(3, 5.5).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make(3, 2.0, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make(3, 2.0, 1.0, -1.0).validate(), std::invalid_argument);
  CHECK_NOTHROW(make(3, 5.0).validate());
  CHECK_NOTHROW(make(3, 2.0, 1.0, 1.0, -0.5).validate());
  CHECK(WaveNumber::from_norm(4.0, 0.5).z == 1.0);
}

TEST_CASE("zero wave number") {
  for (int n = 1; n <= 3; ++n) {
    const MaterialParams p = make(n, n - 0.5);
    CHECK(lambda1(p, 0.0).value == 0.0);
    CHECK(lambda2(p, 0.0).value == 0.0);
    CHECK(lambda11(p, 0.0).value == 0.0);
    CHECK(lambda12(p, 0.0).value == 0.0);
  }
}

TEST_CASE("Navier exponent reproduces the local operator") {
  for (int n = 1; n <= 3; ++n) {
    const MaterialParams p = make(n, n + 2.0, 0.8);
    CHECK(lambda2(p, 2.0).value == -4.0);
    CHECK(lambda11(p, 2.0).value == -12.0);
    CHECK(lambda12(p, 2.0).value == -4.0);
    CHECK(lambda1(p, 2.0).value == -16.0);
    for (double nu = 0.25; nu <= 30.0; nu += 0.25) {
      const NavierEigenvalues nav = navier_eigenvalues(p, nu);
      CHECK(rel(lambda1(p, nu).value, nav.longitudinal) < 1e-12);
      CHECK(rel(lambda2(p, nu).value, nav.transverse) < 1e-12);
    }
  }
}

TEST_CASE("Navier eigenvalues") {
  const NavierEigenvalues a = navier_eigenvalues(make(3, 2.0), 2.0);
  CHECK(a.longitudinal == -16.0);
  CHECK(a.transverse == -4.0);
  const NavierEigenvalues b = navier_eigenvalues(make(3, 2.0), 0.0);
  CHECK(b.longitudinal == 0.0);
  CHECK(b.transverse == 0.0);
  const NavierEigenvalues c = navier_eigenvalues(make(2, 1.0, 1.0, 1.5, -1.5), 3.0);
  CHECK(c.longitudinal == -1.5 * 9.0);
  CHECK(c.transverse == -1.5 * 9.0);
}

TEST_CASE("small wave number examples") {
  const MaterialParams p = make(3, 2.0);
  const double l2 = lambda2(p, 0.2).value;
  const double l11 = lambda11(p, 0.2).value;
  CHECK(l2 == doctest::Approx(-0.0399657).epsilon(2e-6));
  CHECK(l11 == doctest::Approx(-0.1198287).epsilon(2e-6));
  // Taylor through k = 2 at z² = 0.01
  const double t2 = -0.04 * (1 - (1.5 / 17.5) * 0.01 + 7.5 / (2 * 6 * 15.75 * 8.75) * 1e-4);
  const double t11 = -0.12 * (1 - (2.5 * 1.5) / (2 * 1.5 * 3.5 * 2.5) * 0.01 + 2.0 / 189.0 * 1e-4);
  CHECK(std::abs(l2 - t2) < 1e-10);
  CHECK(std::abs(l11 - t11) < 1e-10);
  // brute-force Pochhammer sums
  const double z_sq = 0.01;
  const double l2_ref = -0.04 * reference::pfq({1, 1.5}, {2, 3.5, 2.5}, z_sq, 200, 40).to_double();
  const double l11_ref =
      -0.12 * reference::pfq({1, 2.5, 1.5}, {2, 1.5, 3.5, 2.5}, z_sq, 200, 40).to_double();
  CHECK(rel(l2, l2_ref) < 1e-14);
  CHECK(rel(l11, l11_ref) < 1e-14);
}

TEST_CASE("frozen high-precision eigenvalues") {
  struct Row {
    int n;
    double beta, delta, mu, ls, nu;
    double l1, l2, l11, l12;
  };
  // mpmath hyper() with 60 + 0.87 z working digits
  const Row rows[] = {
      {3, 2, 1, 1, 2, 0.2, -0.15963712409083700434, -0.039965732419892133805,
       -0.11982869835499612433, -0.039808425735840880005},
      {3, 2, 2, 1, 2, 30, -7.494084760580331187, -7.2054456119618748165, -7.4940791699787700874,
       -5.5906015610995433772e-6},
      {2, 2, 1, 1, 2, 17.5, -52.290337853110030749, -35.927938428818416878,
       -52.226763515768368706, -0.063574337341662042974},
      {1, 0, 1, 1, 2, 1, -3.6698454320267276217, -0.97050473339070573106,
       -2.8535222734578628803, -0.81632315856886474144},
      {3, 4, 1, 1, 2, 60, -702.40316781701165614, -343.42913792811951977, -696.85038141621073299,
       -5.5527864008009231487},
      {2, 3.5, 2, 1, 2, 25, -493.27909262741347669, -187.18576076879885469,
       -468.96830239512214373, -24.310790232291332963},
      {1, -1.5, 0.5, 2, -1, 40, -76.289715969743997883, -86.532531285944324445,
       -76.341394363225134665, 0.051678393481136782362},
      {3, 2.5, 1, 1, 2, 200, -47.342248935784414013, -44.682630226953284115,
       -47.342236777529441575, -0.00001215825497243870417},
  };
  for (const Row& r : rows) {
    const MaterialParams p = make(r.n, r.beta, r.delta, r.mu, r.ls);
    CAPTURE(r.n);
    CAPTURE(r.beta);
    CAPTURE(r.nu);
    CHECK(rel(lambda1(p, r.nu).value, r.l1) < 1e-10);
    CHECK(rel(lambda2(p, r.nu).value, r.l2) < 1e-10);
    CHECK(rel(lambda11(p, r.nu).value, r.l11) < 1e-10);
    CHECK(rel(lambda12(p, r.nu).value, r.l12) < 1e-10);
  }
}

TEST_CASE("additivity and the lambda* = mu case") {
  for (int n = 1; n <= 3; ++n) {
    for (double beta : {n - 1.0, 1.0 * n, n + 1.5}) {
      const MaterialParams p = make(n, beta, 1.3);
      for (double nu : {0.3, 4.0, 17.0, 41.0}) {
        const EvalResult l1 = lambda1(p, nu);
        const double sum = lambda11(p, nu).value + lambda12(p, nu).value;
        CHECK(rel(l1.value, sum) < 1e-12);
        CHECK(l1.abs_error_estimate <= 1e-10 * std::abs(l1.value) + 1e-14 * std::abs(l1.value) +
                                           lambda11(p, nu).abs_error_estimate +
                                           lambda12(p, nu).abs_error_estimate);
      }
      MaterialParams eq = p;
      eq.lambda_star = eq.mu;
      CHECK(lambda12(eq, 5.0).value == 0.0);
      CHECK(lambda1(eq, 5.0).value == lambda11(eq, 5.0).value);
    }
  }
}

TEST_CASE("lambda12 is the square of 1F2") {
  const MaterialParams p = make(2, 1.5, 1.0, 1.0, 4.0);
  const double nu = 6.0, z = 3.0;
  const DerivedParams d = derive(p);
  const double f = eval_1f2(d.a, d.b, d.a + 1, z * z, 1e-14).value;
  CHECK(rel(lambda12(p, nu).value, -nu * nu * 3.0 * f * f) < 1e-13);
}

TEST_CASE("certified tolerance is honoured") {
  const MaterialParams p = make(3, 3.0, 2.0);
  const double nu = 27.0;
  const EvalResult loose = lambda2(p, nu, 1e-6);
  const EvalResult tight = lambda2(p, nu, 1e-14);
  CHECK(std::abs(loose.value - tight.value) <= 1e-6 * std::abs(tight.value));
  CHECK(loose.abs_error_estimate <= 2e-6 * std::abs(loose.value));
}

TEST_CASE("continuum limit as the horizon shrinks") {
  for (int n = 1; n <= 3; ++n) {
    for (double delta : {1e-3, 5e-4, 1e-5}) {
      const MaterialParams p = make(n, n, delta, 1.0, 2.0);
      CHECK(std::abs(lambda2(p, 1.0).value + 1.0) <= 1e-4);
      CHECK(std::abs(lambda1(p, 1.0).value + 4.0) <= 1e-4);
    }
  }
}

TEST_CASE("small-z expansion: leading correction by Richardson extrapolation") {
  for (int n = 1; n <= 3; ++n) {
    for (double beta : {n - 1.0, n + 0.5}) {
      const MaterialParams p = make(n, beta, 2.0);
      const DerivedParams d = derive(p);
      // k = 1 term of ₂F₃(1, a; 2, b+1, a+1; −z²)
      const double k1 = -d.a / (2.0 * (d.b + 1) * (d.a + 1));
      std::vector<double> ratios;
      for (double z : {1e-1, 1e-2, 1e-3}) {
        const double nu = 2.0 * z / p.delta;
        const double r = lambda2(p, nu, 1e-15).value / (-p.mu * nu * nu) - 1.0;
        ratios.push_back(r / (z * z));
      }
      // ratio(z) = k1 + O(z²): eliminate the z² term between 1e−1 and 1e−2
      const double extrapolated = (100.0 * ratios[1] - ratios[0]) / 99.0;
      CHECK(rel(extrapolated, k1) < 1e-6);
      CHECK(rel(ratios[2], k1) < 1e-5);
    }
  }
}

TEST_CASE("negative semidefinite on grids when lambda* >= mu") {
  for (int n = 1; n <= 3; ++n) {
    for (double beta : {n - 2.0, n - 0.5, 1.0 * n, n + 0.5, n + 1.0, n + 1.5}) {
      for (double ls : {1.0, 2.0, 5.0}) {
        const MaterialParams p = make(n, beta, 1.0, 1.0, ls);
        const std::vector<double> grid = linspace(0.0, 60.0, 121);
        for (const SpectrumSample& s : eval_spectrum(p, grid, EvalPolicy::series_only(), 1e-10, 1)) {
          CHECK(s.lambda1 <= 0.0);
          CHECK(s.lambda2 <= 0.0);
        }
      }
    }
  }
}

TEST_CASE("eval_spectrum") {
  const MaterialParams p = make(3, 2.0);
  CHECK(eval_spectrum(p, std::vector<double>{}, EvalPolicy::series_only()).empty());

  const std::vector<double> zero{0.0};
  const auto one = eval_spectrum(p, zero, EvalPolicy::series_only());
  REQUIRE(one.size() == 1);
  CHECK(one[0].lambda1 == 0.0);
  CHECK(one[0].lambda2 == 0.0);
  CHECK(one[0].lambda11 == 0.0);
  CHECK(one[0].lambda12 == 0.0);
  CHECK_FALSE(one[0].asym1.has_value());
  CHECK_FALSE(one[0].asym2.has_value());

  const std::vector<double> unsorted{1.0, 0.5};
  CHECK_THROWS_AS(eval_spectrum(p, unsorted, EvalPolicy::series_only()), std::invalid_argument);
  const std::vector<double> negative{-1.0};
  CHECK_THROWS_AS(eval_spectrum(p, negative, EvalPolicy::series_only()), std::invalid_argument);
}

TEST_CASE("eval_spectrum records the evaluation path") {
  const MaterialParams p = make(3, 2.5, 2.0);
  const std::vector<double> grid = linspace(0.0, 40.0, 81);
  const auto samples = eval_spectrum(p, grid, EvalPolicy::hybrid(20.0));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double z = 0.5 * p.delta * grid[i];
    const SpectrumSample& s = samples[i];
    CHECK(s.nu_norm == grid[i]);
    if (z > 20.0) {
      CHECK(s.path == EvalPath::Asymptotic);
      CHECK(s.lambda2 == asym_lambda2(p, grid[i]));
      CHECK(s.lambda1 == asym_lambda1(p, grid[i]));
    } else {
      CHECK(s.path == EvalPath::Series);
      CHECK(s.lambda2 == lambda2(p, grid[i]).value);
    }
    if (grid[i] > 0.0) {
      REQUIRE(s.asym2.has_value());
      CHECK(*s.asym2 == asym_lambda2(p, grid[i]));
    }
  }
  // the Navier exponent has no asymptotic form; the series is used throughout
  const auto navier = eval_spectrum(make(3, 5.0), grid, EvalPolicy::hybrid(1.0));
  for (const SpectrumSample& s : navier) {
    CHECK(s.path == EvalPath::Series);
    CHECK_FALSE(s.asym1.has_value());
  }
}

TEST_CASE("eval_spectrum is independent of thread count") {
  const MaterialParams p = make(2, 2.0, 2.0);
  const std::vector<double> grid = linspace(0.0, 30.0, 97);
  const auto a = eval_spectrum(p, grid, EvalPolicy::series_only(), 1e-10, 1);
  const auto b = eval_spectrum(p, grid, EvalPolicy::series_only(), 1e-10, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lambda1 == b[i].lambda1);
    CHECK(a[i].lambda2 == b[i].lambda2);
    CHECK(a[i].lambda11 == b[i].lambda11);
    CHECK(a[i].lambda12 == b[i].lambda12);
  }
}

TEST_CASE("linspace") {
  CHECK(linspace(0.0, 30.0, 1000).size() == 1000);
  CHECK(linspace(0.0, 30.0, 1000).back() == 30.0);
  CHECK(linspace(2.0, 5.0, 1) == std::vector<double>{2.0});
  CHECK(linspace(0.0, 1.0, 0).empty());
}
