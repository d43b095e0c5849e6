#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "perispec/special_functions.hpp"

namespace perispec {

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// (2k)! / (4^k k!) √π = Γ(k + 1/2), built from exact integer products.
double half_integer_gamma(int k) {
  long double v = std::sqrt(std::numbers::pi_v<long double>);
  for (int j = 1; j <= k; ++j) v *= (j - 0.5L);
  return static_cast<double>(v);
}

}  // namespace

TEST_CASE("gamma at reference points") {
  CHECK(gamma(1.0) == 1.0);
  CHECK(rel(gamma(2.5), 1.3293403881791370) < 1e-15);
  CHECK(rel(gamma(3.5), 3.3233509704478426) < 1e-15);
  CHECK(gamma(6.0) == 120.0);
  // mpmath, 60 digits
  CHECK(rel(gamma(-3.3), 0.43851739219876308924) < 1e-14);
  CHECK(rel(gamma(0.1), 9.5135076986687312858) < 1e-14);
  CHECK(rel(gamma(7.25), 1155.3810139199896872) < 1e-14);
  CHECK(rel(gamma(55.5), 1.7080962807994106384e+72) < 1e-13);
  CHECK(rel(gamma(170.5), 5.5620924145599996107e+305) < 1e-13);
  CHECK(rel(gamma(-169.5), 5.6482208842233254718e-306) < 1e-13);
}

TEST_CASE("gamma agrees with the C library over [-170, 170]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-170.0, 170.0);
  double worst = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double x = u(rng);
    if (std::abs(x - std::round(x)) < 1e-6 && x < 0.5) continue;
    const double want = std::tgamma(x);
    if (want == 0.0 || !std::isfinite(want)) continue;
    worst = std::max(worst, rel(gamma(x), want));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("gamma recurrence on random arguments") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    CHECK(rel(gamma(x + 1.0), x * gamma(x)) < 1e-12);
  }
}

TEST_CASE("gamma at half-integers matches closed forms") {
  for (int k = 0; k <= 20; ++k) {
    CHECK(rel(gamma(k + 0.5), half_integer_gamma(k)) < 1e-14);
  }
}

TEST_CASE("log_gamma") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(rel(log_gamma(300.5), std::lgamma(300.5)) < 1e-14);
  CHECK(rel(log_gamma(-2.5), std::lgamma(-2.5)) < 1e-13);
  CHECK_THROWS_AS(log_gamma(-4.0), PoleError);
}

TEST_CASE("gamma errors") {
  CHECK_THROWS_AS(gamma(0.0), PoleError);
  CHECK_THROWS_AS(gamma(-1.0), PoleError);
  CHECK_THROWS_AS(gamma(-17.0), PoleError);
  CHECK_THROWS_AS(gamma(172.0), OverflowError);
  CHECK_THROWS_AS(gamma(200.5), OverflowError);
  CHECK(std::isnan(gamma(std::nan(""))));
}

TEST_CASE("reciprocal gamma") {
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-1.0) == 0.0);
  CHECK(reciprocal_gamma(-30.0) == 0.0);
  CHECK(rel(reciprocal_gamma(0.5), 0.5641895835477563) < 1e-15);
  CHECK(reciprocal_gamma(500.0) == 0.0);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-170.0, 170.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    if (std::abs(x - std::round(x)) < 1e-6 && x < 0.5) continue;
    CHECK(std::abs(reciprocal_gamma(x) * gamma(x) - 1.0) < 1e-11);
  }
}

TEST_CASE("digamma") {
  CHECK(rel(digamma(1.0), -0.5772156649015329) < 1e-15);
  CHECK(rel(digamma(0.5), -1.9635100260214235) < 1e-15);
  CHECK(rel(digamma(2.5), 0.7031566406452434) < 1e-15);
  // mpmath, general path
  CHECK(rel(digamma(0.1), -10.423754940411076232) < 1e-13);
  CHECK(rel(digamma(3.7), 1.1671535393615114409) < 1e-13);
  CHECK(rel(digamma(25.3), 3.2109113801825358832) < 1e-13);

  for (double x = 0.5; x <= 20.0; x += 0.5) {
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12);
  }
  // fast path and general path meet
  CHECK(rel(digamma(2.5 + 1e-13), digamma(2.5)) < 1e-12);

  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-1.5), DomainError);
}

TEST_CASE("euler gamma") {
  CHECK(euler_gamma() == 0.5772156649015329);
  CHECK(digamma(1.0) == -euler_gamma());
  CHECK(euler_gamma() > 0.577);
  CHECK(euler_gamma() < 0.578);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(-2.0, 0) == 1.0);
  CHECK(pochhammer(0.0, 3) == 0.0);
  CHECK(pochhammer(1.5, 3) == 13.125);
  CHECK(pochhammer(1.0, 10) == 3628800.0);
  CHECK(pochhammer(-3.0, 5) == 0.0);
  CHECK_THROWS_AS(pochhammer(1.0, 200), OverflowError);

  // exact step recurrence in extended precision
  const Precision p(4096);
  for (double a : {0.5, 1.5, -2.25, 7.0 / 3.0}) {
    const XReal ax(a, p);
    XReal prev = pochhammer(ax, 0);
    for (unsigned k = 0; k < 40; ++k) {
      const XReal next = pochhammer(ax, k + 1);
      CHECK(next == prev * (ax + static_cast<double>(k)));
      prev = next;
    }
  }
}

}  // namespace perispec
