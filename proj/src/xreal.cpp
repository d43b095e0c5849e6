#include "perispec/xreal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace perispec {

Precision::Precision(int b) : bits(b) {
  if (b < 53) {
    throw std::invalid_argument("Precision: bits must be >= 53, got " + std::to_string(b));
  }
}

Precision Precision::for_cancellation(double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("Precision::for_cancellation: z must be finite and >= 0");
  }
  const double headroom = std::ceil(2.0 * z * std::numbers::log2e);
  if (headroom > 1e9) {
    throw std::invalid_argument("Precision::for_cancellation: z too large");
  }
  return Precision{53 + static_cast<int>(headroom) + 40};
}

XReal::XReal(Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_zero(value_, 1);
}

XReal::XReal(double v, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

XReal::XReal(std::string_view decimal, Precision p) {
  mpfr_init2(value_, p.bits);
  const std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("XReal: cannot parse '" + s + "'");
  }
}

XReal::XReal(const XReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

XReal::XReal(XReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

XReal& XReal::operator=(const XReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

XReal& XReal::operator=(XReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

XReal& XReal::operator=(double v) {
  mpfr_set_d(value_, v, MPFR_RNDN);
  return *this;
}

XReal::~XReal() { mpfr_clear(value_); }

Precision XReal::precision() const {
  return Precision{static_cast<int>(mpfr_get_prec(value_))};
}

double XReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string XReal::to_string() const {
  const auto bits = mpfr_get_prec(value_);
  const int digits = 1 + static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0)));
  char* buffer = nullptr;
  if (mpfr_asprintf(&buffer, "%.*Re", digits - 1, value_) < 0) {
    throw std::runtime_error("XReal::to_string: formatting failed");
  }
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

bool XReal::is_zero() const { return mpfr_zero_p(value_) != 0; }

int XReal::sign() const { return mpfr_sgn(value_); }

long XReal::exponent() const {
  if (mpfr_zero_p(value_)) return mpfr_get_emin();
  return mpfr_get_exp(value_);
}

void XReal::widen_to(mpfr_prec_t bits) {
  if (bits > mpfr_get_prec(value_)) {
    mpfr_prec_round(value_, bits, MPFR_RNDN);
  }
}

XReal& XReal::operator+=(const XReal& rhs) {
  widen_to(mpfr_get_prec(rhs.value_));
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator-=(const XReal& rhs) {
  widen_to(mpfr_get_prec(rhs.value_));
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator*=(const XReal& rhs) {
  widen_to(mpfr_get_prec(rhs.value_));
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator/=(const XReal& rhs) {
  widen_to(mpfr_get_prec(rhs.value_));
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator+=(double rhs) {
  mpfr_add_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator-=(double rhs) {
  mpfr_sub_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

XReal& XReal::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

XReal XReal::operator-() const {
  XReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

bool operator==(const XReal& lhs, const XReal& rhs) {
  return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
}

std::partial_ordering operator<=>(const XReal& lhs, const XReal& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <typename Fn>
XReal apply_unary(const XReal& x, Fn fn) {
  XReal out(x.precision());
  fn(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

XReal abs(const XReal& x) { return apply_unary(x, mpfr_abs); }
XReal sqrt(const XReal& x) { return apply_unary(x, mpfr_sqrt); }
XReal exp(const XReal& x) { return apply_unary(x, mpfr_exp); }
XReal log(const XReal& x) { return apply_unary(x, mpfr_log); }
XReal sin(const XReal& x) { return apply_unary(x, mpfr_sin); }
XReal cos(const XReal& x) { return apply_unary(x, mpfr_cos); }

XReal pow(const XReal& x, long k) {
  XReal out(x.precision());
  mpfr_pow_si(out.raw(), x.raw(), k, MPFR_RNDN);
  return out;
}

}  // namespace perispec
