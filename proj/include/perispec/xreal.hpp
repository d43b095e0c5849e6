#ifndef PERISPEC_XREAL_HPP
#define PERISPEC_XREAL_HPP

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace perispec {

/// Binary mantissa precision of an extended-precision value, in bits (>= 53).
struct Precision {
  int bits = 53;

  constexpr Precision() = default;
  explicit Precision(int b);

  /// Working precision for summing an alternating series whose largest term
  /// is about e^{2z} times its sum: 53 + ceil(2 z log2(e)) + 40 bits.
  static Precision for_cancellation(double z);

  friend constexpr bool operator==(Precision, Precision) = default;
};

/// Extended-precision real backed by an MPFR value. Arithmetic is correctly
/// rounded (round-to-nearest) at the precision of the result, which is the
/// larger of the operand precisions. Values are ordinary copyable objects.
class XReal {
 public:
  explicit XReal(Precision p = Precision{});
  XReal(double v, Precision p);
  XReal(std::string_view decimal, Precision p);

  XReal(const XReal& other);
  XReal(XReal&& other) noexcept;
  XReal& operator=(const XReal& other);
  XReal& operator=(XReal&& other) noexcept;
  XReal& operator=(double v);
  ~XReal();

  Precision precision() const;

  /// Round-to-nearest conversion to double.
  double to_double() const;
  explicit operator double() const { return to_double(); }

  /// Decimal string with enough digits to round-trip at this precision.
  std::string to_string() const;

  bool is_zero() const;
  int sign() const;
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const;

  XReal& operator+=(const XReal& rhs);
  XReal& operator-=(const XReal& rhs);
  XReal& operator*=(const XReal& rhs);
  XReal& operator/=(const XReal& rhs);
  XReal& operator+=(double rhs);
  XReal& operator-=(double rhs);
  XReal& operator*=(double rhs);
  XReal& operator/=(double rhs);

  XReal operator-() const;

  friend XReal operator+(XReal lhs, const XReal& rhs) { return lhs += rhs; }
  friend XReal operator-(XReal lhs, const XReal& rhs) { return lhs -= rhs; }
  friend XReal operator*(XReal lhs, const XReal& rhs) { return lhs *= rhs; }
  friend XReal operator/(XReal lhs, const XReal& rhs) { return lhs /= rhs; }
  friend XReal operator+(XReal lhs, double rhs) { return lhs += rhs; }
  friend XReal operator-(XReal lhs, double rhs) { return lhs -= rhs; }
  friend XReal operator*(XReal lhs, double rhs) { return lhs *= rhs; }
  friend XReal operator/(XReal lhs, double rhs) { return lhs /= rhs; }

  friend bool operator==(const XReal& lhs, const XReal& rhs);
  friend std::partial_ordering operator<=>(const XReal& lhs, const XReal& rhs);

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  void widen_to(mpfr_prec_t bits);

  mpfr_t value_;
};

XReal abs(const XReal& x);
XReal sqrt(const XReal& x);
XReal exp(const XReal& x);
XReal log(const XReal& x);
XReal sin(const XReal& x);
XReal cos(const XReal& x);
XReal pow(const XReal& x, long k);

}  // namespace perispec

#endif  // PERISPEC_XREAL_HPP
