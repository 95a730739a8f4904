#pragma once

// Arbitrary-precision real and complex arithmetic.
//
// Every Real owns an MPFR value whose precision is fixed when it is created
// from a PrecisionCtx. Arithmetic between two Reals is carried out at the
// larger of the two precisions; transcendental functions run at the
// argument's precision. There is no ambient precision setting anywhere.

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "tetra/errors.hpp"

namespace tetra {

class Real;

/// Working precision carried explicitly through every operation.
class PrecisionCtx {
 public:
  static constexpr int kDefaultDigits = 50;
  static constexpr int kDefaultGuardDigits = 10;
  static constexpr int kMinDigits = 15;
  static constexpr int kMinGuardDigits = 5;

  PrecisionCtx() = default;
  /// Throws PrecisionError when digits < 15 or guard_digits < 5.
  explicit PrecisionCtx(int digits, int guard_digits = kDefaultGuardDigits);

  int digits() const { return digits_; }
  int guard_digits() const { return guard_digits_; }
  /// digits + guard_digits: the precision computations are carried out at.
  int working_digits() const { return digits_ + guard_digits_; }
  mpfr_prec_t bits() const;

  /// Same guard digits, different output digits.
  PrecisionCtx with_digits(int digits) const { return PrecisionCtx(digits, guard_digits_); }
  /// Context with `extra` more output digits.
  PrecisionCtx raised(int extra) const { return with_digits(digits_ + extra); }

  friend bool operator==(const PrecisionCtx&, const PrecisionCtx&) = default;

 private:
  int digits_ = kDefaultDigits;
  int guard_digits_ = kDefaultGuardDigits;
};

/// Number of bits needed to hold `decimal_digits` decimal digits.
mpfr_prec_t digits_to_bits(int decimal_digits);

class Real {
 public:
  /// Zero at the minimum precision; assignment adopts the source precision.
  Real();
  explicit Real(const PrecisionCtx& ctx);
  Real(long value, const PrecisionCtx& ctx);
  Real(double value, const PrecisionCtx& ctx);
  Real(std::integral auto value, const PrecisionCtx& ctx) : Real(static_cast<long>(value), ctx) {}

  /// Zero with an explicit bit precision.
  static Real with_bits(mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses "[+-]digits[.digits][e[+-]k]"; anything else throws ParseError.
  static Real parse(std::string_view text, const PrecisionCtx& ctx);

  mpfr_prec_t precision() const;
  /// Copy rounded to `ctx.bits()`.
  Real at(const PrecisionCtx& ctx) const;
  Real at_bits(mpfr_prec_t bits) const;

  bool is_zero() const;
  int sign() const;
  double to_double() const;
  /// Nearest integer; throws DomainError when it does not fit in int64.
  std::int64_t to_int64() const;
  /// Base-2 exponent e with 0.5 <= |x|/2^e < 1. Zero maps to a very negative value.
  long exponent2() const;

  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Decimal rendering that parses back to the identical value at this precision.
  std::string to_decimal() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& lhs, const Real& rhs);
  friend Real operator-(const Real& lhs, const Real& rhs);
  friend Real operator*(const Real& lhs, const Real& rhs);
  friend Real operator/(const Real& lhs, const Real& rhs);
  friend Real operator+(const Real& lhs, long rhs);
  friend Real operator-(const Real& lhs, long rhs);
  friend Real operator*(const Real& lhs, long rhs);
  friend Real operator/(const Real& lhs, long rhs);
  friend Real operator+(long lhs, const Real& rhs);
  friend Real operator-(long lhs, const Real& rhs);
  friend Real operator*(long lhs, const Real& rhs);
  friend Real operator/(long lhs, const Real& rhs);

  friend std::partial_ordering operator<=>(const Real& lhs, const Real& rhs);
  friend bool operator==(const Real& lhs, const Real& rhs);
  friend std::partial_ordering operator<=>(const Real& lhs, long rhs);
  friend bool operator==(const Real& lhs, long rhs);

 private:
  mpfr_t value_;
};

/// Throws DomainError if `x` is NaN or infinite. `what` names the operation.
void require_finite(const Real& x, std::string_view what);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real asin(const Real& x);
Real acos(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real atanh(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real pow(const Real& x, long n);
Real sqr(const Real& x);
/// Nearest integer, ties away from zero.
Real round(const Real& x);
Real floor(const Real& x);
/// x * 2^k, exact.
Real ldexp(const Real& x, long k);
Real min(const Real& x, const Real& y);
Real max(const Real& x, const Real& y);

/// 10^k at the context's working precision.
Real pow10(long k, const PrecisionCtx& ctx);
/// Exact rational p/q rounded to working precision.
Real rational(long p, long q, const PrecisionCtx& ctx);

Real const_pi(const PrecisionCtx& ctx);
Real const_log2(const PrecisionCtx& ctx);
Real const_catalan(const PrecisionCtx& ctx);
/// Named constant: "pi", "log2" or "catalan". Unknown names throw DomainError.
Real constant(std::string_view name, const PrecisionCtx& ctx);

/// Angle reduced modulo 2*pi into (-pi, pi].
Real wrap_angle(const Real& theta, const PrecisionCtx& ctx);

class Complex {
 public:
  Complex() = default;
  explicit Complex(const PrecisionCtx& ctx) : re_(ctx), im_(ctx) {}
  explicit Complex(Real re) : re_(std::move(re)), im_(Real::with_bits(re_.precision())) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }

  Complex at(const PrecisionCtx& ctx) const { return {re_.at(ctx), im_.at(ctx)}; }
  mpfr_prec_t precision() const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  /// "re + im i" with `digits` significant digits in each part.
  std::string to_string(int digits) const;

  Complex operator-() const { return {-re_, -im_}; }
  friend Complex operator+(const Complex& lhs, const Complex& rhs);
  friend Complex operator-(const Complex& lhs, const Complex& rhs);
  friend Complex operator*(const Complex& lhs, const Complex& rhs);
  friend Complex operator/(const Complex& lhs, const Complex& rhs);
  friend Complex operator*(const Complex& lhs, const Real& rhs);
  friend Complex operator*(const Real& lhs, const Complex& rhs) { return rhs * lhs; }
  friend Complex operator/(const Complex& lhs, const Real& rhs);
  friend Complex operator+(const Complex& lhs, const Real& rhs);
  friend Complex operator-(const Complex& lhs, const Real& rhs);
  friend Complex operator+(const Real& lhs, const Complex& rhs) { return rhs + lhs; }
  friend Complex operator-(const Real& lhs, const Complex& rhs) { return -rhs + lhs; }
  Complex& operator+=(const Complex& rhs) { return *this = *this + rhs; }
  Complex& operator-=(const Complex& rhs) { return *this = *this - rhs; }
  Complex& operator*=(const Complex& rhs) { return *this = *this * rhs; }

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);
/// Argument in (-pi, pi]; a zero imaginary part counts as +0.
Real arg(const Complex& z);
/// Principal branch, imaginary part in (-pi, pi].
Complex log(const Complex& z);
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);
/// e^{i theta}.
Complex expi(const Real& theta);

/// Evaluates a named elementary function ("exp", "log", "sin", "cos",
/// "tan", "atan", "asin", "atanh", "sqrt") at the context's precision.
Real elementary(std::string_view fn, const Real& x, const PrecisionCtx& ctx);
/// Complex variant; supports "exp", "log", "sqrt".
Complex elementary(std::string_view fn, const Complex& z, const PrecisionCtx& ctx);

}  // namespace tetra
