#include "tetra/mp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace tetra {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t joint_precision(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

void check(const Real& r, std::string_view what) { require_finite(r, what); }

template <typename Op>
Real unary(const Real& x, std::string_view what, Op op) {
  Real r = Real::with_bits(x.precision());
  op(r.get(), x.get(), kRnd);
  check(r, what);
  return r;
}

template <typename Op>
Real binary(const Real& x, const Real& y, std::string_view what, Op op) {
  Real r = Real::with_bits(joint_precision(x, y));
  op(r.get(), x.get(), y.get(), kRnd);
  check(r, what);
  return r;
}

// Accepts [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  const auto n = s.size();
  if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++int_digits;
  std::size_t frac_digits = 0;
  if (i < n && s[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++frac_digits;
  }
  if (int_digits + frac_digits == 0) return false;
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == n;
}

struct MpfrString {
  char* ptr = nullptr;
  ~MpfrString() {
    if (ptr != nullptr) mpfr_free_str(ptr);
  }
};

std::string format_decimal(mpfr_srcptr value, int digits) {
  if (mpfr_zero_p(value)) return "0";
  mpfr_exp_t exp10 = 0;
  MpfrString raw{mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), value, kRnd)};
  std::string mant(raw.ptr);
  std::string sign;
  if (!mant.empty() && mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

  // value = 0.mant * 10^exp10 = mant[0].mant[1..] * 10^(exp10-1)
  const long sci = static_cast<long>(exp10) - 1;
  const long len = static_cast<long>(mant.size());
  if (sci >= -5 && sci < std::max<long>(len, 21)) {
    std::string out;
    if (sci < 0) {
      out = "0." + std::string(static_cast<std::size_t>(-sci - 1), '0') + mant;
    } else if (sci + 1 >= len) {
      out = mant + std::string(static_cast<std::size_t>(sci + 1 - len), '0');
    } else {
      out = mant.substr(0, static_cast<std::size_t>(sci + 1)) + "." +
            mant.substr(static_cast<std::size_t>(sci + 1));
    }
    return sign + out;
  }
  std::string out = mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += (sci < 0 ? "e-" : "e+") + std::to_string(sci < 0 ? -sci : sci);
  return sign + out;
}

}  // namespace

PrecisionCtx::PrecisionCtx(int digits, int guard_digits) : digits_(digits), guard_digits_(guard_digits) {
  if (digits < kMinDigits) {
    throw PrecisionError("precision must be at least " + std::to_string(kMinDigits) +
                         " digits, got " + std::to_string(digits));
  }
  if (guard_digits < kMinGuardDigits) {
    throw PrecisionError("guard digits must be at least " + std::to_string(kMinGuardDigits) +
                         ", got " + std::to_string(guard_digits));
  }
}

mpfr_prec_t PrecisionCtx::bits() const { return digits_to_bits(working_digits()); }

mpfr_prec_t digits_to_bits(int decimal_digits) {
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.321928094887362)) + 4;
}

Real::Real() { mpfr_init2(value_, MPFR_PREC_MIN); mpfr_set_zero(value_, 1); }

Real::Real(const PrecisionCtx& ctx) {
  mpfr_init2(value_, ctx.bits());
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, const PrecisionCtx& ctx) {
  mpfr_init2(value_, ctx.bits());
  mpfr_set_si(value_, value, kRnd);
}

Real::Real(double value, const PrecisionCtx& ctx) {
  if (!std::isfinite(value)) throw DomainError("non-finite double cannot be converted to Real");
  mpfr_init2(value_, ctx.bits());
  mpfr_set_d(value_, value, kRnd);
}

Real Real::with_bits(mpfr_prec_t bits) {
  Real r;
  mpfr_set_prec(r.value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(r.value_, 1);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    }
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, const PrecisionCtx& ctx) {
  if (!is_decimal_literal(text)) {
    throw ParseError("malformed decimal literal '" + std::string(text) + "'");
  }
  Real r(ctx);
  const std::string owned(text);
  char* end = nullptr;
  mpfr_strtofr(r.value_, owned.c_str(), &end, 10, kRnd);
  if (end != owned.c_str() + owned.size()) {
    throw ParseError("malformed decimal literal '" + owned + "'");
  }
  if (!mpfr_number_p(r.value_)) throw ParseError("decimal literal out of range '" + owned + "'");
  return r;
}

mpfr_prec_t Real::precision() const { return mpfr_get_prec(value_); }

Real Real::at(const PrecisionCtx& ctx) const { return at_bits(ctx.bits()); }

Real Real::at_bits(mpfr_prec_t bits) const {
  Real r = with_bits(bits);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }
int Real::sign() const { return mpfr_sgn(value_); }
double Real::to_double() const { return mpfr_get_d(value_, kRnd); }

std::int64_t Real::to_int64() const {
  Real r = round(*this);
  if (mpfr_cmp_d(r.value_, 9.2e18) > 0 || mpfr_cmp_d(r.value_, -9.2e18) < 0) {
    throw DomainError("value does not fit in a 64-bit integer");
  }
  return static_cast<std::int64_t>(mpfr_get_si(r.value_, kRnd));
}

long Real::exponent2() const {
  if (mpfr_zero_p(value_)) return std::numeric_limits<long>::min() / 2;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string Real::to_string(int digits) const { return format_decimal(value_, std::max(digits, 1)); }

std::string Real::to_decimal() const {
  const auto n = mpfr_get_str_ndigits(10, precision());
  return format_decimal(value_, static_cast<int>(n));
}

Real Real::operator-() const { return unary(*this, "negate", mpfr_neg); }
Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& lhs, const Real& rhs) { return binary(lhs, rhs, "add", mpfr_add); }
Real operator-(const Real& lhs, const Real& rhs) { return binary(lhs, rhs, "subtract", mpfr_sub); }
Real operator*(const Real& lhs, const Real& rhs) { return binary(lhs, rhs, "multiply", mpfr_mul); }
Real operator/(const Real& lhs, const Real& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  return binary(lhs, rhs, "divide", mpfr_div);
}

Real operator+(const Real& lhs, long rhs) {
  Real r = Real::with_bits(lhs.precision());
  mpfr_add_si(r.get(), lhs.get(), rhs, kRnd);
  check(r, "add");
  return r;
}
Real operator-(const Real& lhs, long rhs) {
  Real r = Real::with_bits(lhs.precision());
  mpfr_sub_si(r.get(), lhs.get(), rhs, kRnd);
  check(r, "subtract");
  return r;
}
Real operator*(const Real& lhs, long rhs) {
  Real r = Real::with_bits(lhs.precision());
  mpfr_mul_si(r.get(), lhs.get(), rhs, kRnd);
  check(r, "multiply");
  return r;
}
Real operator/(const Real& lhs, long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  Real r = Real::with_bits(lhs.precision());
  mpfr_div_si(r.get(), lhs.get(), rhs, kRnd);
  check(r, "divide");
  return r;
}
Real operator+(long lhs, const Real& rhs) { return rhs + lhs; }
Real operator-(long lhs, const Real& rhs) {
  Real r = Real::with_bits(rhs.precision());
  mpfr_si_sub(r.get(), lhs, rhs.get(), kRnd);
  check(r, "subtract");
  return r;
}
Real operator*(long lhs, const Real& rhs) { return rhs * lhs; }
Real operator/(long lhs, const Real& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  Real r = Real::with_bits(rhs.precision());
  mpfr_si_div(r.get(), lhs, rhs.get(), kRnd);
  check(r, "divide");
  return r;
}

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) {
  if (mpfr_unordered_p(lhs.get(), rhs.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.get(), rhs.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
bool operator==(const Real& lhs, const Real& rhs) { return mpfr_equal_p(lhs.get(), rhs.get()) != 0; }

std::partial_ordering operator<=>(const Real& lhs, long rhs) {
  if (mpfr_nan_p(lhs.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(lhs.get(), rhs);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
bool operator==(const Real& lhs, long rhs) { return !mpfr_nan_p(lhs.get()) && mpfr_cmp_si(lhs.get(), rhs) == 0; }

void require_finite(const Real& x, std::string_view what) {
  if (mpfr_nan_p(x.get())) throw DomainError(std::string(what) + ": result is not a number");
  if (mpfr_inf_p(x.get())) throw DomainError(std::string(what) + ": result overflowed");
}

Real abs(const Real& x) { return unary(x, "abs", mpfr_abs); }

Real sqrt(const Real& x) {
  if (x < 0) throw DomainError("sqrt of a negative number");
  return unary(x, "sqrt", mpfr_sqrt);
}

Real exp(const Real& x) { return unary(x, "exp", mpfr_exp); }
Real expm1(const Real& x) { return unary(x, "expm1", mpfr_expm1); }

Real log(const Real& x) {
  if (x <= 0) throw DomainError("log of a non-positive number");
  return unary(x, "log", mpfr_log);
}

Real log1p(const Real& x) {
  if (x <= -1) throw DomainError("log1p argument <= -1");
  return unary(x, "log1p", mpfr_log1p);
}

Real sin(const Real& x) { return unary(x, "sin", mpfr_sin); }
Real cos(const Real& x) { return unary(x, "cos", mpfr_cos); }
Real tan(const Real& x) { return unary(x, "tan", mpfr_tan); }

Real asin(const Real& x) {
  if (abs(x) > 1) throw DomainError("asin argument outside [-1, 1]");
  return unary(x, "asin", mpfr_asin);
}

Real acos(const Real& x) {
  if (abs(x) > 1) throw DomainError("acos argument outside [-1, 1]");
  return unary(x, "acos", mpfr_acos);
}

Real atan(const Real& x) { return unary(x, "atan", mpfr_atan); }

Real atan2(const Real& y, const Real& x) {
  if (x.is_zero() && y.is_zero()) throw DomainError("atan2(0, 0) is undefined");
  return binary(y, x, "atan2", mpfr_atan2);
}

Real atanh(const Real& x) {
  if (abs(x) >= 1) throw DomainError("atanh argument outside (-1, 1)");
  return unary(x, "atanh", mpfr_atanh);
}

Real sinh(const Real& x) { return unary(x, "sinh", mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, "cosh", mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, "tanh", mpfr_tanh); }

Real pow(const Real& x, long n) {
  if (x.is_zero() && n < 0) throw DomainError("zero raised to a negative power");
  Real r = Real::with_bits(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  check(r, "pow");
  return r;
}

Real sqr(const Real& x) { return unary(x, "sqr", mpfr_sqr); }

Real round(const Real& x) {
  Real r = Real::with_bits(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

Real floor(const Real& x) {
  Real r = Real::with_bits(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real ldexp(const Real& x, long k) {
  Real r = Real::with_bits(x.precision());
  mpfr_mul_2si(r.get(), x.get(), k, kRnd);
  check(r, "ldexp");
  return r;
}

Real min(const Real& x, const Real& y) { return x <= y ? x : y; }
Real max(const Real& x, const Real& y) { return x >= y ? x : y; }

Real pow10(long k, const PrecisionCtx& ctx) {
  Real r(ctx);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(k < 0 ? -k : k), kRnd);
  if (k < 0) mpfr_ui_div(r.get(), 1, r.get(), kRnd);
  check(r, "pow10");
  return r;
}

Real rational(long p, long q, const PrecisionCtx& ctx) { return Real(p, ctx) / q; }

Real const_pi(const PrecisionCtx& ctx) {
  Real r(ctx);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

Real const_log2(const PrecisionCtx& ctx) {
  Real r(ctx);
  mpfr_const_log2(r.get(), kRnd);
  return r;
}

Real const_catalan(const PrecisionCtx& ctx) {
  Real r(ctx);
  mpfr_const_catalan(r.get(), kRnd);
  return r;
}

Real constant(std::string_view name, const PrecisionCtx& ctx) {
  if (name == "pi") return const_pi(ctx);
  if (name == "log2") return const_log2(ctx);
  if (name == "catalan") return const_catalan(ctx);
  throw DomainError("unknown constant '" + std::string(name) + "'");
}

Real wrap_angle(const Real& theta, const PrecisionCtx& ctx) {
  // Extra bits absorb the cancellation in theta - k*2pi for large |theta|.
  const long grow = std::max(0L, theta.exponent2());
  const mpfr_prec_t bits = std::max(ctx.bits(), theta.precision()) + grow + 16;
  Real two_pi = Real::with_bits(bits);
  mpfr_const_pi(two_pi.get(), kRnd);
  two_pi = ldexp(two_pi, 1);
  Real t = theta.at_bits(bits);
  Real r = t - round(t / two_pi) * two_pi;
  const Real half = ldexp(two_pi, -1);
  if (r <= -half) r += two_pi;
  if (r > half) r -= two_pi;
  return r.at(ctx);
}

mpfr_prec_t Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

std::string Complex::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (!im.empty() && im.front() == '-') return re_.to_string(digits) + " - " + im.substr(1) + "i";
  return re_.to_string(digits) + " + " + im + "i";
}

Complex operator+(const Complex& lhs, const Complex& rhs) { return {lhs.re() + rhs.re(), lhs.im() + rhs.im()}; }
Complex operator-(const Complex& lhs, const Complex& rhs) { return {lhs.re() - rhs.re(), lhs.im() - rhs.im()}; }

Complex operator*(const Complex& lhs, const Complex& rhs) {
  return {lhs.re() * rhs.re() - lhs.im() * rhs.im(), lhs.re() * rhs.im() + lhs.im() * rhs.re()};
}

Complex operator/(const Complex& lhs, const Complex& rhs) {
  const Real den = norm(rhs);
  if (den.is_zero()) throw DomainError("complex division by zero");
  return {(lhs.re() * rhs.re() + lhs.im() * rhs.im()) / den,
          (lhs.im() * rhs.re() - lhs.re() * rhs.im()) / den};
}

Complex operator*(const Complex& lhs, const Real& rhs) { return {lhs.re() * rhs, lhs.im() * rhs}; }
Complex operator/(const Complex& lhs, const Real& rhs) { return {lhs.re() / rhs, lhs.im() / rhs}; }
Complex operator+(const Complex& lhs, const Real& rhs) { return {lhs.re() + rhs, lhs.im()}; }
Complex operator-(const Complex& lhs, const Real& rhs) { return {lhs.re() - rhs, lhs.im()}; }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Real abs(const Complex& z) { return binary(z.re(), z.im(), "hypot", mpfr_hypot); }

Real norm(const Complex& z) { return sqr(z.re()) + sqr(z.im()); }

Real arg(const Complex& z) {
  if (z.is_zero()) throw DomainError("argument of complex zero is undefined");
  if (z.im().is_zero()) {
    // Signed zeros must not flip the branch: (-x, -0) still maps to +pi.
    Real pos_zero = Real::with_bits(z.im().precision());
    return binary(pos_zero, z.re(), "arg", mpfr_atan2);
  }
  return atan2(z.im(), z.re());
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("log of complex zero");
  return {log(abs(z)), arg(z)};
}

Complex exp(const Complex& z) {
  const Real m = exp(z.re());
  return {m * cos(z.im()), m * sin(z.im())};
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  const Real t = sqrt(ldexp(abs(z) + abs(z.re()), -1));
  if (z.re() >= 0) return {t, ldexp(z.im() / t, -1)};
  Real im = z.im().sign() < 0 ? -t : t;
  return {ldexp(abs(z.im()) / t, -1), std::move(im)};
}

Complex pow(const Complex& z, long n) {
  Complex base = z;
  Complex result{Real::with_bits(z.precision()) + 1L, Real::with_bits(z.precision())};
  unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  if (n < 0) {
    Complex one{Real::with_bits(z.precision()) + 1L, Real::with_bits(z.precision())};
    return one / result;
  }
  return result;
}

Complex expi(const Real& theta) {
  Real s = Real::with_bits(theta.precision());
  Real c = Real::with_bits(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), kRnd);
  return {std::move(c), std::move(s)};
}

Real elementary(std::string_view fn, const Real& x, const PrecisionCtx& ctx) {
  const Real v = x.at(ctx);
  if (fn == "exp") return exp(v);
  if (fn == "log") return log(v);
  if (fn == "sin") return sin(v);
  if (fn == "cos") return cos(v);
  if (fn == "tan") return tan(v);
  if (fn == "atan") return atan(v);
  if (fn == "asin") return asin(v);
  if (fn == "atanh") return atanh(v);
  if (fn == "sqrt") return sqrt(v);
  throw DomainError("unknown elementary function '" + std::string(fn) + "'");
}

Complex elementary(std::string_view fn, const Complex& z, const PrecisionCtx& ctx) {
  const Complex v = z.at(ctx);
  if (fn == "exp") return exp(v);
  if (fn == "log") return log(v);
  if (fn == "sqrt") return sqrt(v);
  throw DomainError("unknown complex elementary function '" + std::string(fn) + "'");
}

}  // namespace tetra
