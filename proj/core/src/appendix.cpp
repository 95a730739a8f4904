#include <cmath>

#include "tetra/identities.hpp"
#include "tetra/polylog.hpp"

namespace tetra {

namespace {

Complex cplx(const Real& re) { return Complex(re); }

// w / i.
Complex div_i(const Complex& w) { return {w.im(), -w.re()}; }

// Enough terms of a series with ratio 1/8 to reach the working precision.
long eighth_terms(const PrecisionCtx& ctx) {
  return static_cast<long>(std::ceil((ctx.working_digits() + 5) * std::log(10.0) / std::log(8.0))) + 1;
}

struct Chain {
  PrecisionCtx ctx;
  ChainConstants k;
  Complex zbar, xbar;
  Real pi2_6, log2;
  Complex u2, u4;

  explicit Chain(const PrecisionCtx& c) : ctx(c), k(chain_constants(c)) {
    zbar = conj(k.z);
    xbar = conj(k.x);
    const Real pi = const_pi(ctx);
    pi2_6 = sqr(pi) / 6L;
    log2 = const_log2(ctx);
    u2 = k.u * k.u;
    u4 = u2 * u2;
  }

  Complex L(const Complex& w) const { return li2(w, ctx); }
  Complex one() const { return cplx(Real(1L, ctx)); }

  // log(2) log(1-x)
  Complex t_log2() const { return log(one() - k.x) * log2; }
  // log(z) log(1-z)
  Complex t_logz() const { return log(k.z) * log(one() - k.z); }
  // 1/2 log(1+z) log((1+z)/z^2)
  Complex t_half() const {
    const Complex opz = one() + k.z;
    const Complex v = log(opz) * log(opz / (k.z * k.z));
    return {ldexp(v.re(), -1), ldexp(v.im(), -1)};
  }
  Complex t_sq() const {
    const Complex l = log(one() - k.x);
    return l * l;
  }
  Complex half(const Complex& w) const { return {ldexp(w.re(), -1), ldexp(w.im(), -1)}; }
};

}  // namespace

SeriesValue broadhurst_series(const PrecisionCtx& ctx, int terms) {
  if (terms < 1) throw DomainError("broadhurst_series needs at least one term");
  const PrecisionCtx wctx = ctx.raised(5);
  const Real log2_3 = 3L * const_log2(wctx);
  Real sum(wctx);
  Real power(1L, wctx);  // (-1/8)^n
  Real harmonic(wctx);   // H_n
  for (long n = 0; n < terms; ++n) {
    if (n > 0) harmonic += Real(1L, wctx) / n;
    const Real inv = Real(2L, wctx) / (2L * n + 1);  // 1/(n + 1/2)
    sum += power * inv * (inv - log2_3);
    if (n > 0) sum -= 3L * power * harmonic * inv;
    power = -ldexp(power, -3);
  }
  const long big_n = terms;
  const Real h_n = harmonic + Real(1L, wctx) / big_n;
  const Real inv_n = Real(2L, wctx) / (2L * big_n + 1);
  const Real head = inv_n * (inv_n + log2_3) + 3L * h_n * inv_n;
  const Real bound = rational(8, 7, wctx) * ldexp(head, -3 * big_n);
  return {sum.at(ctx), bound.at(ctx)};
}

Real broadhurst_constant(const PrecisionCtx& ctx) {
  const Real alpha = asin(rational(1, 3, ctx));
  return (4L * sqrt(Real(2L, ctx)) * (cl2(4L * alpha, ctx) - cl2(2L * alpha, ctx))).at(ctx);
}

ChainConstants chain_constants(const PrecisionCtx& ctx) {
  const Real r8 = sqrt(Real(8L, ctx));
  const Real half = rational(1, 2, ctx);
  ChainConstants k;
  k.x = Complex(half, ldexp(1L / r8, -1));
  k.y = Complex(half, Real(ctx));
  k.u = Complex(r8 / 3L, rational(1, 3, ctx));
  k.z = Complex(Real(ctx), -1L / r8);
  return k;
}

Complex harmonic_odd_series(const Complex& z, const PrecisionCtx& ctx) {
  const PrecisionCtx wctx = ctx.raised(5);
  const Complex zz = z.at(wctx);
  const Real r2 = norm(zz);
  if (!(r2 < 1L)) throw DomainError("harmonic series needs |z| < 1");
  const Real eps = pow10(-(wctx.working_digits() + 2), wctx) * (1L - r2);
  const Complex z2 = zz * zz;
  Complex power = zz * z2;  // z^(2n+1)
  Real harmonic(1L, wctx);
  Complex sum(wctx);
  for (long n = 1;; ++n) {
    const Complex term = power * (harmonic / (2L * n + 1));
    sum += term;
    if (abs(power) * harmonic < eps) break;
    power *= z2;
    harmonic += Real(1L, wctx) / (n + 1);
  }
  return sum.at(ctx);
}

Complex harmonic_odd_closed(const Complex& z, const PrecisionCtx& ctx) {
  const PrecisionCtx wctx = ctx.raised(5);
  const Complex zz = z.at(wctx);
  const Complex one(Real(1L, wctx));
  const Complex lm = log(one - zz);
  const Complex lp = log(one + zz);
  const Real l2 = const_log2(wctx);
  const Complex inner = (lm * lm - lp * lp) * rational(1, 2, wctx) + log((one - zz) / (one + zz)) * l2 +
                        li2((one + zz) * rational(1, 2, wctx), wctx) - li2((one - zz) * rational(1, 2, wctx), wctx);
  return (inner * rational(1, 2, wctx)).at(ctx);
}

Real chain_step(std::string_view step, const PrecisionCtx& ctx) {
  const Chain c(ctx.raised(5));
  const PrecisionCtx& w = c.ctx;
  const auto& k = c.k;
  const Complex one = c.one();
  const Complex l_half = c.L(k.y);
  const Real pi2_3 = 2L * c.pi2_6;

  auto out = [&](const Complex& r) { return abs(r).at(ctx); };

  if (step == "substitutions") {
    Real m = abs(k.x / (one - k.x) - c.u2);
    m = max(m, abs(k.y / (one - k.y) - one));
    m = max(m, abs(k.x / (one - k.y) - (one - k.z)));
    m = max(m, abs(k.y / (one - k.x) - one / (one + k.z)));
    m = max(m, abs(abs(k.u) - 1L));
    return m.at(ctx);
  }
  if (step == "2.1") {
    return out(c.L(c.u2) - (c.L(one - k.z) + c.L(one / (one + k.z)) - c.L(k.x) - l_half + c.t_log2()));
  }
  if (step == "2.2") {
    return out(c.L(one - k.z) - (-c.L(k.z) + c.pi2_6 - c.t_logz()));
  }
  if (step == "2.3") {
    return out(c.L(one / (one + k.z)) - (c.L(-k.z) + c.pi2_6 - c.t_half()));
  }
  if (step == "2.4") {
    return out(c.L(c.u2) -
               (c.L(c.zbar) - c.L(k.z) - c.L(k.x) + pi2_3 - l_half + c.t_log2() - c.t_logz() - c.t_half()));
  }
  if (step == "2.5") {
    return out(c.L(k.x) + c.L(-c.u2) + c.half(c.t_sq()));
  }
  if (step == "2.6") {
    return out(c.L(c.u2) + c.L(-c.u2) - c.half(c.L(c.u4)));
  }
  if (step == "2.7") {
    const Complex rhs = c.L(c.u2) * Real(2L, w) - c.L(k.x) * Real(2L, w) - c.t_sq();
    return out(c.L(c.u4) - rhs);
  }
  if (step == "2.8") {
    const Complex rhs = c.L(c.zbar) - c.L(k.z) - c.L(k.x) * Real(3L, w) + pi2_3 - l_half + c.t_log2() - c.t_sq() -
                        c.t_logz() - c.t_half();
    return out(c.L(c.u4) - c.L(c.u2) - rhs);
  }
  if (step == "2.9") {
    const Real lhs = (c.L(c.u4) - c.L(c.u2)).im();
    const Complex logs = c.t_log2() - c.t_sq() - c.t_logz() - c.t_half();
    const Complex rhs = div_i(c.L(c.zbar) - c.L(k.z)) -
                        div_i(c.L(k.x) - c.L(c.xbar)) * rational(3, 2, w) + cplx(logs.im());
    return out(cplx(lhs) - rhs);
  }
  if (step == "z-series") {
    Real sum(w);
    Real power(1L, w);
    const long n_max = eighth_terms(w);
    for (long n = 0; n < n_max; ++n) {
      sum += power / sqr(Real(2L * n + 1, w));
      power = -ldexp(power, -3);
    }
    return out(div_i(c.L(c.zbar) - c.L(k.z)) - sum / sqrt(Real(2L, w)));
  }
  if (step == "x-series") {
    const long n_max = eighth_terms(w);
    Real s_h(w), s_0(1L, w);
    Real power(1L, w);
    Real harmonic(w);
    for (long n = 1; n < n_max; ++n) {
      power = -ldexp(power, -3);
      harmonic += Real(1L, w) / n;
      s_h += power * harmonic / (2L * n + 1);
      s_0 += power / (2L * n + 1);
    }
    const Real r8 = sqrt(Real(8L, w));
    const Real alpha = asin(rational(1, 3, w));
    const Real rhs = s_h / r8 + alpha * ldexp(log(rational(9, 8, w)), -1) + c.log2 / r8 * s_0;
    const Complex lhs = div_i(c.L(k.x) - c.L(c.xbar)) * rational(1, 2, w);
    return out(lhs - rhs);
  }
  if (step == "head") {
    const Real alpha = asin(rational(1, 3, w));
    const Real lhs = (c.L(c.u4) - c.L(c.u2)).im();
    return abs(lhs - (cl2(4L * alpha, w) - cl2(2L * alpha, w))).at(ctx);
  }
  throw DomainError("unknown chain step '" + std::string(step) + "'");
}

ChainReport appendix_chain(const PrecisionCtx& ctx) {
  static const char* const kSteps[] = {"substitutions", "2.1", "2.2", "2.3", "2.4",      "2.5",      "2.6",
                                       "2.7",           "2.8", "2.9", "head", "z-series", "x-series"};
  ChainReport rep;
  rep.max_residual = Real(ctx);
  for (const char* s : kSteps) {
    Real r = chain_step(s, ctx);
    rep.max_residual = max(rep.max_residual, r);
    rep.steps.push_back({s, std::move(r)});
  }
  return rep;
}

}  // namespace tetra
