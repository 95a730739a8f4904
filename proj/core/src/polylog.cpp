#include "tetra/polylog.hpp"

#include <map>
#include <mutex>
#include <string>

namespace tetra {

namespace {

using Table = std::vector<Real>;

// Series for both Cl2 and the Bernoulli form of Li2 never need more than
// about bits/2 coefficients (worst-case ratio 1/4 per term).
int table_size(mpfr_prec_t bits) { return static_cast<int>(bits / 2) + 24; }

// c_k = zeta(2k)/(2pi)^(2k), from (k + 1/2) c_k = sum_{j=1}^{k-1} c_j c_{k-j},
// c_1 = 1/24. Every summand is positive, so no cancellation occurs.
std::shared_ptr<const Table> build_table(mpfr_prec_t bits) {
  const int n = table_size(bits);
  const mpfr_prec_t wp = bits + 32;
  auto table = std::make_shared<Table>();
  table->reserve(static_cast<std::size_t>(n) + 1);
  table->push_back(Real::with_bits(wp));  // index 0 unused
  table->push_back((Real::with_bits(wp) + 1L) / 24L);
  for (int k = 2; k <= n; ++k) {
    Real acc = Real::with_bits(wp);
    for (int j = 1; j <= k / 2; ++j) {
      Real prod = (*table)[j] * (*table)[k - j];
      acc += (2 * j == k) ? prod : prod * 2L;
    }
    table->push_back(acc * 2L / (2L * k + 1));
  }
  return table;
}

std::shared_ptr<const Table> zeta_table(mpfr_prec_t bits) {
  static std::mutex mutex;
  static std::map<mpfr_prec_t, std::shared_ptr<const Table>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  auto table = build_table(bits);
  cache.emplace(bits, table);
  return table;
}

// Cl2 on [0, pi] at `wp` bits.
Real cl2_reduced(const Real& t, mpfr_prec_t wp, const Table& c) {
  if (t.is_zero()) return t;
  Real sum = t - t * log(t);
  const Real t2 = sqr(t);
  Real power = t * t2;  // t^(2k+1)
  Real eps = ldexp(Real::with_bits(wp) + 1L, -static_cast<long>(wp) - 8);
  for (std::size_t k = 1; k < c.size(); ++k) {
    const long kk = static_cast<long>(k);
    Real term = c[k] * power / (kk * (2 * kk + 1));
    sum += term;
    if (abs(term) < eps) return sum;
    power *= t2;
  }
  throw PrecisionError("Cl2 series did not converge within the coefficient table");
}

Complex li2_series(const Complex& z, mpfr_prec_t wp) {
  // |z| <= 1/2: plain defining series.
  Complex sum = z;
  Complex power = z;
  const Real eps = ldexp(Real::with_bits(wp) + 1L, -static_cast<long>(wp) - 8);
  for (long n = 2;; ++n) {
    power = power * z;
    Complex term{power.re() / (n * n), power.im() / (n * n)};
    sum += term;
    if (abs(term) < eps) return sum;
    if (n > 8 * wp) throw PrecisionError("Li2 power series did not converge");
  }
}

Complex li2_bernoulli(const Complex& z, mpfr_prec_t wp, const Table& c) {
  // Li2(z) = sum_{n>=0} B_n w^(n+1)/(n+1)!, w = -log(1-z), |w| < 2pi.
  // B_2k/(2k+1)! = (-1)^(k+1) 2 c_k / (2k+1).
  Complex one{Real::with_bits(wp) + 1L, Real::with_bits(wp)};
  const Complex w = -log(one - z);
  const Complex w2 = w * w;
  Complex sum = w - Complex{ldexp(w2.re(), -2), ldexp(w2.im(), -2)};
  Complex power = w * w2;  // w^(2k+1)
  const Real eps = ldexp(Real::with_bits(wp) + 1L, -static_cast<long>(wp) - 8);
  for (std::size_t k = 1; k < c.size(); ++k) {
    const long kk = static_cast<long>(k);
    Real coeff = c[k] * 2L / (2 * kk + 1);
    if (k % 2 == 0) coeff = -coeff;
    Complex term = power * coeff;
    sum += term;
    if (abs(term) < eps) return sum;
    power *= w2;
  }
  throw PrecisionError("Li2 Bernoulli series did not converge within the coefficient table");
}

Complex li2_impl(const Complex& z, mpfr_prec_t wp, const Table& c, const Real& pi) {
  const Real one = Real::with_bits(wp) + 1L;
  const Real zero = Real::with_bits(wp);
  if (z.is_zero()) return Complex{zero, zero};
  if (z.im().is_zero() && z.re() == 1L) return Complex{sqr(pi) / 6L, zero};

  const Real r2 = norm(z);
  if (r2 > 1L) {
    // Li2(z) = -Li2(1/z) - pi^2/6 - 1/2 log^2(-z)
    const Complex inv = Complex{one, zero} / z;
    const Complex lm = log(-z);
    const Complex l2 = lm * lm;
    return -li2_impl(inv, wp, c, pi) - Complex{sqr(pi) / 6L + ldexp(l2.re(), -1), ldexp(l2.im(), -1)};
  }
  if (z.re() * 2L > one) {
    // Li2(z) = -Li2(1-z) + pi^2/6 - log(z) log(1-z)
    const Complex w = Complex{one, zero} - z;
    return -li2_impl(w, wp, c, pi) + Complex{sqr(pi) / 6L, zero} - log(z) * log(w);
  }
  if (r2 * 4L <= one) return li2_series(z, wp);
  return li2_bernoulli(z, wp, c);
}

// Minimum of a cos + b sin + c over [lo, hi] (lo <= hi).
Real log_trig_minimum(const Real& lo, const Real& hi, const Real& a, const Real& b, const Real& c,
                      const PrecisionCtx& ctx) {
  auto g = [&](const Real& phi) { return a * cos(phi) + b * sin(phi) + c; };
  Real m = min(g(lo), g(hi));
  // Interior minimum at phi0 + pi + 2k pi with phi0 = atan2(b, a).
  const Real pi = const_pi(ctx);
  const Real two_pi = ldexp(pi, 1);
  const Real phi_min = atan2(b, a) + pi;
  Real k = floor((lo - phi_min) / two_pi);
  for (Real cand = phi_min + k * two_pi; cand <= hi; cand += two_pi) {
    if (cand >= lo) m = min(m, g(cand));
  }
  return m;
}

}  // namespace

Real even_zeta_ratio(int k, const PrecisionCtx& ctx) {
  if (k < 1) throw DomainError("even_zeta_ratio requires k >= 1");
  const auto table = zeta_table(ctx.bits());
  if (static_cast<std::size_t>(k) >= table->size()) {
    throw PrecisionError("even_zeta_ratio index beyond cached table");
  }
  return (*table)[static_cast<std::size_t>(k)].at(ctx);
}

Real cl2(const Real& theta, const PrecisionCtx& ctx) {
  const Real t = wrap_angle(theta, ctx);
  if (t.is_zero()) return Real(ctx);
  const auto table = zeta_table(ctx.bits());
  const mpfr_prec_t wp = ctx.bits() + 16;
  const Real value = cl2_reduced(abs(t).at_bits(wp), wp, *table);
  return (t.sign() < 0 ? -value : value).at(ctx);
}

Real cl2_via_li2(const Real& theta, const PrecisionCtx& ctx) {
  const Real t = wrap_angle(theta, ctx);
  if (t.is_zero()) return Real(ctx);
  return li2(expi(t), ctx).im();
}

PartialSum cl2_partial_sum(const Real& theta, std::int64_t terms, const PrecisionCtx& ctx) {
  if (terms < 1) throw DomainError("cl2_partial_sum needs at least one term");
  const Real t = wrap_angle(theta, ctx);
  Real sum(ctx);
  // sin(n t) by the Chebyshev recurrence s_{n+1} = 2 cos(t) s_n - s_{n-1}.
  const Real two_cos = cos(t) * 2L;
  Real prev(ctx);
  Real cur = sin(t);
  for (std::int64_t n = 1; n <= terms; ++n) {
    sum += cur / sqr(Real(static_cast<long>(n), ctx));
    Real next = two_cos * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Real half_sin = abs(sin(ldexp(t, -1)));
  const long n = static_cast<long>(terms);
  Real bound = half_sin.is_zero() ? Real(ctx) : 2L / (sqr(Real(n + 1, ctx)) * half_sin);
  return {sum, bound};
}

Complex li2(const Complex& z, const PrecisionCtx& ctx) {
  const auto table = zeta_table(ctx.bits());
  const mpfr_prec_t wp = ctx.bits() + 16;
  Real pi = Real::with_bits(wp);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  const Complex zw{z.re().at_bits(wp), z.im().at_bits(wp)};
  return li2_impl(zw, wp, *table, pi).at(ctx);
}

Real li2(const Real& x, const PrecisionCtx& ctx) {
  if (x > 1L) throw DomainError("real Li2 requires x <= 1");
  return li2(Complex{x.at(ctx), Real(ctx)}, ctx).re();
}

LogTrigClosedForm log_sin_product_integral(const Real& alpha, const Real& beta, const Real& a,
                                           const Real& b, const Real& c, const PrecisionCtx& ctx) {
  const Real aa = a.at(ctx), bb = b.at(ctx), cc = c.at(ctx);
  const Real r2 = sqr(aa) + sqr(bb);
  if (r2.is_zero()) throw DomainError("log_sin_product_integral requires (a, b) != (0, 0)");
  const Real disc = r2 - sqr(cc);
  if (disc < 0L) throw DomainError("log_sin_product_integral requires a^2 + b^2 >= c^2");
  const Real root = sqrt(disc);
  const Real lo = min(alpha, beta).at(ctx), hi = max(alpha, beta).at(ctx);
  // Endpoint zeros are allowed; rounding may push them slightly negative.
  const Real slack = -(sqrt(r2) + abs(cc)) * pow10(-(ctx.digits() - 5), ctx);
  if (log_trig_minimum(lo, hi, aa, bb, cc, ctx) < slack) {
    throw DomainError("a cos(phi) + b sin(phi) + c is negative inside the integration range");
  }

  // delta/2 = atan2(a + c, b +- root); the two-argument form picks a branch
  // even when the denominator is non-positive.
  const Real ac = aa + cc;
  Real delta1 = ldexp(ac.is_zero() && (bb + root).is_zero() ? Real(ctx) : atan2(ac, bb + root), 1);
  Real delta2 = ldexp(ac.is_zero() && (root - bb).is_zero() ? Real(ctx) : atan2(ac, root - bb), 1);

  // The factorization fixes the branch only up to a simultaneous sign flip of
  // R cos((d2-d1)/2) = a, R sin((d2-d1)/2) = b, -R cos((d1+d2)/2) = c.
  const Real radius = sqrt(r2);
  const Real half_diff = ldexp(delta2 - delta1, -1);
  const Real check = radius * cos(half_diff) - aa;
  const Real check_flip = radius * cos(half_diff) + aa;
  const Real checkb = radius * sin(half_diff) - bb;
  const Real checkb_flip = radius * sin(half_diff) + bb;
  if (abs(check) + abs(checkb) > abs(check_flip) + abs(checkb_flip)) {
    delta1 += ldexp(const_pi(ctx), 1);
  }
  {
    const Real tol = pow10(-(ctx.digits() - 5), ctx) * max(radius, Real(1L, ctx));
    const Real hd = ldexp(delta2 - delta1, -1), hs = ldexp(delta1 + delta2, -1);
    if (abs(radius * cos(hd) - aa) > tol || abs(radius * sin(hd) - bb) > tol ||
        abs(radius * cos(hs) + cc) > tol) {
      throw InvariantError("log_sin_product_integral: auxiliary angles fail the factorization identity");
    }
  }

  const Real width = beta.at(ctx) - alpha.at(ctx);
  Real value = width * log(ldexp(radius, -1)) + cl2(delta2 - beta, ctx) - cl2(delta2 - alpha, ctx) +
               cl2(delta1 + alpha, ctx) - cl2(delta1 + beta, ctx);
  if (width.is_zero()) value = Real(ctx);
  return {std::move(value), std::move(delta1), std::move(delta2)};
}

Real log_tan_integral(const Real& alpha, const Real& beta, const Real& delta, const PrecisionCtx& ctx) {
  const Real half_pi = ldexp(const_pi(ctx), -1);
  for (const Real* v : {&alpha, &beta, &delta}) {
    if (abs(*v) >= half_pi) throw DomainError("log_tan_integral angles must lie in (-pi/2, pi/2)");
  }
  if (delta > min(alpha, beta)) {
    throw DomainError("log_tan_integral requires tan(phi) > tan(delta) on the integration range");
  }
  const Real a = alpha.at(ctx), b = beta.at(ctx), d = delta.at(ctx);
  if (a == b) return Real(ctx);
  const Real pi = const_pi(ctx);
  const Real bracket = cl2(ldexp(a - d, 1), ctx) - cl2(ldexp(b - d, 1), ctx) + cl2(pi - ldexp(a, 1), ctx) -
                       cl2(pi - ldexp(b, 1), ctx);
  return ldexp(bracket, -1) - (b - a) * log(cos(d));
}

}  // namespace tetra
