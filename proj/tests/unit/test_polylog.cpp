#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tetra/identities.hpp"
#include "tetra/polylog.hpp"
#include "tetra/quad.hpp"

using namespace tetra;
using tetra::oracle::Rng;

namespace {

Real tol(const PrecisionCtx& ctx, int slack = 5) { return pow10(-(ctx.digits() - slack), ctx); }

}  // namespace

TEST(Cl2, Zeros) {
  const PrecisionCtx ctx(50);
  EXPECT_TRUE(cl2(Real(ctx), ctx).is_zero());
  EXPECT_LT(abs(cl2(const_pi(ctx), ctx)), tol(ctx));
}

TEST(Cl2, PiOverThree) {
  const PrecisionCtx ctx(50);
  const Real pi = const_pi(ctx);
  EXPECT_LT(abs(cl2(pi / 3L, ctx) - rational(3, 2, ctx) * cl2(2L * pi / 3L, ctx)), tol(ctx));
}

TEST(Cl2, CatalanOracle) {
  for (int d : {20, 50, 150}) {
    const PrecisionCtx ctx(d);
    EXPECT_LT(abs(cl2(const_pi(ctx) / 2L, ctx) - oracle::catalan_oracle(ctx)), pow10(-d, ctx)) << d;
  }
}

TEST(Cl2, PartialSumOracle) {
  const PrecisionCtx ctx(20);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Real t(rng.uniform(0.3, 6.0), ctx);
    const PartialSum ps = cl2_partial_sum(t, 20000, ctx);
    EXPECT_LE(abs(ps.value - cl2(t, ctx)), ps.tail_bound);
  }
}

TEST(Cl2, OddAndPeriodic) {
  const PrecisionCtx ctx(50);
  const Real two_pi = 2L * const_pi(ctx);
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const Real t(rng.uniform(-20, 20), ctx);
    EXPECT_EQ(cl2(-t, ctx), -cl2(t, ctx));
    EXPECT_LT(abs(cl2(t + two_pi, ctx) - cl2(t, ctx)), pow10(-ctx.digits(), ctx));
  }
}

TEST(Cl2, Duplication) {
  const PrecisionCtx ctx(50);
  const Real pi = const_pi(ctx);
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Real x(rng.uniform(-7, 7), ctx);
    EXPECT_LT(abs(cl2(2L * x, ctx) - 2L * cl2(x, ctx) + 2L * cl2(pi - x, ctx)), tol(ctx));
  }
}

TEST(Cl2, TwoStrategiesAgree) {
  const PrecisionCtx ctx(50);
  Rng rng(8);
  Real worst(ctx);
  for (int i = 0; i < 1000; ++i) {
    const Real t(rng.uniform(-10, 10), ctx);
    worst = max(worst, abs(cl2(t, ctx) - cl2_via_li2(t, ctx)));
  }
  EXPECT_LT(worst, tol(ctx));
}

TEST(Cl2, NearZeroAndPi) {
  const PrecisionCtx ctx(60);
  for (const char* s : {"1e-40", "1e-10", "3.14159265358979", "3.1415926535897932384626433832795"}) {
    const Real t = Real::parse(s, ctx);
    EXPECT_LT(abs(cl2(t, ctx) - cl2_via_li2(t, ctx)), tol(ctx)) << s;
  }
}

TEST(EvenZetaRatio, MatchesZetaTwoAndFour) {
  const PrecisionCtx ctx(40);
  // zeta(2)/(2pi)^2 = 1/24, zeta(4)/(2pi)^4 = 1/1440.
  EXPECT_LT(abs(even_zeta_ratio(1, ctx) - rational(1, 24, ctx)), tol(ctx, 0));
  EXPECT_LT(abs(even_zeta_ratio(2, ctx) - rational(1, 1440, ctx)), tol(ctx, 0));
}

TEST(Li2, SpecialValues) {
  const PrecisionCtx ctx(50);
  const Real pi = const_pi(ctx);
  const Real l2 = const_log2(ctx);
  EXPECT_TRUE(li2(Complex(Real(ctx)), ctx).is_zero());
  EXPECT_LT(abs(li2(Real(1L, ctx), ctx) - sqr(pi) / 6L), tol(ctx));
  EXPECT_LT(abs(li2(rational(1, 2, ctx), ctx) - (sqr(pi) / 12L - sqr(l2) / 2L)), tol(ctx));
  EXPECT_LT(abs(li2(Real(-1L, ctx), ctx) + sqr(pi) / 12L), tol(ctx));
}

TEST(Li2, ImaginaryPartOnUnitCircleIsCl2) {
  const PrecisionCtx ctx(50);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const Real t(rng.uniform(-3.1, 3.1), ctx);
    EXPECT_LT(abs(li2(expi(t), ctx).im() - cl2(t, ctx)), tol(ctx));
  }
}

TEST(Li2, BranchCutLimitFromBelow) {
  const PrecisionCtx ctx(40);
  const Real x(3L, ctx);
  const Complex v = li2(Complex(x), ctx);
  EXPECT_LT(abs(v.im() + const_pi(ctx) * log(x)), tol(ctx));
}

TEST(Li2, ComplexInversionAndReflection) {
  const PrecisionCtx ctx(40);
  const Real pi2_6 = sqr(const_pi(ctx)) / 6L;
  Rng rng(10);
  for (int i = 0; i < 50; ++i) {
    const Complex z(Real(rng.uniform(-3, 3), ctx), Real(rng.uniform(0.05, 3), ctx));
    const Complex one(Real(1L, ctx));
    // Li2(z) + Li2(1-z) = pi^2/6 - log z log(1-z)
    const Complex r = li2(z, ctx) + li2(one - z, ctx) - (pi2_6 - log(z) * log(one - z));
    EXPECT_LT(abs(r), tol(ctx));
    // Li2(z) + Li2(1/z) = -pi^2/6 - log^2(-z)/2
    const Complex lz = log(-z);
    const Complex s = li2(z, ctx) + li2(one / z, ctx) + pi2_6 + lz * lz * rational(1, 2, ctx);
    EXPECT_LT(abs(s), tol(ctx));
  }
}

TEST(LewinIdentities, HoldAtRandomPoints) {
  const PrecisionCtx ctx(50);
  for (const char* name : {"lewin-1.1", "lewin-1.2", "lewin-1.3", "lewin-1.4", "lewin-1.5"}) {
    const IdentityReport r = verify(name, 30, 11, ctx);
    EXPECT_LT(r.max_residual, tol(ctx)) << name;
  }
}

TEST(LogSinProduct, Factorization) {
  const PrecisionCtx ctx(50);
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const Real a(rng.uniform(-2, 2), ctx), b(rng.uniform(-2, 2), ctx);
    const Real r = sqrt(sqr(a) + sqr(b));
    const Real c = r * Real(rng.uniform(-1, 1), ctx);
    const Real top = atan2(b, a);
    const LogTrigClosedForm f = log_sin_product_integral(top, top, a, b, c, ctx);
    EXPECT_TRUE(f.value.is_zero());
    for (int k = 0; k < 5; ++k) {
      const Real phi(rng.uniform(-7, 7), ctx);
      const Real lhs = a * cos(phi) + b * sin(phi) + c;
      const Real rhs = 2L * r * sin((f.delta2 - phi) / 2L) * sin((f.delta1 + phi) / 2L);
      EXPECT_LT(abs(lhs - rhs), tol(ctx));
    }
  }
}

TEST(LogSinProduct, LogCosOracle) {
  const PrecisionCtx ctx(50);
  const Real pi = const_pi(ctx);
  const LogTrigClosedForm f =
      log_sin_product_integral(Real(ctx), pi / 2L, Real(1L, ctx), Real(ctx), Real(ctx), ctx);
  EXPECT_LT(abs(f.value + pi / 2L * const_log2(ctx)), tol(ctx));
  const QuadratureResult q = integrate_nodes([](const Node& n) { return log(sin(n.to_hi)); },
                                             Finite{Real(ctx), pi / 2L}, tol(ctx, 8), ctx);
  EXPECT_LT(abs(f.value - q.value), tol(ctx, 8));
}

TEST(LogSinProduct, RandomMatchesQuadrature) {
  const PrecisionCtx ctx(40);
  Rng rng(13);
  int checked = 0;
  while (checked < 10) {
    const Real a(rng.uniform(-2, 2), ctx), b(rng.uniform(-2, 2), ctx);
    const Real r = sqrt(sqr(a) + sqr(b));
    const Real c = r * Real(rng.uniform(0.2, 1.0), ctx);
    const Real top = atan2(b, a);
    const Real lo = top - Real(rng.uniform(0.0, 1.5), ctx);
    const Real hi = top + Real(rng.uniform(0.0, 1.5), ctx);
    auto g = [&](const Real& p) { return a * cos(p) + b * sin(p) + c; };
    if (!(g(lo) > 0L && g(hi) > 0L)) continue;
    bool positive = true;
    for (int k = 0; k <= 20; ++k) positive = positive && g(lo + (hi - lo) * rational(k, 20, ctx)) > 0L;
    if (!positive) continue;
    ++checked;
    const LogTrigClosedForm f = log_sin_product_integral(lo, hi, a, b, c, ctx);
    const QuadratureResult q = integrate([&](const Real& p) { return log(g(p)); }, Finite{lo, hi}, tol(ctx, 10), ctx);
    EXPECT_LT(abs(f.value - q.value), tol(ctx, 10));
  }
}

TEST(LogSinProduct, RejectsBadHypotheses) {
  const PrecisionCtx ctx(30);
  const Real one(1L, ctx);
  // a^2 + b^2 < c^2
  EXPECT_THROW(log_sin_product_integral(Real(ctx), one, one, Real(ctx), Real(2L, ctx), ctx), DomainError);
  // integrand negative inside [0, pi]
  EXPECT_THROW(log_sin_product_integral(Real(ctx), const_pi(ctx), one, Real(ctx), Real(ctx), ctx), DomainError);
}

TEST(LogTan, LogSplit) {
  const PrecisionCtx ctx(50);
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const Real delta(rng.uniform(-1.5, 1.4), ctx);
    const Real phi = delta + Real(rng.uniform(1e-3, 1.0), ctx) * (Real(1.5, ctx) - delta);
    const Real lhs = log(tan(phi) - tan(delta));
    const Real rhs = log(2L * sin(phi - delta)) - log(2L * cos(phi)) - log(cos(delta));
    EXPECT_LT(abs(lhs - rhs), tol(ctx));
  }
}

TEST(LogTan, EmptyAndCatalan) {
  const PrecisionCtx ctx(50);
  const Real pi = const_pi(ctx);
  const Real x(0.3, ctx);
  EXPECT_TRUE(log_tan_integral(x, x, Real(0.1, ctx), ctx).is_zero());
  EXPECT_LT(abs(log_tan_integral(Real(ctx), pi / 4L, Real(ctx), ctx) + const_catalan(ctx)), tol(ctx));
  const QuadratureResult q =
      integrate([](const Real& p) { return log(tan(p)); }, Finite{Real(ctx), pi / 4L}, tol(ctx, 8), ctx);
  EXPECT_LT(abs(q.value + const_catalan(ctx)), tol(ctx, 8));
}

TEST(LogTan, RandomMatchesQuadrature) {
  const PrecisionCtx ctx(40);
  Rng rng(15);
  for (int i = 0; i < 10; ++i) {
    const double d = rng.uniform(-1.4, 1.2);
    const double a = rng.uniform(d, 1.5);
    const double b = rng.uniform(a, 1.55);
    const Real delta(d, ctx), lo(a, ctx), hi(b, ctx);
    const QuadratureResult q = integrate_nodes(
        [&](const Node& n) {
          // tan(phi) - tan(delta) = sin(phi - delta) / (cos(phi) cos(delta)), exact near phi = delta.
          return log(sin(n.x - delta) / (cos(n.x) * cos(delta)));
        },
        Finite{lo, hi}, tol(ctx, 10), ctx);
    EXPECT_LT(abs(log_tan_integral(lo, hi, delta, ctx) - q.value), tol(ctx, 10)) << d << " " << a << " " << b;
  }
}

TEST(LogTan, RejectsBadAngles) {
  const PrecisionCtx ctx(30);
  EXPECT_THROW(log_tan_integral(Real(0.1, ctx), Real(0.5, ctx), Real(0.3, ctx), ctx), DomainError);
  EXPECT_THROW(log_tan_integral(Real(0.1, ctx), Real(2.0, ctx), Real(0.0, ctx), ctx), DomainError);
}
