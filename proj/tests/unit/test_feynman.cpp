#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tetra/feynman.hpp"
#include "tetra/identities.hpp"

using namespace tetra;

namespace {

const PrecisionCtx kCtx(50);

Real tol(int slack = 5) { return pow10(-(kCtx.digits() - slack), kCtx); }

MassPair masses(const Real& a, const Real& b) { return make_mass_pair(a, b, kCtx); }
MassPair masses(double a, double b) { return masses(Real(a, kCtx), Real(b, kCtx)); }
MassPair pi_e() {
  return masses(1L / const_pi(kCtx), 1L / exp(Real(1L, kCtx)));
}

Real max_residual(const std::vector<NamedResidual>& rs) {
  Real m(kCtx);
  for (const NamedResidual& r : rs) m = max(m, abs(r.residual));
  return m;
}

}  // namespace

TEST(MassPair, RejectsOutsideQuarterDisk) {
  EXPECT_THROW(masses(0.0, 1.0), DomainError);
  EXPECT_THROW(masses(-0.5, 1.0), DomainError);
  EXPECT_THROW(masses(1.5, 1.5), DomainError);
  EXPECT_THROW(masses(2.0, 0.1), DomainError);
  EXPECT_THROW(masses(Real(2L, kCtx) - pow10(-40, kCtx), pow10(-30, kCtx)), DomainError);
  EXPECT_NO_THROW(masses(1.9, 0.5));
}

TEST(Derive, UnitMasses) {
  const DerivedAngles g = derive(masses(1.0, 1.0), kCtx);
  const Real s2 = sqrt(Real(2L, kCtx));
  EXPECT_LT(abs(g.c - sqrt(Real(3L, kCtx))), tol());
  EXPECT_LT(abs(g.d - s2), tol());
  EXPECT_LT(abs(g.p - 4L), tol());
  EXPECT_LT(abs(g.phi - atan(s2 / 4L)), tol());
  EXPECT_LT(abs(g.phi_a - atan(s2)), tol());
  EXPECT_LT(abs(g.phi_b - atan(s2)), tol());
  // phi = pi/2 - 2 alpha, phi_a = pi/2 - alpha with tan(alpha) = 1/sqrt2.
  const Real pi = const_pi(kCtx);
  const Real alpha = atan(1L / s2);
  EXPECT_LT(abs(g.phi - (pi / 2L - 2L * alpha)), tol());
  EXPECT_LT(abs(g.phi_a - (pi / 2L - alpha)), tol());
}

TEST(Derive, SmallMassLimit) {
  const Real eps = pow10(-12, kCtx);
  const DerivedAngles g = derive(masses(eps, eps), kCtx);
  const Real pi = const_pi(kCtx);
  const Real lim = pow10(-10, kCtx);
  EXPECT_LT(abs(g.d - 2L), lim);
  EXPECT_LT(abs(g.p - 2L), lim);
  EXPECT_LT(abs(g.phi - pi / 4L), lim);
  EXPECT_LT(abs(g.alpha7 - pi / 4L), 10L * sqrt(eps));
  EXPECT_LT(abs(g.phi_a - pi / 2L), lim);
}

TEST(Derive, AngleIdentitiesAtPiE) {
  const DerivedAngles g = derive(pi_e(), kCtx);
  EXPECT_EQ(angle_identity_residuals(g, kCtx).size(), 7u);
  EXPECT_LT(max_residual(angle_identity_residuals(g, kCtx)), pow10(-40, kCtx));
  EXPECT_LT(max_residual(definition_residuals(g, kCtx)), pow10(-40, kCtx));
}

TEST(Relations, HoldAtRandomMassPairs) {
  for (const auto& s : oracle::mass_samples(20, 31, 0.01, 1.99, 3.99)) {
    const DerivedAngles g = derive(masses(s.a, s.b), kCtx);
    const auto q = q_values(g, kCtx);
    const auto r = r_values(g, kCtx);
    const auto sv = s_values(g, kCtx);
    ASSERT_EQ(q.size(), 13u);
    ASSERT_EQ(r.size(), 19u);
    ASSERT_EQ(sv.size(), 8u);
    EXPECT_LT(max_residual(q_relation_residuals(q, kCtx)), tol()) << s.a << " " << s.b;
    EXPECT_LT(max_residual(r_relation_residuals(r, kCtx)), tol()) << s.a << " " << s.b;
    EXPECT_LT(max_residual(rs_relation_residuals(r, sv, kCtx)), tol()) << s.a << " " << s.b;
    EXPECT_LT(abs(tan_form_residual(g, kCtx)), tol()) << s.a << " " << s.b;
    EXPECT_LT(max_residual(angle_identity_residuals(g, kCtx)), tol()) << s.a << " " << s.b;
  }
}

TEST(Relations, RListCoversTheSixPairs) {
  const auto names = r_relation_residuals(r_values(derive(pi_e(), kCtx), kCtx), kCtx);
  EXPECT_EQ(names.size(), 6u);
}

TEST(Stepwise, Q3EqualsQ6Exactly) {
  const DerivedAngles g = derive(pi_e(), kCtx);
  const auto q = q_values(g, kCtx);
  EXPECT_EQ(q[2].value, q[5].value);
}

TEST(Stepwise, UnitMasses) {
  const StepReport s = stepwise(masses(1.0, 1.0), kCtx);
  for (const IntegralCheck& ic : s.integrals) {
    EXPECT_TRUE(ic.agrees) << ic.name;
    EXPECT_LT(ic.difference, tol(10)) << ic.name;
  }
  EXPECT_LT(abs(s.i1_plus_i2_bracket), tol(10));
  EXPECT_LT(abs(s.i1_plus_i2_quadrature), tol(10));
  EXPECT_LT(abs(s.s_form_residual), tol(10));
  EXPECT_LT(abs(s.i4_log_remainder), tol(10));
  EXPECT_LT(abs(s.c_bracket - broadhurst_constant(kCtx)), tol(10));
}

TEST(Stepwise, PiE) {
  const StepReport s = stepwise(pi_e(), kCtx);
  EXPECT_LT(abs(s.i1_plus_i2_bracket), tol(10));
  EXPECT_LT(abs(s.i1_plus_i2_quadrature), tol(10));
  EXPECT_LT(abs(s.s_form_residual), tol(10));
  EXPECT_LT(abs(s.c_bracket - c_closed(s.masses, kCtx)), tol(10));
  EXPECT_LT(abs(s.c_quadrature - s.c_bracket), tol(10));
}

TEST(Stepwise, LogTrigRouteMatchesBrackets) {
  for (const auto& p : oracle::mass_samples(5, 32)) {
    const StepReport s = stepwise(masses(p.a, p.b), kCtx);
    const auto lemma = lemma_integrals(s.angles, kCtx);
    for (int i = 0; i < 4; ++i) EXPECT_LT(abs(lemma[i] - s.integrals[i].bracket), tol(10)) << i;
  }
}

TEST(CClosed, Broadhurst) {
  EXPECT_LT(abs(c_closed(masses(1.0, 1.0), kCtx) - broadhurst_constant(kCtx)), tol(10));
  EXPECT_EQ(c_closed(masses(1.0, 1.0), kCtx).to_string(20), "0.17390061066200274273");
}

TEST(CClosed, Symmetric) {
  for (const auto& p : oracle::mass_samples(10, 33)) {
    EXPECT_LT(abs(c_closed(masses(p.a, p.b), kCtx) - c_closed(masses(p.b, p.a), kCtx)), tol());
  }
}

TEST(CDirect, Broadhurst) {
  const Real t = pow10(-35, kCtx);
  const QuadratureResult q = c_direct(masses(1.0, 1.0), t, kCtx);
  EXPECT_LT(abs(q.value - broadhurst_constant(kCtx)), t);
  EXPECT_LE(q.error_estimate, t);
}

TEST(CDirect, PiEMatchesClosed) {
  const Real t = pow10(-35, kCtx);
  const MassPair m = pi_e();
  EXPECT_LT(abs(c_direct(m, t, kCtx).value - c_closed(m, kCtx)), t);
}

TEST(CDirect, Symmetric) {
  const Real t = pow10(-30, kCtx);
  for (const auto& p : oracle::mass_samples(3, 34)) {
    const Real x = c_direct(masses(p.a, p.b), t, kCtx).value;
    const Real y = c_direct(masses(p.b, p.a), t, kCtx).value;
    EXPECT_LT(abs(x - y), 2L * t);
  }
}

TEST(CDirect, RejectsToleranceBelowPrecision) {
  EXPECT_THROW(c_direct(masses(1.0, 1.0), pow10(-48, kCtx), kCtx), PrecisionError);
}

TEST(Routes, AgreeAtSampledPairs) {
  const Real t = pow10(-35, kCtx);
  for (const auto& p : oracle::mass_samples(4, 35)) {
    const MassPair m = masses(p.a, p.b);
    const Real closed = c_closed(m, kCtx);
    const Real direct = c_direct(m, t, kCtx).value;
    const Real step = stepwise(m, kCtx).c_bracket;
    EXPECT_LT(abs(closed - direct), 10L * t);
    EXPECT_LT(abs(closed - step), tol(10));
  }
}

TEST(Refinement, ClosedFormStableUnderRaisedDigits) {
  const PrecisionCtx hi = kCtx.raised(20);
  const Real a = 1L / const_pi(hi);
  const Real b = 1L / exp(Real(1L, hi));
  const Real x = c_closed(make_mass_pair(a.at(kCtx), b.at(kCtx), kCtx), kCtx);
  const Real y = c_closed(make_mass_pair(a.at(kCtx), b.at(kCtx), hi), hi);
  EXPECT_LT(abs(x - y) / abs(y), pow10(-kCtx.digits() + 2, hi));
}
