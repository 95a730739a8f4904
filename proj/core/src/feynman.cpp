#include "tetra/feynman.hpp"

#include "tetra/polylog.hpp"

namespace tetra {

namespace {

Real threshold(const PrecisionCtx& ctx, int lost_digits) { return pow10(-(ctx.digits() - lost_digits), ctx); }

// tan(t) = num/den without the pole at pi/2.
Real tan_ratio(const Real& t, const Real& num, const Real& den) { return sin(t) * den - cos(t) * num; }

void assert_small(const std::vector<NamedResidual>& residuals, const Real& tol, const char* what) {
  for (const NamedResidual& r : residuals) {
    if (!(abs(r.residual) < tol)) {
      throw InvariantError(std::string(what) + " '" + r.name + "' violated: residual " + r.residual.to_string(6));
    }
  }
}

// S(w) = sqrt(w^2 + b^2 - 4) with w - 2 = t known to full relative accuracy.
Real s_near_two(const Real& w, const Real& t, const Real& b) { return sqrt(t * (w + 2L) + sqr(b)); }

// arctanh((w^2 - 4 - 2b)/(w S)) on [2, 2+b], where the argument tends to -1 as
// t = w - 2 -> 0. Uses (1+y)/(1-y) = (b+2)^2 (w-2)(w+2) / (w S - (w-2)(w+2) + 2b)^2.
Real atanh_lower(const Real& w, const Real& t, const Real& b, const Real& s) {
  const Real w2m4 = t * (w + 2L);
  const Real den = w * s - w2m4 + ldexp(b, 1);
  return log(b + 2L) + ldexp(log(w2m4), -1) - log(den);
}

QuadratureResult lower(const MassPair& m, const Real& tol, const PrecisionCtx& ctx, bool with_w, bool with_wa) {
  const Real& a = m.a;
  const Real& b = m.b;
  auto f = [&](const Node& n) {
    const Real& w = n.x;
    const Real s = s_near_two(w, n.from_lo, b);
    Real den = s;
    if (with_w) den *= w;
    if (with_wa) den *= w + a;
    return atanh_lower(w, n.from_lo, b, s) / den;
  };
  const Real two(2L, ctx);
  return integrate_nodes(f, Finite{two, two + b}, tol, ctx);
}

QuadratureResult upper(const MassPair& m, const Real& tol, const PrecisionCtx& ctx, bool with_w, bool with_wa) {
  const Real& a = m.a;
  const Real& b = m.b;
  auto f = [&](const Node& n) {
    const Real& w = n.x;
    const Real s = sqrt(sqr(w) + sqr(b) - 4L);
    Real den = s;
    if (with_w) den *= w;
    if (with_wa) den *= w + a;
    return atanh(b / s) / den;
  };
  return integrate_nodes(f, SemiInfinite{b + 2L}, tol, ctx);
}

}  // namespace

MassPair make_mass_pair(const Real& a, const Real& b, const PrecisionCtx& ctx) {
  const Real margin = pow10(-(ctx.digits() / 2), ctx);
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("masses must be positive");
  if (sqr(a) + sqr(b) >= 4L) throw DomainError("mass pair outside a^2 + b^2 < 4");
  if (a < margin || b < margin || sqr(a) + sqr(b) > 4L - margin) {
    throw DomainError("mass pair within " + margin.to_string(3) + " of the region boundary (ill-conditioned)");
  }
  return {a.at(ctx), b.at(ctx)};
}

DerivedAngles derive(const MassPair& m, const PrecisionCtx& ctx) {
  if (m.a.sign() <= 0 || m.b.sign() <= 0) throw DomainError("masses must be positive");
  if (sqr(m.a) + sqr(m.b) >= 4L) throw DomainError("mass pair outside a^2 + b^2 < 4");

  DerivedAngles g;
  const Real a = m.a.at(ctx);
  const Real b = m.b.at(ctx);
  g.a = a;
  g.b = b;
  g.c = sqrt(4L - sqr(b));
  g.d = sqrt(4L - sqr(a) - sqr(b));
  g.p = a + b + 2L;
  g.f = sqrt((b + 2L) / (2L - b));
  g.u1 = g.f;
  g.u2 = g.f + sqrt(ldexp(b, 1) / (2L - b));

  const Real& c = g.c;
  const Real& d = g.d;
  const Real& p = g.p;
  g.alpha1 = asin(sqrt((2L - b) / (2L + b)));
  g.alpha2 = atan(c / b);
  g.alpha3 = asin(a / c);
  g.alpha4 = asin(a / c + sqr(d) / (c * p));
  g.alpha6 = atan(p / d);
  g.alpha7 = atan((p + sqrt(2L * sqr(b) + 4L * b)) / d);

  const Real cd = c * d;
  const Real ab = a * b;
  const Real bc = b * c;
  const Real d2 = ldexp(d, 1);
  g.delta1 = ldexp(atan((cd - ab) / (d2 + bc)), 1);
  g.delta2 = ldexp(atan((cd - ab) / (d2 - bc)), 1);
  g.delta3 = ldexp(atan((cd + ab) / (d2 - bc)), 1);
  g.delta4 = ldexp(atan((cd + ab) / (d2 + bc)), 1);
  g.delta7 = atan(a / d);
  g.delta8 = g.alpha6;
  g.delta9 = atan((a - b - 2L) / d);
  g.delta10 = atan((a - b + 2L) / d);
  g.delta11 = atan((a + b - 2L) / d);

  g.phi = atan(d / p);
  g.phi_a = atan(d / a);
  g.phi_b = atan(d / b);

  const Real tol = threshold(ctx, 5);
  assert_small(definition_residuals(g, ctx), tol, "definition");
  assert_small(angle_identity_residuals(g, ctx), tol, "angle identity");
  return g;
}

std::vector<NamedResidual> definition_residuals(const DerivedAngles& g, const PrecisionCtx& ctx) {
  const Real& a = g.a;
  const Real& b = g.b;
  const Real& c = g.c;
  const Real& d = g.d;
  const Real& p = g.p;
  std::vector<NamedResidual> out;
  out.push_back({"sin(alpha1)", sin(g.alpha1) - sqrt((2L - b) / (2L + b))});
  out.push_back({"tan(alpha2)", tan_ratio(g.alpha2, c, b)});
  out.push_back({"sin(alpha3)", sin(g.alpha3) - a / c});
  out.push_back({"sin(alpha4)", sin(g.alpha4) - (a / c + sqr(d) / (c * p))});
  out.push_back({"tan(alpha6)", tan_ratio(g.alpha6, p, d)});
  out.push_back({"tan(alpha7)", tan_ratio(g.alpha7, p + sqrt(2L * sqr(b) + 4L * b), d)});
  out.push_back({"f^2", sqr(g.f) - (2L + b) / (2L - b)});
  out.push_back({"delta8=alpha6", g.delta8 - g.alpha6});
  out.push_back({"tan(phi)", tan_ratio(g.phi, d, p)});
  out.push_back({"closure", (4L - sqr(a)) * (4L - sqr(b)) - sqr(a) * sqr(b) - 4L * sqr(d)});
  for (NamedResidual& r : out) r.residual = r.residual.at(ctx);
  return out;
}

std::vector<NamedResidual> angle_identity_residuals(const DerivedAngles& g, const PrecisionCtx& ctx) {
  const Real pi = const_pi(ctx);
  const Real half_pi = ldexp(pi, -1);
  const Real& ph = g.phi;
  const Real& pa = g.phi_a;
  const Real& pb = g.phi_b;
  std::vector<NamedResidual> out;
  out.push_back({"alpha3", g.alpha3 - (half_pi - pa)});
  out.push_back({"alpha6", g.alpha6 - (half_pi - ph)});
  out.push_back({"delta1", g.delta1 - (-2L * ph + pa + 2L * pb - half_pi)});
  out.push_back({"delta3", g.delta3 - (2L * ph - pa - 2L * pb + 3L * half_pi)});
  out.push_back({"delta7", g.delta7 - (half_pi - pa)});
  out.push_back({"delta9", g.delta9 - (-ph + pb - half_pi)});
  out.push_back({"delta11", g.delta11 - (half_pi + ph - pa - pb)});
  for (NamedResidual& r : out) r.residual = wrap_angle(r.residual, ctx);
  return out;
}

std::vector<ClausenValue> q_values(const DerivedAngles& g, const PrecisionCtx& ctx) {
  const Real pi = const_pi(ctx);
  const Real& a1 = g.alpha1;
  const Real& a2 = g.alpha2;
  std::vector<ClausenValue> q;
  q.push_back(make_clausen_value("q1", "2*alpha1+2*alpha2", 2L * a1 + 2L * a2, ctx));
  q.push_back(make_clausen_value("q2", "2*alpha1-2*alpha2", 2L * a1 - 2L * a2, ctx));
  q.push_back(make_clausen_value("q3", "2*alpha2", 2L * a2, ctx));
  q.push_back(make_clausen_value("q4", "alpha2-alpha1", a2 - a1, ctx));
  q.push_back(make_clausen_value("q5", "alpha2+alpha1", a2 + a1, ctx));
  q.push_back(make_clausen_value("q6", "2*alpha2", 2L * a2, ctx));
  q.push_back(make_clausen_value("q7", "pi-2*alpha2", pi - 2L * a2, ctx));
  q.push_back(make_clausen_value("q8", "pi-alpha1-alpha2", pi - a1 - a2, ctx));
  q.push_back(make_clausen_value("q9", "pi+alpha1-alpha2", pi + a1 - a2, ctx));
  q.push_back(make_clausen_value("q10", "alpha2", a2, ctx));
  q.push_back(make_clausen_value("q11", "alpha1", a1, ctx));
  q.push_back(make_clausen_value("q12", "pi-alpha2", pi - a2, ctx));
  q.push_back(make_clausen_value("q13", "pi-alpha1", pi - a1, ctx));
  return q;
}

std::vector<ClausenValue> r_values(const DerivedAngles& g, const PrecisionCtx& ctx) {
  const Real pi = const_pi(ctx);
  const Real& a3 = g.alpha3;
  const Real& a4 = g.alpha4;
  const Real& a6 = g.alpha6;
  const Real& a7 = g.alpha7;
  std::vector<ClausenValue> r;
  r.push_back(make_clausen_value("r1", "delta2-alpha4", g.delta2 - a4, ctx));
  r.push_back(make_clausen_value("r2", "delta2-alpha3", g.delta2 - a3, ctx));
  r.push_back(make_clausen_value("r3", "delta1+alpha3", g.delta1 + a3, ctx));
  r.push_back(make_clausen_value("r4", "delta1+alpha4", g.delta1 + a4, ctx));
  r.push_back(make_clausen_value("r5", "delta4-alpha4", g.delta4 - a4, ctx));
  r.push_back(make_clausen_value("r6", "delta4-alpha3", g.delta4 - a3, ctx));
  r.push_back(make_clausen_value("r7", "delta3+alpha3", g.delta3 + a3, ctx));
  r.push_back(make_clausen_value("r8", "delta3+alpha4", g.delta3 + a4, ctx));
  r.push_back(make_clausen_value("r9", "2*alpha6-2*delta7", 2L * (a6 - g.delta7), ctx));
  r.push_back(make_clausen_value("r10", "2*alpha7-2*delta7", 2L * (a7 - g.delta7), ctx));
  r.push_back(make_clausen_value("r11", "2*alpha7-2*delta8", 2L * (a7 - g.delta8), ctx));
  r.push_back(make_clausen_value("r12", "2*alpha6-2*delta9", 2L * (a6 - g.delta9), ctx));
  r.push_back(make_clausen_value("r13", "2*alpha7-2*delta9", 2L * (a7 - g.delta9), ctx));
  r.push_back(make_clausen_value("r14", "2*alpha6-2*delta10", 2L * (a6 - g.delta10), ctx));
  r.push_back(make_clausen_value("r15", "2*alpha7-2*delta10", 2L * (a7 - g.delta10), ctx));
  r.push_back(make_clausen_value("r16", "2*alpha6-2*delta11", 2L * (a6 - g.delta11), ctx));
  r.push_back(make_clausen_value("r17", "2*alpha7-2*delta11", 2L * (a7 - g.delta11), ctx));
  r.push_back(make_clausen_value("r18", "pi-2*alpha6", pi - 2L * a6, ctx));
  r.push_back(make_clausen_value("r19", "pi-2*alpha7", pi - 2L * a7, ctx));
  return r;
}

std::vector<ClausenValue> s_values(const DerivedAngles& g, const PrecisionCtx& ctx) {
  const Real& ph = g.phi;
  const Real& pa = g.phi_a;
  const Real& pb = g.phi_b;
  std::vector<ClausenValue> s;
  s.push_back(make_clausen_value("s1", "4*phi", 4L * ph, ctx));
  s.push_back(make_clausen_value("s2", "2*phi_a+2*phi_b-2*phi", 2L * (pa + pb - ph), ctx));
  s.push_back(make_clausen_value("s3", "2*phi_a-2*phi", 2L * (pa - ph), ctx));
  s.push_back(make_clausen_value("s4", "2*phi_b-2*phi", 2L * (pb - ph), ctx));
  s.push_back(make_clausen_value("s5", "2*phi_a+2*phi_b-4*phi", 2L * (pa + pb) - 4L * ph, ctx));
  s.push_back(make_clausen_value("s6", "2*phi_a", 2L * pa, ctx));
  s.push_back(make_clausen_value("s7", "2*phi_b", 2L * pb, ctx));
  s.push_back(make_clausen_value("s8", "2*phi", 2L * ph, ctx));
  return s;
}

ClausenSum i1_bracket(const DerivedAngles& g, const std::vector<ClausenValue>& q) {
  ClausenSum sum(1L / (4L * g.c));
  sum.add(-1, q.at(0)).add(1, q.at(1)).add(2, q.at(2));
  return sum;
}

ClausenSum i2_bracket(const DerivedAngles& g, const std::vector<ClausenValue>& q) {
  ClausenSum sum(1L / (2L * g.c));
  const int coeff[] = {-1, 1, -1, -1, 1, -1, 2, -2, 2, -2};
  for (int i = 0; i < 10; ++i) sum.add(coeff[i], q.at(3 + i));
  return sum;
}

ClausenSum i3_bracket(const DerivedAngles& g, const std::vector<ClausenValue>& r) {
  ClausenSum sum(1L / (2L * g.d));
  const int coeff[] = {1, -1, 1, -1, -1, 1, -1, 1};
  for (int i = 0; i < 8; ++i) sum.add(coeff[i], r.at(i));
  return sum;
}

ClausenSum i4_bracket(const DerivedAngles& g, const std::vector<ClausenValue>& r) {
  ClausenSum sum(1L / (2L * g.d));
  const int coeff[] = {2, -2, -1, 1, -1, -1, 1, -1, 1, 2, -2};
  for (int i = 0; i < 11; ++i) sum.add(coeff[i], r.at(8 + i));
  return sum;
}

Real i4_log_remainder(const DerivedAngles& g, const PrecisionCtx& ctx) {
  const Real lc7 = log(cos(g.delta7));
  const Real lc8 = log(cos(g.delta8));
  const Real lc9 = log(cos(g.delta9));
  const Real lc10 = log(cos(g.delta10));
  const Real lc11 = log(cos(g.delta11));
  const Real constant = log(sqr(g.d) / (sqr(g.c) * sqr(g.f)));
  const Real cosines = 2L * lc7 + lc8 + lc9 - lc10 - lc11;
  return ((g.alpha7 - g.alpha6) * (constant - cosines) / g.d).at(ctx);
}

std::array<Real, 4> lemma_integrals(const DerivedAngles& g, const PrecisionCtx& ctx) {
  const Real zero(ctx);
  const Real one(1L, ctx);
  const Real& b = g.b;
  const Real& c = g.c;
  const Real& d = g.d;

  const Real i1 = (log_sin_product_integral(zero, g.alpha1, c, b, zero, ctx).value -
                   log_sin_product_integral(zero, g.alpha1, c, -b, zero, ctx).value) /
                  (2L * c);

  const Real half_b = ldexp(b, -1);
  const Real i2 = (log_sin_product_integral(g.alpha1, g.alpha2, one, zero, -half_b, ctx).value -
                   log_sin_product_integral(g.alpha1, g.alpha2, one, zero, half_b, ctx).value -
                   4L * log_tan_integral(ldexp(g.alpha1, -1), ldexp(g.alpha2, -1), zero, ctx)) /
                  (2L * c);

  const Real dc = d * c;
  const Real bc = b * c;
  const Real ab = g.a * b;
  const Real i3 = (log_sin_product_integral(g.alpha3, g.alpha4, dc, bc, -ab, ctx).value -
                   log_sin_product_integral(g.alpha3, g.alpha4, dc, -bc, ab, ctx).value) /
                  (2L * d);

  auto lt = [&](const Real& delta) { return log_tan_integral(g.alpha6, g.alpha7, delta, ctx); };
  const Real constant = (g.alpha7 - g.alpha6) * log(sqr(d) / (sqr(c) * sqr(g.f)));
  const Real i4 =
      (constant + 2L * lt(g.delta7) + lt(g.delta8) + lt(g.delta9) - lt(g.delta10) - lt(g.delta11)) / d;

  return {i1.at(ctx), i2.at(ctx), i3.at(ctx), i4.at(ctx)};
}

QuadratureResult integral_quadrature(int index, const MassPair& m, const Real& tol, const PrecisionCtx& ctx) {
  switch (index) {
    case 1: return upper(m, tol, ctx, true, false);
    case 2: return lower(m, tol, ctx, true, false);
    case 3: return upper(m, tol, ctx, false, true);
    case 4: return lower(m, tol, ctx, false, true);
    default: throw DomainError("integral index must be 1..4");
  }
}

std::vector<NamedResidual> q_relation_residuals(const std::vector<ClausenValue>& q, const PrecisionCtx& ctx) {
  auto v = [&](int i) -> const Real& { return q.at(i - 1).value; };
  std::vector<NamedResidual> out;
  out.push_back({"q1=2q5-2q8", v(1) - 2L * v(5) + 2L * v(8)});
  out.push_back({"q2=2q9-2q4", v(2) - 2L * v(9) + 2L * v(4)});
  out.push_back({"q3=q6", v(3) - v(6)});
  out.push_back({"2q4+q7-2q8-2q10+2q11-2q12+2q13=0",
                 2L * v(4) + v(7) - 2L * v(8) - 2L * v(10) + 2L * v(11) - 2L * v(12) + 2L * v(13)});
  for (NamedResidual& r : out) r.residual = r.residual.at(ctx);
  return out;
}

std::vector<NamedResidual> r_relation_residuals(const std::vector<ClausenValue>& r, const PrecisionCtx& ctx) {
  auto v = [&](int i) -> const Real& { return r.at(i - 1).value; };
  std::vector<NamedResidual> out;
  out.push_back({"r2=r9", v(2) - v(9)});
  out.push_back({"r5=r11", v(5) - v(11)});
  out.push_back({"r4=-r13", v(4) + v(13)});
  out.push_back({"r1=r15", v(1) - v(15)});
  out.push_back({"r8=-r17", v(8) + v(17)});
  out.push_back({"r6=r18", v(6) - v(18)});
  for (NamedResidual& x : out) x.residual = x.residual.at(ctx);
  return out;
}

std::vector<NamedResidual> rs_relation_residuals(const std::vector<ClausenValue>& r,
                                                 const std::vector<ClausenValue>& s, const PrecisionCtx& ctx) {
  auto rv = [&](int i) -> const Real& { return r.at(i - 1).value; };
  auto sv = [&](int i) -> const Real& { return s.at(i - 1).value; };
  std::vector<NamedResidual> out;
  out.push_back({"r3=s4", rv(3) - sv(4)});
  out.push_back({"r7=-s2", rv(7) + sv(2)});
  out.push_back({"r9=s3", rv(9) - sv(3)});
  out.push_back({"r12=-s7", rv(12) + sv(7)});
  out.push_back({"r16=s5", rv(16) - sv(5)});
  out.push_back({"r18=s8", rv(18) - sv(8)});
  out.push_back({"-2r10-2r11-r14+2r15-2r19-s1+s6+4s8=0",
                 -2L * rv(10) - 2L * rv(11) - rv(14) + 2L * rv(15) - 2L * rv(19) - sv(1) + sv(6) + 4L * sv(8)});
  for (NamedResidual& x : out) x.residual = x.residual.at(ctx);
  return out;
}

Real tan_form_residual(const DerivedAngles& g, const PrecisionCtx& ctx) {
  const Real& a = g.a;
  const Real& b = g.b;
  const Real& c = g.c;
  const Real& d = g.d;
  const Real& p = g.p;
  const Real u = sqrt(2L * sqr(b) + 4L * b);
  const Real lhs = d * u / (sqr(p) + sqr(d) + p * u);
  const Real x = (a * b + c * d) / (2L * d + b * c);
  const Real y = (p * c - d * u) / (sqr(d) + a * p);
  return (lhs - (x - y) / (1L + x * y)).at(ctx);
}

QuadratureResult c_direct(const MassPair& m, const Real& tol, const PrecisionCtx& ctx) {
  const Real floor_tol = pow10(-(ctx.digits() - 5), ctx);
  if (tol < floor_tol) {
    throw PrecisionError("c_direct tolerance below 1e-" + std::to_string(ctx.digits() - 5));
  }
  const Real panel_tol = max(tol * m.b / 32L, floor_tol);
  const QuadratureResult lo = lower(m, panel_tol, ctx, true, true);
  const QuadratureResult hi = upper(m, panel_tol, ctx, true, true);
  const Real scale = -16L / m.b;
  QuadratureResult out;
  out.value = (scale * (lo.value + hi.value)).at(ctx);
  out.error_estimate = (abs(scale) * (lo.error_estimate + hi.error_estimate)).at(ctx);
  out.evaluations = lo.evaluations + hi.evaluations;
  out.levels = std::max(lo.levels, hi.levels);
  return out;
}

Real c_closed(const MassPair& m, const PrecisionCtx& ctx) {
  const DerivedAngles g = derive(m, ctx);
  const std::vector<ClausenValue> s = s_values(g, ctx);
  Real sum(ctx);
  const int sign[] = {1, 1, 1, 1, -1, -1, -1, -1};
  for (int i = 0; i < 8; ++i) sum += sign[i] * s[i].value;
  return (8L * sum / (g.a * g.b * g.d)).at(ctx);
}

StepReport stepwise(const MassPair& m, const PrecisionCtx& ctx) {
  StepReport rep;
  rep.masses = m;
  rep.angles = derive(m, ctx);
  const DerivedAngles& g = rep.angles;
  rep.q = q_values(g, ctx);
  rep.r = r_values(g, ctx);
  rep.s = s_values(g, ctx);
  rep.i4_log_remainder = i4_log_remainder(g, ctx);
  rep.tolerance = threshold(ctx, 10);

  const std::array<Real, 4> brackets = {
      i1_bracket(g, rep.q).evaluate(ctx),
      i2_bracket(g, rep.q).evaluate(ctx),
      i3_bracket(g, rep.r).evaluate(ctx),
      (i4_bracket(g, rep.r).evaluate(ctx) + rep.i4_log_remainder).at(ctx),
  };
  const std::array<Real, 4> lemmas = lemma_integrals(g, ctx);
  const Real quad_tol = threshold(ctx, 8);

  for (int k = 0; k < 4; ++k) {
    IntegralCheck& chk = rep.integrals[k];
    chk.name = "I" + std::to_string(k + 1);
    chk.bracket = brackets[k];
    chk.lemma = lemmas[k];
    chk.quadrature = integral_quadrature(k + 1, m, quad_tol, ctx);
    chk.difference = max(abs(chk.bracket - chk.quadrature.value), abs(chk.lemma - chk.bracket)).at(ctx);
    chk.agrees = chk.difference < rep.tolerance;
    if (!chk.agrees) {
      throw ClosedFormMismatch(chk.name, chk.name + " closed form disagrees with quadrature by " +
                                             chk.difference.to_string(6) + " at a = " + m.a.to_string(20) +
                                             ", b = " + m.b.to_string(20));
    }
  }

  const auto& I = rep.integrals;
  rep.i1_plus_i2_bracket = (I[0].bracket + I[1].bracket).at(ctx);
  rep.i1_plus_i2_quadrature = (I[0].quadrature.value + I[1].quadrature.value).at(ctx);
  const Real scale = 16L / (g.a * g.b);
  rep.c_bracket = (scale * (I[2].bracket + I[3].bracket)).at(ctx);
  rep.c_quadrature = (scale * (I[2].quadrature.value + I[3].quadrature.value)).at(ctx);

  Real s_sum(ctx);
  const int sign[] = {1, 1, 1, 1, -1, -1, -1, -1};
  for (int i = 0; i < 8; ++i) s_sum += sign[i] * rep.s[i].value;
  rep.s_form_residual = (2L * g.d * (I[2].bracket + I[3].bracket) - s_sum).at(ctx);
  return rep;
}

}  // namespace tetra
