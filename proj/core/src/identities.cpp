#include "tetra/identities.hpp"

#include <cmath>
#include <random>

#include "tetra/clausen_sum.hpp"
#include "tetra/polylog.hpp"

namespace tetra {

namespace {

using Params = std::span<const Real>;

Real max_abs(const std::vector<NamedResidual>& rs, const PrecisionCtx& ctx) {
  Real m(ctx);
  for (const NamedResidual& r : rs) m = max(m, abs(r.residual));
  return m;
}

// tan(alpha) = 1/sqrt(2), tan(beta) = sqrt(8) + sqrt(3).
struct ConjAngles {
  Real pi, alpha, beta;
  explicit ConjAngles(const PrecisionCtx& ctx)
      : pi(const_pi(ctx)),
        alpha(atan(1L / sqrt(Real(2L, ctx)))),
        beta(atan(sqrt(Real(8L, ctx)) + sqrt(Real(3L, ctx)))) {}
};

// Prop 1 / Prop 2 angles for a mass pair.
struct PropAngles {
  Real pi, gamma, phi, phi_a, phi_b;
  PropAngles(const Real& a, const Real& b, const PrecisionCtx& ctx) : pi(const_pi(ctx)) {
    const Real d = sqrt(4L - sqr(a) - sqr(b));
    const Real p = a + b + 2L;
    gamma = atan((p + sqrt(2L * sqr(b) + 4L * b)) / d);
    phi = atan(d / p);
    phi_a = atan(d / a);
    phi_b = atan(d / b);
  }
};

DerivedAngles angles_for(Params v, const PrecisionCtx& ctx) {
  return derive(make_mass_pair(v[0], v[1], ctx), ctx);
}

Real conj_1_1(Params, const PrecisionCtx& ctx) {
  const ConjAngles k(ctx);
  const Real& a = k.alpha;
  const Real third = k.pi / 3L;
  ClausenSum s;
  s.add(1, a).add(1, k.pi - a).add(1, third - a).add(-1, 2L * third - a).add(Rational{-7, 4}, 2L * third);
  return s.evaluate(ctx);
}

Real conj_1_2(Params, const PrecisionCtx& ctx) {
  const ConjAngles k(ctx);
  const Real& a = k.alpha;
  ClausenSum s;
  s.add(1, 6L * a - k.pi).add(1, k.pi + 2L * a).add(-2, 2L * a).add(2, k.pi - 4L * a);
  return s.evaluate(ctx);
}

Real conj_1_3(Params, const PrecisionCtx& ctx) {
  const ConjAngles k(ctx);
  const Real& a = k.alpha;
  const Real& b = k.beta;
  ClausenSum s;
  s.add(1, k.pi - 2L * b).add(1, 2L * b - 4L * a).add(1, 2L * b - 2L * a).add(-1, 2L * b + 2L * a - k.pi);
  s.add(-1, 2L * a).add(-2, k.pi - 4L * a).add(-2, k.pi + 2L * a);
  return s.evaluate(ctx);
}

Real conj_1_4(Params, const PrecisionCtx& ctx) {
  const ConjAngles k(ctx);
  const Real& a = k.alpha;
  const Real& b = k.beta;
  ClausenSum s;
  s.add(-12, 2L * b - 2L * a).add(4, k.pi - 4L * a).add(-12, k.pi - 2L * b).add(-18, k.pi + 2L * a);
  s.add(7, 4L * a);
  return s.evaluate(ctx);
}

Real theorem_1(Params v, const PrecisionCtx& ctx) {
  const Real pi = const_pi(ctx);
  const Real a = 2L * atan(v[0].at(ctx));
  const Real b = 2L * atan(sin(a));
  ClausenSum s;
  s.add(1, pi - 2L * b).add(-2, b).add(-2, pi - b).add(2, a).add(2, pi - a).add(2, b - a).add(-2, pi - a - b);
  return s.evaluate(ctx);
}

Real prop_1(Params v, const PrecisionCtx& ctx) {
  const PropAngles k(v[0], v[1], ctx);
  const Real& g = k.gamma;
  ClausenSum s;
  s.add(2, 2L * g + 2L * k.phi_a - k.pi).add(2, 2L * g + 2L * k.phi - k.pi).add(1, 2L * k.phi_a - 4L * k.phi);
  s.add(-2, 2L * g - 2L * k.phi + 2L * k.phi_a - k.pi).add(2, k.pi - 2L * g).add(1, 4L * k.phi);
  s.add(-1, 2L * k.phi_a).add(-4, 2L * k.phi);
  return s.evaluate(ctx);
}

Real prop_2(Params v, const PrecisionCtx& ctx) {
  const PropAngles k(v[0], v[1], ctx);
  const Real& ph = k.phi;
  const Real& pa = k.phi_a;
  const Real& pb = k.phi_b;
  ClausenSum s;
  s.add(2, 2L * ph).add(-4, 2L * pb).add(1, 4L * pb).add(2, 2L * pb - 2L * ph).add(-2, 2L * pa - 2L * ph);
  s.add(1, 2L * pa - 4L * ph).add(2, 2L * pa + 2L * pb - 2L * ph).add(-1, 2L * pa + 4L * pb - 4L * ph);
  return s.evaluate(ctx);
}

Real duplication(Params v, const PrecisionCtx& ctx) {
  const Real x = v[0].at(ctx);
  ClausenSum s;
  s.add(1, 2L * x).add(-2, x).add(2, const_pi(ctx) - x);
  return s.evaluate(ctx);
}

Real prop1_t_checks(Params v, const PrecisionCtx& ctx) {
  const PropAngles k(v[0], v[1], ctx);
  const Real h = ldexp(k.pi, -1);
  const Real& g = k.gamma;
  const Real& ph = k.phi;
  const Real& pa = k.phi_a;
  const Real s_ga = sin(g + pa - h);
  const Real s_gp = sin(g + ph - h);
  const Real s_gpa = sin(g - ph + pa - h);
  const Real t1 = s_ga * s_gp / (s_gpa * sin(h - g));
  const Real t2 = sqr(s_ga) * sin(pa - 2L * ph) / (sqr(s_gpa) * sin(pa));
  const Real t3 = s_gp * s_gpa * sin(2L * ph) / (sin(pa - 2L * ph) * sqr(sin(ph)));
  return max(max(abs(t1 - 1L), abs(t2 - 1L)), abs(t3 - 1L)).at(ctx);
}

Real prop2_log_checks(Params v, const PrecisionCtx& ctx) {
  const PropAngles k(v[0], v[1], ctx);
  const Real& ph = k.phi;
  const Real& pa = k.phi_a;
  const Real& pb = k.phi_b;
  const Real l1 = sin(ph) * sin(pa - ph) * sin(pa + 2L * pb - 2L * ph) /
                  (sin(pb - ph) * sin(pa - 2L * ph) * sin(pa + pb - ph));
  const Real l2 = sin(pa - 2L * ph) * sqr(sin(pa + pb - ph)) / (sqr(sin(pa - ph)) * sin(pa + 2L * pb - 2L * ph));
  const Real l3 = sin(2L * pb) * sin(pb - ph) * sin(pa + pb - ph) / (sqr(sin(pb)) * sin(pa + 2L * pb - 2L * ph));
  return max(max(abs(log(l1)), abs(log(l2))), abs(log(l3))).at(ctx);
}

Real q_relations(Params v, const PrecisionCtx& ctx) {
  const DerivedAngles g = angles_for(v, ctx);
  return max_abs(q_relation_residuals(q_values(g, ctx), ctx), ctx);
}

Real i1_plus_i2(Params v, const PrecisionCtx& ctx) {
  const DerivedAngles g = angles_for(v, ctx);
  const auto q = q_values(g, ctx);
  return abs(i1_bracket(g, q).evaluate(ctx) + i2_bracket(g, q).evaluate(ctx));
}

Real r_relations(Params v, const PrecisionCtx& ctx) {
  const DerivedAngles g = angles_for(v, ctx);
  return max_abs(r_relation_residuals(r_values(g, ctx), ctx), ctx);
}

Real rs_relations(Params v, const PrecisionCtx& ctx) {
  const DerivedAngles g = angles_for(v, ctx);
  return max_abs(rs_relation_residuals(r_values(g, ctx), s_values(g, ctx), ctx), ctx);
}

Real angle_relations(Params v, const PrecisionCtx& ctx) {
  const DerivedAngles g = angles_for(v, ctx);
  return max(max_abs(angle_identity_residuals(g, ctx), ctx), max_abs(definition_residuals(g, ctx), ctx));
}

Real tan_form(Params v, const PrecisionCtx& ctx) {
  return abs(tan_form_residual(angles_for(v, ctx), ctx));
}

Real broadhurst_c11(Params, const PrecisionCtx& ctx) {
  const Real one(1L, ctx);
  return abs(c_closed(make_mass_pair(one, one, ctx), ctx) - broadhurst_constant(ctx));
}

Real lewin_1_1(Params v, const PrecisionCtx& ctx) {
  const Real& x = v[0];
  return abs(li2(x, ctx) + li2(-x, ctx) - ldexp(li2(sqr(x), ctx), -1));
}

Real lewin_1_2(Params v, const PrecisionCtx& ctx) {
  const Real& x = v[0];
  const Real l = log1p(-x);
  return abs(li2(x, ctx) + li2(-x / (1L - x), ctx) + ldexp(sqr(l), -1));
}

Real lewin_1_3(Params v, const PrecisionCtx& ctx) {
  const Real& x = v[0];
  const Real pi = const_pi(ctx);
  const Real rhs = sqr(pi) / 6L - ldexp(log1p(x) * log((1L + x) / sqr(x)), -1);
  return abs(li2(1L / (1L + x), ctx) - li2(-x, ctx) - rhs);
}

Real lewin_1_4(Params v, const PrecisionCtx& ctx) {
  const Real& x = v[0];
  const Real& y = v[1];
  const Real lhs = li2(x / (1L - x) * (y / (1L - y)), ctx);
  const Real rhs = li2(x / (1L - y), ctx) + li2(y / (1L - x), ctx) - li2(x, ctx) - li2(y, ctx) -
                   log1p(-x) * log1p(-y);
  return abs(lhs - rhs);
}

Real lewin_1_5(Params v, const PrecisionCtx& ctx) {
  const Real& x = v[0];
  const Real pi = const_pi(ctx);
  return abs(li2(x, ctx) + li2(1L - x, ctx) - sqr(pi) / 6L + log(x) * log1p(-x));
}

Real harmonic_closed_form(Params v, const PrecisionCtx& ctx) {
  const Complex zr(v[0].at(ctx), Real(ctx));
  const Complex zi(Real(ctx), -1L / sqrt(Real(8L, ctx)));
  const Real real_part = abs(harmonic_odd_series(zr, ctx) - harmonic_odd_closed(zr, ctx));
  const Real imag_part = abs(harmonic_odd_series(zi, ctx) - harmonic_odd_closed(zi, ctx));
  return max(real_part, imag_part);
}

Real harmonic_gf(Params v, const PrecisionCtx& ctx) {
  const PrecisionCtx w = ctx.raised(5);
  const Real x2 = sqr(v[0].at(w));
  const Real eps = pow10(-(w.working_digits() + 2), w) * (1L - x2);
  Real sum(w);
  Real power = x2;
  Real harmonic(1L, w);
  for (long n = 1;; ++n) {
    sum += harmonic * power;
    if (power * harmonic < eps) break;
    power *= x2;
    harmonic += Real(1L, w) / (n + 1);
  }
  return abs(sum + log1p(-x2) / (1L - x2)).at(ctx);
}

Real broadhurst_series_identity(Params, const PrecisionCtx& ctx) {
  const int terms = static_cast<int>(std::ceil(ctx.working_digits() * std::log(10.0) / std::log(8.0))) + 5;
  const SeriesValue s = broadhurst_series(ctx, terms);
  return (abs(s.value - broadhurst_constant(ctx)) + s.tail_bound).at(ctx);
}

Real alpha_conventions(Params, const PrecisionCtx& ctx) {
  const Real alpha_c = atan(1L / sqrt(Real(2L, ctx)));
  const Real alpha_b = asin(rational(1, 3, ctx));
  return abs(2L * alpha_c - (ldexp(const_pi(ctx), -1) - alpha_b));
}

ResidualFn chain(std::string step) {
  return [step](Params, const PrecisionCtx& ctx) { return chain_step(step, ctx); };
}

std::vector<IdentitySpec> build_catalog() {
  const std::vector<IdentityParameter> none;
  const std::vector<IdentityParameter> ab = {{"a", "(0, 2)"}, {"b", "(0, 2)"}};
  const std::string disk = "a, b > 0, a^2 + b^2 < 4";
  auto fixed = [&](std::string name, std::string statement, ResidualFn f,
                   IdentityStatus status = IdentityStatus::proven) {
    return IdentitySpec{std::move(name), std::move(statement), status, none, Sampling::fixed, 0, 0, std::move(f)};
  };
  auto masses = [&](std::string name, std::string statement, ResidualFn f) {
    return IdentitySpec{std::move(name), std::move(statement), IdentityStatus::proven,
                        {{"a", disk}, {"b", disk}}, Sampling::quarter_disk, 0, 0, std::move(f)};
  };
  auto line = [&](std::string name, std::string statement, std::string param, double lo, double hi, ResidualFn f) {
    const std::string dom = "(" + std::to_string(lo) + ", " + std::to_string(hi) + ")";
    return IdentitySpec{std::move(name), std::move(statement), IdentityStatus::proven,
                        {{std::move(param), dom}}, Sampling::interval, lo, hi, std::move(f)};
  };

  std::vector<IdentitySpec> c;
  c.push_back(fixed("conj-1.1", "Cl2(a)+Cl2(pi-a)+Cl2(pi/3-a)-Cl2(2pi/3-a) = 7/4 Cl2(2pi/3), tan a = 1/sqrt2", conj_1_1));
  c.push_back(fixed("conj-1.2", "Cl2(6a-pi)+Cl2(pi+2a)-2Cl2(2a)+2Cl2(pi-4a) = 0, tan a = 1/sqrt2", conj_1_2));
  c.push_back(fixed("conj-1.3",
                    "Cl2(pi-2b)+Cl2(2b-4a)+Cl2(2b-2a)-Cl2(2b+2a-pi)-Cl2(2a)-2Cl2(pi-4a)-2Cl2(pi+2a) = 0, "
                    "tan a = 1/sqrt2, tan b = sqrt8+sqrt3",
                    conj_1_3));
  c.push_back(fixed("conj-1.4",
                    "-12Cl2(2b-2a)+4Cl2(pi-4a)-12Cl2(pi-2b)-18Cl2(pi+2a)+7Cl2(4a) = 0, "
                    "tan a = 1/sqrt2, tan b = sqrt8+sqrt3",
                    conj_1_4, IdentityStatus::conjectural));
  c.push_back(line("theorem-1",
                   "sin(a) = tan(b/2): Cl2(pi-2b)-2Cl2(b)-2Cl2(pi-b)+2Cl2(a)+2Cl2(pi-a)+2Cl2(b-a)-2Cl2(pi-a-b) = 0",
                   "t", 0.01, 0.99, theorem_1));
  c.push_back(masses("prop-1",
                     "2Cl2(2g+2pa-pi)+2Cl2(2g+2p-pi)+Cl2(2pa-4p)-2Cl2(2g-2p+2pa-pi)+2Cl2(pi-2g)+Cl2(4p)"
                     "-Cl2(2pa)-4Cl2(2p) = 0",
                     prop_1));
  c.push_back(masses("prop-2",
                     "2Cl2(2p)-4Cl2(2pb)+Cl2(4pb)+2Cl2(2pb-2p)-2Cl2(2pa-2p)+Cl2(2pa-4p)+2Cl2(2pa+2pb-2p)"
                     "-Cl2(2pa+4pb-4p) = 0",
                     prop_2));
  c.push_back(line("duplication", "Cl2(2x) = 2Cl2(x) - 2Cl2(pi-x)", "x", -6.28, 6.28, duplication));
  c.push_back(masses("q-relations", "q1 = 2q5-2q8, q2 = 2q9-2q4, q3 = q6, 2q4+q7-2q8-2q10+2q11-2q12+2q13 = 0",
                     q_relations));
  c.push_back(masses("i1-plus-i2", "I1 + I2 = 0 (Clausen brackets)", i1_plus_i2));
  c.push_back(masses("r-relations", "r2=r9, r5=r11, r4=-r13, r1=r15, r8=-r17, r6=r18", r_relations));
  c.push_back(masses("rs-relations",
                     "-2r10-2r11-r14+2r15-2r19-s1+s6+4s8=0, r3=s4, r7=-s2, r9=s3, r12=-s7, r16=s5, r18=s8",
                     rs_relations));
  c.push_back(masses("angle-relations", "angle definitions and the seven linear angle identities (mod 2pi)",
                     angle_relations));
  c.push_back(masses("tan-form-r5-r11", "tangent form of r5 = r11", tan_form));
  c.push_back(fixed("broadhurst-c11", "C(1,1) = 4 sqrt2 (Cl2(4a) - Cl2(2a)), sin a = 1/3", broadhurst_c11));
  c.push_back(masses("prop1-T-checks", "T1 = T2 = T3 = 1", prop1_t_checks));
  c.push_back(masses("prop2-log-checks", "the three logarithms in d f vanish", prop2_log_checks));
  c.push_back(line("lewin-1.1", "Li2(x) + Li2(-x) = Li2(x^2)/2", "x", 0.001, 0.999, lewin_1_1));
  c.push_back(line("lewin-1.2", "Li2(x) + Li2(-x/(1-x)) = -log(1-x)^2/2", "x", 0.001, 0.999, lewin_1_2));
  c.push_back(line("lewin-1.3", "Li2(1/(1+x)) - Li2(-x) = pi^2/6 - log(1+x) log((1+x)/x^2)/2", "x", 0.001, 0.999,
                   lewin_1_3));
  {
    IdentitySpec abel{"lewin-1.4",
                      "Li2(x/(1-x) y/(1-y)) = Li2(x/(1-y)) + Li2(y/(1-x)) - Li2(x) - Li2(y) - log(1-x) log(1-y)",
                      IdentityStatus::proven,
                      {{"x", "(0, 1), x + y < 1"}, {"y", "(0, 1), x + y < 1"}},
                      Sampling::abel_pair,
                      0,
                      0,
                      lewin_1_4};
    c.push_back(std::move(abel));
  }
  c.push_back(line("lewin-1.5", "Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x)", "x", 0.001, 0.999, lewin_1_5));
  c.push_back(line("harmonic-closed-form",
                   "sum H_n z^(2n+1)/(2n+1) = (log(1-z)^2/2 - log(1+z)^2/2 + log2 log((1-z)/(1+z)) "
                   "+ Li2((1+z)/2) - Li2((1-z)/2))/2, real z and z = -i/sqrt8",
                   "z", 0.001, 0.999, harmonic_closed_form));
  c.push_back(line("harmonic-gf", "sum H_n x^(2n) = -log(1-x^2)/(1-x^2)", "x", 0.001, 0.999, harmonic_gf));
  c.push_back(fixed("chain-substitutions", "x/(1-x) = u^2, y/(1-y) = 1, x/(1-y) = 1-z, y/(1-x) = 1/(1+z), |u| = 1",
                    chain("substitutions")));
  c.push_back(fixed("chain-2.1", "Li2(u^2) = Li2(1-z) + Li2(1/(1+z)) - Li2(x) - Li2(1/2) + log2 log(1-x)",
                    chain("2.1")));
  c.push_back(fixed("chain-2.2", "Li2(1-z) = -Li2(z) + pi^2/6 - log(z) log(1-z)", chain("2.2")));
  c.push_back(fixed("chain-2.3", "Li2(1/(1+z)) = Li2(-z) + pi^2/6 - log(1+z) log((1+z)/z^2)/2", chain("2.3")));
  c.push_back(fixed("chain-2.4", "sum of 2.1, 2.2 and 2.3", chain("2.4")));
  c.push_back(fixed("chain-2.5", "Li2(x) + Li2(-u^2) = -log(1-x)^2/2", chain("2.5")));
  c.push_back(fixed("chain-2.6", "Li2(u^2) + Li2(-u^2) = Li2(u^4)/2", chain("2.6")));
  c.push_back(fixed("chain-2.7", "Li2(u^4) = 2Li2(u^2) - 2Li2(x) - log(1-x)^2", chain("2.7")));
  c.push_back(fixed("chain-2.8", "sum of 2.4 and 2.7", chain("2.8")));
  c.push_back(fixed("chain-2.9", "imaginary part of 2.8", chain("2.9")));
  c.push_back(fixed("chain-head", "Im(Li2(u^4) - Li2(u^2)) = Cl2(4a) - Cl2(2a), sin a = 1/3", chain("head")));
  c.push_back(fixed("chain-z-series", "(Li2(conj z) - Li2(z))/i = sum (-1/8)^n/(2n+1)^2 / sqrt2", chain("z-series")));
  c.push_back(fixed("chain-x-series",
                    "(Li2(x) - Li2(conj x))/(2i) = sum H_n (-1/8)^n/(2n+1)/sqrt8 + a log sqrt(9/8) "
                    "+ log2/sqrt8 sum (-1/8)^n/(2n+1)",
                    chain("x-series")));
  c.push_back(fixed("broadhurst-series",
                    "4 sqrt2 (Cl2(4a) - Cl2(2a)) = sum (-1/8)^n (1/(n+1/2))(1/(n+1/2) - 3 log2) "
                    "- 3 sum (-1/8)^n H_n/(n+1/2)",
                    broadhurst_series_identity));
  c.push_back(fixed("alpha-conventions", "2 atan(1/sqrt2) = pi/2 - asin(1/3)", alpha_conventions));
  return c;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

const std::vector<IdentitySpec>& catalog() {
  static const std::vector<IdentitySpec> c = build_catalog();
  return c;
}

const IdentitySpec& find_identity(std::string_view name) {
  for (const IdentitySpec& s : catalog()) {
    if (s.name == name) return s;
  }
  throw DomainError("unknown identity '" + std::string(name) + "'");
}

std::vector<std::vector<Real>> sample_points(const IdentitySpec& spec, int count, std::uint64_t seed,
                                             const PrecisionCtx& ctx) {
  if (spec.sampling == Sampling::fixed) return {{}};
  if (count < 1) throw DomainError("sample count must be positive");
  std::mt19937_64 rng(seed ^ fnv1a(spec.name));
  constexpr double margin = 1e-3;
  std::vector<std::vector<Real>> pts;
  while (static_cast<int>(pts.size()) < count) {
    switch (spec.sampling) {
      case Sampling::interval: {
        const double x = spec.lo + (spec.hi - spec.lo) * unit(rng);
        pts.push_back({Real(x, ctx)});
        break;
      }
      case Sampling::quarter_disk: {
        const double a = margin + (2.0 - 2 * margin) * unit(rng);
        const double b = margin + (2.0 - 2 * margin) * unit(rng);
        if (a * a + b * b < 4.0 - margin) pts.push_back({Real(a, ctx), Real(b, ctx)});
        break;
      }
      case Sampling::abel_pair: {
        const double x = margin + (1.0 - 2 * margin) * unit(rng);
        const double y = margin + (1.0 - 2 * margin) * unit(rng);
        if (x + y < 1.0 - margin) pts.push_back({Real(x, ctx), Real(y, ctx)});
        break;
      }
      case Sampling::fixed: break;
    }
  }
  return pts;
}

std::vector<ClausenValue> conj14_values(const PrecisionCtx& ctx) {
  const ConjAngles k(ctx);
  const Real& a = k.alpha;
  const Real& b = k.beta;
  return {make_clausen_value("c1", "2*beta-2*alpha", 2L * b - 2L * a, ctx),
          make_clausen_value("c2", "pi-4*alpha", k.pi - 4L * a, ctx),
          make_clausen_value("c3", "pi-2*beta", k.pi - 2L * b, ctx),
          make_clausen_value("c4", "pi+2*alpha", k.pi + 2L * a, ctx),
          make_clausen_value("c5", "4*alpha", 4L * a, ctx)};
}

Real pass_threshold(const PrecisionCtx& ctx) { return pow10(-(ctx.digits() - 10), ctx); }

IdentityReport verify(std::string_view name, int sample_count, std::uint64_t seed, const PrecisionCtx& ctx) {
  const IdentitySpec& spec = find_identity(name);
  const auto points = sample_points(spec, sample_count, seed, ctx);
  IdentityReport rep;
  rep.name = spec.name;
  rep.status = spec.status;
  rep.digits = ctx.digits();
  rep.max_residual = Real(ctx);
  for (const auto& p : points) {
    rep.max_residual = max(rep.max_residual, abs(spec.residual(p, ctx)).at(ctx));
  }
  rep.samples = static_cast<int>(points.size());
  rep.pass = rep.max_residual < pass_threshold(ctx);
  return rep;
}

}  // namespace tetra
