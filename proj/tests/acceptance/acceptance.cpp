// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "tetra/feynman.hpp"
#include "tetra/identities.hpp"
#include "tetra/polylog.hpp"
#include "tetra/pslq.hpp"
#include "tetra/quad.hpp"

using namespace tetra;
using Coeffs = std::vector<std::int64_t>;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string sci(const Real& x) { return x.to_string(3); }

Verdict ac1() {
  Verdict v;
  const PrecisionCtx ctx(50);
  const MassPair m = make_mass_pair(Real(1L, ctx), Real(1L, ctx), ctx);
  const Real closed = c_closed(m, ctx);
  const Real alpha = asin(rational(1, 3, ctx));
  const Real target = 4L * sqrt(Real(2L, ctx)) * (cl2(4L * alpha, ctx) - cl2(2L * alpha, ctx));
  const Real d1 = abs(closed - target);
  const QuadratureResult direct = c_direct(m, pow10(-35, ctx), ctx);
  const Real d2 = abs(direct.value - closed);
  v.require(d1 < pow10(-40, ctx), "closed vs Broadhurst " + sci(d1));
  v.require(d2 < pow10(-30, ctx), "direct vs closed " + sci(d2));
  v.detail = "closed-Broadhurst " + sci(d1) + ", direct-closed " + sci(d2) + (v.pass ? "" : " :: " + v.detail);
  return v;
}

struct RouteStats {
  Real closed_direct, closed_step, direct_step, i12_bracket, i12_quad;
};

const RouteStats& route_stats() {
  static const RouteStats stats = [] {
    const PrecisionCtx ctx(50);
    RouteStats s{Real(ctx), Real(ctx), Real(ctx), Real(ctx), Real(ctx)};
    for (const auto& p : oracle::mass_samples(25, 2024)) {
      const MassPair m = make_mass_pair(Real(p.a, ctx), Real(p.b, ctx), ctx);
      const Real closed = c_closed(m, ctx);
      const Real direct = c_direct(m, pow10(-35, ctx), ctx).value;
      const StepReport st = stepwise(m, ctx);
      const Real step = 16L / (m.a * m.b) * (st.integrals[2].bracket + st.integrals[3].bracket);
      s.closed_direct = max(s.closed_direct, abs(closed - direct));
      s.closed_step = max(s.closed_step, max(abs(closed - step), abs(closed - st.c_quadrature)));
      s.direct_step = max(s.direct_step, abs(direct - step));
      s.i12_bracket = max(s.i12_bracket, abs(st.integrals[0].bracket + st.integrals[1].bracket));
      s.i12_quad = max(s.i12_quad, abs(st.integrals[0].quadrature.value + st.integrals[1].quadrature.value));
    }
    return s;
  }();
  return stats;
}

Verdict ac2() {
  Verdict v;
  const RouteStats& s = route_stats();
  const Real lim = pow10(-25, PrecisionCtx(50));
  v.require(s.closed_direct < lim, "closed-direct");
  v.require(s.closed_step < lim, "closed-stepwise");
  v.require(s.direct_step < lim, "direct-stepwise");
  v.detail = "max |closed-direct| " + sci(s.closed_direct) + ", |closed-stepwise| " + sci(s.closed_step) +
             ", |direct-stepwise| " + sci(s.direct_step) + " over 25 points";
  return v;
}

Verdict ac3() {
  Verdict v;
  const RouteStats& s = route_stats();
  const PrecisionCtx ctx(50);
  v.require(s.i12_bracket < pow10(-40, ctx), "bracket");
  v.require(s.i12_quad < pow10(-25, ctx), "quadrature");
  v.detail = "max |I1+I2| closed forms " + sci(s.i12_bracket) + ", quadrature " + sci(s.i12_quad);
  return v;
}

Verdict ac4() {
  Verdict v;
  const PrecisionCtx ctx(60);
  Real worst(ctx);
  std::string worst_name;
  int count = 0;
  for (const IdentitySpec& s : catalog()) {
    if (s.status != IdentityStatus::proven) continue;
    const IdentityReport r = verify(s.name, 20, 42, ctx);
    ++count;
    v.require(r.pass && r.max_residual < pow10(-50, ctx), s.name);
    if (r.max_residual >= worst) {
      worst = r.max_residual;
      worst_name = s.name;
    }
  }
  std::string conj;
  for (int d : {60, 200}) {
    const IdentityReport r = verify("conj-1.4", 20, 42, PrecisionCtx(d));
    v.require(r.pass, "conj-1.4 at " + std::to_string(d));
    conj += " conj-1.4@" + std::to_string(d) + " " + sci(r.max_residual);
  }
  v.detail = std::to_string(count) + " proven identities, worst " + worst_name + " " + sci(worst) + ";" + conj +
             (v.pass ? "" : " :: " + v.detail);
  return v;
}

Verdict ac5() {
  Verdict v;
  const PrecisionCtx ctx(200);
  const DerivedAngles g = derive(make_mass_pair(1L / const_pi(ctx), 1L / exp(Real(1L, ctx)), ctx), ctx);
  const auto r = r_values(g, ctx);
  const Real max_norm(1000000L, ctx);
  struct Pair {
    int i, j;
    Coeffs want;
  };
  const std::vector<Pair> pairs = {{2, 9, {1, -1}},  {5, 11, {1, -1}}, {4, 13, {1, 1}},
                                   {1, 15, {1, -1}}, {8, 17, {1, 1}},  {6, 18, {1, -1}}};
  int recovered = 0;
  for (const Pair& p : pairs) {
    const RelationResult res = find_relation({r[p.i - 1].value, r[p.j - 1].value}, max_norm, ctx);
    const bool ok = res.status == RelationResult::Status::found && res.coeffs == p.want;
    recovered += ok ? 1 : 0;
    v.require(ok, "r" + std::to_string(p.i) + "/r" + std::to_string(p.j));
  }
  std::vector<Real> xs;
  for (const ClausenValue& c : conj14_values(ctx)) xs.push_back(c.value);
  const RelationResult res = find_relation(xs, max_norm, ctx);
  const Coeffs want = {-12, 4, -12, -18, 7};
  Coeffs neg = want;
  for (auto& c : neg) c = -c;
  const bool conj_ok = res.status == RelationResult::Status::found && (res.coeffs == want || res.coeffs == neg);
  v.require(conj_ok, "conjecture vector");
  v.detail = std::to_string(recovered) + "/6 r-relations; conjecture vector " +
             (conj_ok ? "(-12, 4, -12, -18, 7) up to sign" : "not recovered") + (v.pass ? "" : " :: " + v.detail);
  return v;
}

Verdict ac6() {
  Verdict v;
  const PrecisionCtx ctx(50);
  const Real d = abs(broadhurst_series(ctx, 120).value - broadhurst_constant(ctx));
  v.require(d < pow10(-40, ctx), "series");
  const ChainReport chain = appendix_chain(ctx);
  Real worst(ctx);
  int steps = 0;
  for (const NamedResidual& s : chain.steps) {
    if (s.name.size() != 3 || s.name.rfind("2.", 0) != 0) continue;
    ++steps;
    worst = max(worst, s.residual);
    v.require(s.residual < pow10(-40, ctx), "chain " + s.name);
  }
  v.require(steps == 9, "expected 9 chain steps");
  v.detail = "series " + sci(d) + ", worst of " + std::to_string(steps) + " chain steps " + sci(worst) +
             (v.pass ? "" : " :: " + v.detail);
  return v;
}

Verdict ac7() {
  Verdict v;
  const PrecisionCtx ctx(50);
  const Real tol = pow10(-40, ctx);
  const Real zero(ctx), one(1L, ctx);
  struct Case {
    const char* name;
    Integrand f;
    Domain dom;
    Real exact;
  };
  const std::vector<Case> cases = {
      {"1", [&](const Real&) { return one; }, Finite{zero, one}, one},
      {"log x", [](const Real& x) { return log(x); }, Finite{zero, one}, -one},
      {"x^-1/2", [](const Real& x) { return 1L / sqrt(x); }, Finite{zero, one}, Real(2L, ctx)},
      {"w^-2", [](const Real& w) { return 1L / sqr(w); }, SemiInfinite{Real(2L, ctx)}, rational(1, 2, ctx)},
  };
  for (const Case& c : cases) {
    const QuadratureResult q = integrate(c.f, c.dom, tol, ctx);
    v.require(abs(q.value - c.exact) <= tol && q.error_estimate <= tol, std::string("quad ") + c.name);
  }
  const Real cat = abs(cl2(const_pi(ctx) / 2L, ctx) - oracle::catalan_oracle(ctx));
  v.require(cat < pow10(-45, ctx), "Catalan");
  oracle::Rng rng(7);
  Real worst(ctx);
  for (int i = 0; i < 1000; ++i) {
    const Real t(rng.uniform(-4 * 3.141592653589793, 4 * 3.141592653589793), ctx);
    worst = max(worst, abs(cl2(t, ctx) - cl2_via_li2(t, ctx)));
  }
  v.require(worst < pow10(-45, ctx), "cl2 strategies");
  v.detail = "4/4 quad oracles at 1e-40" + std::string(", Catalan ") + sci(cat) + ", cl2 strategies max " +
             sci(worst) + " over 1000 angles" + (v.pass ? "" : " :: " + v.detail);
  return v;
}

Verdict ac8() {
  Verdict v;
  const std::vector<std::string> args = {"verify", "--suite", "all", "--json"};
  std::ostringstream out1, err1, out2, err2;
  const int c1 = cli::run(args, out1, err1);
  const int c2 = cli::run(args, out2, err2);
  v.require(c1 == 0 && c2 == 0, "exit code");
  v.require(out1.str() == out2.str(), "reports differ");
  std::string schema = "unparsable";
  try {
    schema = oracle::schema_violation(nlohmann::ordered_json::parse(out1.str()));
  } catch (const std::exception& e) {
    schema = e.what();
  }
  v.require(schema.empty(), "schema: " + schema);
  v.detail = "verify --suite all exit " + std::to_string(c1) + ", " + std::to_string(out1.str().size()) +
             " byte report, identical on rerun: " + (out1.str() == out2.str() ? "yes" : "no") +
             (v.pass ? "" : " :: " + v.detail);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Verdict()> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "C(1,1) closed form and direct quadrature", ac1, 60},
      {"AC2", "route agreement at 25 seeded mass pairs", ac2, 0},
      {"AC3", "I1 + I2 = 0 at the same 25 pairs", ac3, 0},
      {"AC4", "identity suite at 60 digits", ac4, 0},
      {"AC5", "PSLQ reproduction at 200 digits", ac5, 300},
      {"AC6", "series and dilogarithm chain", ac6, 0},
      {"AC7", "quadrature and Clausen oracles", ac7, 0},
      {"AC8", "headless verify: exit, schema, determinism", ac8, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      v.pass = false;
      v.detail += " :: over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    failed += v.pass ? 0 : 1;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2f s", secs);
    std::cout << (v.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  [" << v.detail << "] (" << time_buf
              << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
