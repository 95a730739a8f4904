#include "tetra/quad.hpp"

#include <cmath>
#include <string>

namespace tetra {

namespace {

struct Rule {
  bool finite = true;
  Real lo;
  Real hi;
  Real half;  // (hi - lo) / 2 on finite domains
  Real half_pi;
};

// Abscissa and weight for parameter t. Returns false when the weight
// underflows (the node contributes nothing).
bool make_node(const Rule& rule, const Real& t, Node& node, Real& weight) {
  const Real s = sinh(t);
  const Real c = cosh(t);
  if (rule.finite) {
    const Real u = rule.half_pi * s;
    const Real ep = exp(u);
    const Real em = exp(-u);
    const Real e2p = sqr(ep);
    const Real e2m = sqr(em);
    // 1 + tanh(u) = 2/(1+e^{-2u}), 1 - tanh(u) = 2/(1+e^{2u}); no cancellation.
    node.from_lo = ldexp(rule.half, 1) / (e2m + 1L);
    node.to_hi = ldexp(rule.half, 1) / (e2p + 1L);
    weight = rule.half * rule.half_pi * c * 4L / sqr(ep + em);
    node.x = u.sign() < 0 ? rule.lo + node.from_lo : rule.hi - node.to_hi;
  } else {
    const Real v = exp(rule.half_pi * s);
    node.from_lo = v;
    node.to_hi = Real::with_bits(v.precision());
    node.x = rule.lo + v;
    weight = rule.half_pi * c * v;
  }
  return !weight.is_zero();
}

QuadratureResult run(const NodeIntegrand& f, const Domain& domain, const Real& tol, const PrecisionCtx& ctx,
                     bool strictly_interior) {
  if (tol <= 0L) throw DomainError("quadrature tolerance must be positive");
  if (tol < pow10(-(ctx.digits() - 5), ctx)) {
    throw PrecisionError("quadrature tolerance " + tol.to_string(6) + " is below 1e-" +
                         std::to_string(ctx.digits() - 5) + " for " + std::to_string(ctx.digits()) +
                         " digits");
  }

  const mpfr_prec_t wp = ctx.bits() + 8;
  Rule rule;
  rule.half_pi = ldexp(const_pi(ctx).at_bits(wp), -1);
  bool negate = false;
  if (const auto* fin = std::get_if<Finite>(&domain)) {
    rule.lo = fin->lo.at_bits(wp);
    rule.hi = fin->hi.at_bits(wp);
    if (rule.lo > rule.hi) {
      std::swap(rule.lo, rule.hi);
      negate = true;
    }
    rule.half = ldexp(rule.hi - rule.lo, -1);
  } else {
    rule.finite = false;
    rule.lo = std::get<SemiInfinite>(domain).lo.at_bits(wp);
  }

  const Real floor_estimate = pow10(-(ctx.working_digits() - 2), ctx);
  if (rule.finite && rule.half.is_zero()) {
    return {Real(ctx), floor_estimate, 0, 0};
  }

  // Far enough that node offsets fall below 10^-(2W+10): the weight times an
  // x^{-1/2} endpoint singularity is then below 10^-W.
  const double w_digits = ctx.working_digits();
  const double tmax = std::asinh(2.0 / M_PI * (2.0 * w_digits + 10.0) * std::log(10.0));

  std::int64_t evaluations = 0;
  Real total = Real::with_bits(wp);  // sum of weight * f over all nodes so far
  Node node;
  Real weight;

  auto accumulate = [&](const Real& t) {
    if (!make_node(rule, t, node, weight)) return;
    if (strictly_interior) {
      if (node.x <= rule.lo || (rule.finite && node.x >= rule.hi)) return;
    }
    Real fx;
    try {
      fx = f(node);
    } catch (const Error& e) {
      QuadratureResult partial{total.at(ctx), Real(ctx), evaluations, 0};
      throw QuadratureError("integrand evaluation failed at x = " + node.x.to_string(20) + ": " + e.what(),
                            partial);
    }
    ++evaluations;
    total += weight * fx;
  };

  // Level 0: integer t.
  const long kmax = static_cast<long>(std::floor(tmax));
  for (long k = -kmax; k <= kmax; ++k) accumulate(Real::with_bits(wp) + k);
  Real h = Real::with_bits(wp) + 1L;
  Real previous = total * h;

  QuadratureResult best{previous.at(ctx), Real(ctx), evaluations, 0};
  for (int level = 1; level <= kMaxQuadLevels; ++level) {
    h = ldexp(h, -1);
    // New nodes at odd multiples of h.
    const long jmax = static_cast<long>(std::floor(tmax * std::ldexp(1.0, level)));
    for (long j = 1; j <= jmax; j += 2) {
      const Real t = h * j;
      accumulate(t);
      accumulate(-t);
    }
    const Real current = total * h;
    const Real diff = abs(current - previous);
    best = {current.at(ctx), max(diff, floor_estimate).at(ctx), evaluations, level};
    if (negate) best.value = -best.value;
    if (level >= 3 && diff * 2L < tol) return best;
    previous = current;
  }
  throw QuadratureError("quadrature did not converge after " + std::to_string(kMaxQuadLevels) +
                            " level doublings (estimate " + best.error_estimate.to_string(6) + ")",
                        best);
}

}  // namespace

QuadratureResult integrate(const Integrand& f, const Domain& domain, const Real& tol, const PrecisionCtx& ctx) {
  return run([&f](const Node& n) { return f(n.x); }, domain, tol, ctx, true);
}

QuadratureResult integrate_nodes(const NodeIntegrand& f, const Domain& domain, const Real& tol,
                                 const PrecisionCtx& ctx) {
  return run(f, domain, tol, ctx, false);
}

}  // namespace tetra
