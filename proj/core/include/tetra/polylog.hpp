#pragma once

// Clausen function Cl2, dilogarithm Li2, and closed forms for two families of
// log-trigonometric integrals expressed through Cl2.

#include <cstdint>
#include <memory>
#include <vector>

#include "tetra/mp.hpp"

namespace tetra {

/// Cl2(theta) = -int_0^theta log|2 sin(s/2)| ds = sum_{n>=1} sin(n theta)/n^2.
///
/// theta is reduced to (-pi, pi] and by oddness to [0, pi]; the value is then
/// the term-by-term integral of
///   -log(2 sin(t/2)) = -log t + sum_{k>=1} zeta(2k)/(k (2pi)^(2k)) t^(2k),
/// which converges at least like 4^-k on [0, pi].
Real cl2(const Real& theta, const PrecisionCtx& ctx);

/// Cl2 through Im Li2(e^{i theta}). Shares no code path with cl2() beyond the
/// cached zeta ratios; used as a cross-check.
Real cl2_via_li2(const Real& theta, const PrecisionCtx& ctx);

struct PartialSum {
  Real value;
  Real tail_bound;  ///< |sum - value| <= tail_bound
};

/// Naive partial sum of sin(n theta)/n^2, n <= terms, with a summation-by-parts
/// tail bound 2/((terms+1)^2 |sin(theta/2)|). Low-precision oracle only.
PartialSum cl2_partial_sum(const Real& theta, std::int64_t terms, const PrecisionCtx& ctx);

/// zeta(2k) / (2pi)^(2k) = |B_2k| / (2 (2k)!), k >= 1, at the context's
/// precision. Served from a write-once cache shared by all threads.
Real even_zeta_ratio(int k, const PrecisionCtx& ctx);

/// Principal-branch dilogarithm. The cut is z real > 1; on the cut the value
/// is the limit from below (Im Li2(x) = -pi log x).
Complex li2(const Complex& z, const PrecisionCtx& ctx);

/// Real dilogarithm for x <= 1.
Real li2(const Real& x, const PrecisionCtx& ctx);

/// int_alpha^beta log(a cos(phi) + b sin(phi) + c) dphi, together with the two
/// auxiliary angles of the factorization
///   a cos(phi) + b sin(phi) + c = 2 sqrt(a^2+b^2) sin((delta2-phi)/2) sin((delta1+phi)/2).
struct LogTrigClosedForm {
  Real value;
  Real delta1;
  Real delta2;
};

/// Requires a^2+b^2 >= c^2, (a,b) != (0,0), and a cos + b sin + c >= 0 on
/// [alpha, beta]; violations throw DomainError.
LogTrigClosedForm log_sin_product_integral(const Real& alpha, const Real& beta, const Real& a,
                                           const Real& b, const Real& c, const PrecisionCtx& ctx);

/// int_alpha^beta log(tan(phi) - tan(delta)) dphi
///   = 1/2 {Cl2(2alpha-2delta) - Cl2(2beta-2delta) + Cl2(pi-2alpha) - Cl2(pi-2beta)}
///     - (beta - alpha) log(cos(delta)).
/// alpha, beta, delta must lie in (-pi/2, pi/2) with delta <= min(alpha, beta).
Real log_tan_integral(const Real& alpha, const Real& beta, const Real& delta, const PrecisionCtx& ctx);

}  // namespace tetra
