#pragma once

// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
// [lo, inf). Handles integrable endpoint singularities (logarithmic or
// algebraic) without special-casing.

#include <cstdint>
#include <functional>
#include <variant>

#include "tetra/mp.hpp"

namespace tetra {

struct Finite {
  Real lo;
  Real hi;
};

struct SemiInfinite {
  Real lo;
};

using Domain = std::variant<Finite, SemiInfinite>;

/// One abscissa with its exact distances to the endpoints. Close to an
/// endpoint `x` itself may round onto it, while `from_lo` / `to_hi` keep full
/// relative accuracy. `to_hi` is meaningless (zero) on a semi-infinite domain.
struct Node {
  Real x;
  Real from_lo;
  Real to_hi;
};

struct QuadratureResult {
  Real value;
  Real error_estimate;  ///< absolute; > 0 and <= tol on success
  std::int64_t evaluations = 0;
  int levels = 0;
};

/// Raised when the level cap is hit or the integrand fails at an interior node.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : Error(what), best_(std::move(best)) {}
  const QuadratureResult& best() const { return best_; }

 private:
  QuadratureResult best_;
};

using Integrand = std::function<Real(const Real&)>;
using NodeIntegrand = std::function<Real(const Node&)>;

inline constexpr int kMaxQuadLevels = 12;

/// Integrates f over the domain to absolute tolerance `tol`. f only ever sees
/// abscissas strictly inside the domain. Requires tol >= 10^-(digits-5).
QuadratureResult integrate(const Integrand& f, const Domain& domain, const Real& tol,
                           const PrecisionCtx& ctx);

/// Same rule, but the integrand receives endpoint offsets.
QuadratureResult integrate_nodes(const NodeIntegrand& f, const Domain& domain, const Real& tol,
                                 const PrecisionCtx& ctx);

}  // namespace tetra
