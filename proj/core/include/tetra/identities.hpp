#pragma once

// Catalog of Clausen / dilogarithm identities with residual evaluators.
// Every residual is LHS - RHS moved to one side; a correct identity gives 0.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tetra/feynman.hpp"
#include "tetra/mp.hpp"

namespace tetra {

enum class IdentityStatus { proven, conjectural };

/// How parameter points are drawn.
enum class Sampling {
  fixed,         ///< no parameters; one evaluation
  interval,      ///< one parameter uniform in (lo, hi)
  quarter_disk,  ///< (a, b) uniform in a, b > 0, a^2 + b^2 < 4, margins 1e-3
  abel_pair,     ///< (x, y) uniform in x, y in (0, 1), x + y < 1, margins 1e-3
};

struct IdentityParameter {
  std::string name;
  std::string domain;
};

using ResidualFn = std::function<Real(std::span<const Real> params, const PrecisionCtx& ctx)>;

struct IdentitySpec {
  std::string name;
  std::string statement;
  IdentityStatus status = IdentityStatus::proven;
  std::vector<IdentityParameter> parameters;
  Sampling sampling = Sampling::fixed;
  double lo = 0.0;  ///< interval bounds (Sampling::interval)
  double hi = 0.0;
  ResidualFn residual;
};

struct IdentityReport {
  std::string name;
  IdentityStatus status = IdentityStatus::proven;
  int samples = 0;
  Real max_residual;
  int digits = 0;
  bool pass = false;
};

/// Stable, ordered catalog.
const std::vector<IdentitySpec>& catalog();
/// Throws DomainError for unknown names.
const IdentitySpec& find_identity(std::string_view name);

/// Deterministic parameter points for a spec. Sampling::fixed yields one
/// empty point regardless of `count`.
std::vector<std::vector<Real>> sample_points(const IdentitySpec& spec, int count, std::uint64_t seed,
                                             const PrecisionCtx& ctx);

/// Max |residual| over the sampled points; pass iff < 10^-(digits-10).
IdentityReport verify(std::string_view name, int sample_count, std::uint64_t seed, const PrecisionCtx& ctx);

/// Pass threshold 10^-(digits-10).
Real pass_threshold(const PrecisionCtx& ctx);

/// Cl2(2b-2a), Cl2(pi-4a), Cl2(pi-2b), Cl2(pi+2a), Cl2(4a) with
/// tan a = 1/sqrt2, tan b = sqrt8 + sqrt3.
std::vector<ClausenValue> conj14_values(const PrecisionCtx& ctx);

struct SeriesValue {
  Real value;
  Real tail_bound;  ///< |limit - value| <= tail_bound
};

/// sum_{n<terms} (-1/8)^n (1/(n+1/2)) (1/(n+1/2) - 3 log 2)
///   - 3 sum_{1<=n<terms} (-1/8)^n H_n/(n+1/2).
SeriesValue broadhurst_series(const PrecisionCtx& ctx, int terms);

/// 4 sqrt(2) (Cl2(4 alpha) - Cl2(2 alpha)) with sin(alpha) = 1/3; equals C(1, 1).
Real broadhurst_constant(const PrecisionCtx& ctx);

/// Fixed constants of the dilogarithm chain: x = (1 + i/sqrt(8))/2, y = 1/2,
/// u = (sqrt(8) + i)/3, z = -i/sqrt(8).
struct ChainConstants {
  Complex x, y, u, z;
};
ChainConstants chain_constants(const PrecisionCtx& ctx);

struct ChainReport {
  std::vector<NamedResidual> steps;  ///< "substitutions", "2.1" .. "2.9", "z-series", "x-series", "head"
  Real max_residual;
};

/// Residual of one chain step by name (see ChainReport::steps).
Real chain_step(std::string_view step, const PrecisionCtx& ctx);
ChainReport appendix_chain(const PrecisionCtx& ctx);

/// sum_{n>=1} H_n z^(2n+1)/(2n+1) by direct summation, |z| < 1.
Complex harmonic_odd_series(const Complex& z, const PrecisionCtx& ctx);
/// Closed form of the same sum through Li2((1+-z)/2).
Complex harmonic_odd_closed(const Complex& z, const PrecisionCtx& ctx);

}  // namespace tetra
