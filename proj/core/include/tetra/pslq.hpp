#pragma once

// Integer relation detection (PSLQ, gamma = sqrt(4/3)).

#include <cstdint>
#include <string>
#include <vector>

#include "tetra/mp.hpp"

namespace tetra {

struct RelationResult {
  enum class Status { found, none_found };

  Status status = Status::none_found;
  /// Canonical: gcd 1, first nonzero entry positive. Empty unless found.
  std::vector<std::int64_t> coeffs;
  /// |sum coeffs_i x_i| on the caller's values (found only).
  Real residual;
  /// No relation of Euclidean norm below this exists (none_found only).
  Real exclusion_bound;
  int iterations = 0;
};

/// The iteration ran out of precision (integer entries too large, or the
/// iteration cap hit) before reaching either verdict.
class PslqPrecisionError : public PrecisionError {
 public:
  PslqPrecisionError(const std::string& what, Real bound)
      : PrecisionError(what), bound_(std::move(bound)) {}
  /// Exclusion bound reached before giving up.
  const Real& bound() const { return bound_; }

 private:
  Real bound_;
};

/// 10^-floor(0.7 digits): |y_j| below this on the normalized vector counts as a relation.
Real detection_threshold(const PrecisionCtx& ctx);

/// Requires at least two values, all nonzero. Returns a relation, or
/// none_found once no relation with norm < max_norm can exist.
RelationResult find_relation(const std::vector<Real>& xs, const Real& max_norm, const PrecisionCtx& ctx);

/// |sum coeffs_i x_i|, accumulated at the context's precision.
Real check_relation(const std::vector<std::int64_t>& coeffs, const std::vector<Real>& xs, const PrecisionCtx& ctx);

/// gcd 1 and first nonzero entry positive. All-zero input is returned as is.
std::vector<std::int64_t> canonicalize(std::vector<std::int64_t> coeffs);

}  // namespace tetra
