#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetra/mp.hpp"

namespace tetra {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// A named Cl2 value: Cl2(angle), where `angle_expr` records how the angle is
/// built from named quantities (e.g. "2*alpha1+2*alpha2").
struct ClausenValue {
  std::string name;
  std::string angle_expr;
  Real angle;
  Real value;
};

/// prefactor * sum_i coeff_i * Cl2(angle_i), evaluated in term order.
class ClausenSum {
 public:
  struct Term {
    Rational coeff;
    Real angle;
    std::string label;
  };

  ClausenSum() = default;
  explicit ClausenSum(Real prefactor) : prefactor_(std::move(prefactor)), has_prefactor_(true) {}

  ClausenSum& add(Rational coeff, Real angle, std::string label = {});
  ClausenSum& add(std::int64_t coeff, Real angle, std::string label = {}) {
    return add(Rational{coeff, 1}, std::move(angle), std::move(label));
  }
  /// Adds coeff * Cl2(v.angle), reusing the already evaluated value.
  ClausenSum& add(std::int64_t coeff, const ClausenValue& v);

  const std::vector<Term>& terms() const { return terms_; }
  Real evaluate(const PrecisionCtx& ctx) const;
  /// "r1 - r2 + 2*r9" style rendering of the labels.
  std::string describe() const;

 private:
  struct Cached {
    bool present = false;
    Real value;
  };
  std::vector<Term> terms_;
  std::vector<Cached> cached_;
  Real prefactor_;
  bool has_prefactor_ = false;
};

/// Evaluates Cl2(angle) and bundles it with its name and angle expression.
ClausenValue make_clausen_value(std::string name, std::string angle_expr, Real angle, const PrecisionCtx& ctx);

}  // namespace tetra
