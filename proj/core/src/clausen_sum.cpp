#include "tetra/clausen_sum.hpp"

#include "tetra/polylog.hpp"

namespace tetra {

ClausenSum& ClausenSum::add(Rational coeff, Real angle, std::string label) {
  if (coeff.den == 0) throw DomainError("ClausenSum coefficient with zero denominator");
  terms_.push_back({coeff, std::move(angle), std::move(label)});
  cached_.emplace_back();
  return *this;
}

ClausenSum& ClausenSum::add(std::int64_t coeff, const ClausenValue& v) {
  terms_.push_back({Rational{coeff, 1}, v.angle, v.name});
  cached_.push_back({true, v.value});
  return *this;
}

Real ClausenSum::evaluate(const PrecisionCtx& ctx) const {
  Real sum(ctx);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    const Real v = cached_[i].present ? cached_[i].value : cl2(t.angle, ctx);
    sum += v * static_cast<long>(t.coeff.num) / static_cast<long>(t.coeff.den);
  }
  return has_prefactor_ ? (sum * prefactor_).at(ctx) : sum;
}

std::string ClausenSum::describe() const {
  std::string out;
  for (const Term& t : terms_) {
    const bool negative = (t.coeff.num < 0) != (t.coeff.den < 0);
    const std::int64_t num = t.coeff.num < 0 ? -t.coeff.num : t.coeff.num;
    const std::int64_t den = t.coeff.den < 0 ? -t.coeff.den : t.coeff.den;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (den != 1) {
      out += std::to_string(num) + "/" + std::to_string(den) + "*";
    } else if (num != 1) {
      out += std::to_string(num) + "*";
    }
    out += t.label.empty() ? "Cl2(?)" : t.label;
  }
  return out.empty() ? "0" : out;
}

ClausenValue make_clausen_value(std::string name, std::string angle_expr, Real angle, const PrecisionCtx& ctx) {
  Real value = cl2(angle, ctx);
  return {std::move(name), std::move(angle_expr), std::move(angle), std::move(value)};
}

}  // namespace tetra
