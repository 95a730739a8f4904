#pragma once

// The tetrahedral 3-loop vacuum integral C(a, b) with masses a, b on two
// non-adjacent lines, for a, b > 0 and a^2 + b^2 < 4.
//
// Three routes are provided:
//   c_direct  - quadrature of the defining pair of one-dimensional integrals;
//   stepwise  - the reduction to I1..I4, each evaluated both by quadrature and
//               as a Clausen bracket, with C = 16/(ab) (I3 + I4);
//   c_closed  - the eight-term Clausen closed form.

#include <array>
#include <string>
#include <vector>

#include "tetra/clausen_sum.hpp"
#include "tetra/mp.hpp"
#include "tetra/quad.hpp"

namespace tetra {

struct MassPair {
  Real a;
  Real b;
};

/// Validates a, b > 0 and a^2 + b^2 < 4, rejecting pairs within
/// 10^-(digits/2) of the boundary as ill-conditioned (DomainError).
MassPair make_mass_pair(const Real& a, const Real& b, const PrecisionCtx& ctx);

/// Every auxiliary quantity of the reduction. Indices follow the usual
/// numbering; alpha5, delta5 and delta6 do not exist.
struct DerivedAngles {
  Real a, b;
  Real c;  ///< sqrt(4 - b^2)
  Real d;  ///< sqrt(4 - a^2 - b^2)
  Real p;  ///< a + b + 2
  Real f;  ///< sqrt((2 + b)/(2 - b))
  Real u1, u2;
  Real alpha1, alpha2, alpha3, alpha4, alpha6, alpha7;
  Real delta1, delta2, delta3, delta4;
  Real delta7, delta8, delta9, delta10, delta11;
  Real phi, phi_a, phi_b;
};

struct NamedResidual {
  std::string name;
  Real residual;
};

/// Builds the angles and asserts the definition, closure and angle
/// identities (InvariantError on failure).
DerivedAngles derive(const MassPair& m, const PrecisionCtx& ctx);

/// Residuals of the defining relations (sin(alpha1) = sqrt((2-b)/(2+b)), ...)
/// and of the closure identity (4-a^2)(4-b^2) - a^2 b^2 = 4 d^2.
std::vector<NamedResidual> definition_residuals(const DerivedAngles& g, const PrecisionCtx& ctx);

/// The seven linear relations between alpha3, alpha6, delta1, delta3, delta7,
/// delta9, delta11 and phi, phi_a, phi_b. Residuals are reduced mod 2pi.
std::vector<NamedResidual> angle_identity_residuals(const DerivedAngles& g, const PrecisionCtx& ctx);

/// q1..q13 (I1, I2), r1..r19 (I3, I4) and s1..s8 (closed form), index 0 = first.
std::vector<ClausenValue> q_values(const DerivedAngles& g, const PrecisionCtx& ctx);
std::vector<ClausenValue> r_values(const DerivedAngles& g, const PrecisionCtx& ctx);
std::vector<ClausenValue> s_values(const DerivedAngles& g, const PrecisionCtx& ctx);

/// Clausen brackets, prefactors included.
ClausenSum i1_bracket(const DerivedAngles& g, const std::vector<ClausenValue>& q);
ClausenSum i2_bracket(const DerivedAngles& g, const std::vector<ClausenValue>& q);
ClausenSum i3_bracket(const DerivedAngles& g, const std::vector<ClausenValue>& r);
/// Excludes the logarithmic remainder (see i4_log_remainder).
ClausenSum i4_bracket(const DerivedAngles& g, const std::vector<ClausenValue>& r);
/// Sum of the log(cos(delta)) and constant terms produced when I4 is
/// integrated factor by factor. Vanishes identically; computed, not assumed.
Real i4_log_remainder(const DerivedAngles& g, const PrecisionCtx& ctx);

/// I1..I4 assembled directly from log_sin_product_integral / log_tan_integral.
std::array<Real, 4> lemma_integrals(const DerivedAngles& g, const PrecisionCtx& ctx);

/// Quadrature of I1..I4 in the w variable.
QuadratureResult integral_quadrature(int index, const MassPair& m, const Real& tol, const PrecisionCtx& ctx);

/// Residuals of q1 = 2q5 - 2q8, q2 = 2q9 - 2q4, q3 = q6 and of the reduced
/// form of I1 + I2 = 0.
std::vector<NamedResidual> q_relation_residuals(const std::vector<ClausenValue>& q, const PrecisionCtx& ctx);
/// r2=r9, r5=r11, r4=-r13, r1=r15, r8=-r17, r6=r18.
std::vector<NamedResidual> r_relation_residuals(const std::vector<ClausenValue>& r, const PrecisionCtx& ctx);
/// The seven relations tying r values to s values.
std::vector<NamedResidual> rs_relation_residuals(const std::vector<ClausenValue>& r,
                                                 const std::vector<ClausenValue>& s, const PrecisionCtx& ctx);
/// The tangent-form restatement of r5 = r11.
Real tan_form_residual(const DerivedAngles& g, const PrecisionCtx& ctx);

/// C(a, b) by quadrature of the defining integrals; `tol` is absolute on C.
QuadratureResult c_direct(const MassPair& m, const Real& tol, const PrecisionCtx& ctx);

/// C(a, b) = 8/(ab d) {s1 + s2 + s3 + s4 - s5 - s6 - s7 - s8}.
Real c_closed(const MassPair& m, const PrecisionCtx& ctx);

struct IntegralCheck {
  std::string name;
  Real bracket;  ///< Clausen bracket from the q / r vectors
  Real lemma;    ///< assembled from the two log-trig closed forms
  QuadratureResult quadrature;
  Real difference;  ///< max(|bracket - quadrature|, |lemma - bracket|)
  bool agrees = false;
};

struct StepReport {
  MassPair masses;
  DerivedAngles angles;
  std::array<IntegralCheck, 4> integrals;
  std::vector<ClausenValue> q, r, s;
  Real i4_log_remainder;
  Real i1_plus_i2_bracket;
  Real i1_plus_i2_quadrature;
  Real c_bracket;     ///< 16/(ab) (I3 + I4), Clausen brackets
  Real c_quadrature;  ///< 16/(ab) (I3 + I4), quadrature
  Real s_form_residual;  ///< 2d (I3 + I4) - (s1 + s2 + s3 + s4 - s5 - s6 - s7 - s8)
  Real tolerance;        ///< bracket/quadrature agreement threshold
};

/// Raised by stepwise() when a closed form disagrees with its quadrature.
class ClosedFormMismatch : public InvariantError {
 public:
  ClosedFormMismatch(std::string integral, const std::string& what)
      : InvariantError(what), integral_(std::move(integral)) {}
  const std::string& integral() const { return integral_; }

 private:
  std::string integral_;
};

/// Full reduction trace. Each closed form must match its quadrature to
/// 10^-(digits-10), otherwise ClosedFormMismatch names the integral.
StepReport stepwise(const MassPair& m, const PrecisionCtx& ctx);

}  // namespace tetra
