#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tetra/feynman.hpp"
#include "tetra/identities.hpp"
#include "tetra/polylog.hpp"
#include "tetra/pslq.hpp"

using namespace tetra;
using tetra::oracle::Rng;
using Coeffs = std::vector<std::int64_t>;

namespace {

RelationResult find(const std::vector<Real>& xs, const PrecisionCtx& ctx, long max_norm = 1000000) {
  return find_relation(xs, Real(max_norm, ctx), ctx);
}

void expect_found(const RelationResult& r, const Coeffs& want) {
  ASSERT_EQ(r.status, RelationResult::Status::found);
  EXPECT_EQ(r.coeffs, want);
}

}  // namespace

TEST(Pslq, Trivial) {
  const PrecisionCtx ctx(50);
  expect_found(find({Real(1L, ctx), rational(1, 2, ctx)}, ctx), (Coeffs{1, -2}));
}

TEST(Pslq, ClausenThirds) {
  const PrecisionCtx ctx(100);
  const Real pi = const_pi(ctx);
  expect_found(find({cl2(2L * pi / 3L, ctx), cl2(pi / 3L, ctx)}, ctx), (Coeffs{3, -2}));
}

TEST(Pslq, ConjectureVector) {
  const PrecisionCtx ctx(200);
  std::vector<Real> xs;
  for (const ClausenValue& v : conj14_values(ctx)) xs.push_back(v.value);
  const RelationResult r = find(xs, ctx);
  expect_found(r, (Coeffs{12, -4, 12, 18, -7}));
  EXPECT_LT(r.residual, detection_threshold(ctx));
}

TEST(Pslq, RPairAtPiE) {
  const PrecisionCtx ctx(100);
  const DerivedAngles g = derive(make_mass_pair(1L / const_pi(ctx), 1L / exp(Real(1L, ctx)), ctx), ctx);
  const auto r = r_values(g, ctx);
  expect_found(find({r[1].value, r[8].value}, ctx), (Coeffs{1, -1}));
}

TEST(CheckRelation, Examples) {
  const PrecisionCtx ctx(50);
  const Real pi = const_pi(ctx);
  EXPECT_TRUE(check_relation({1, -2}, {Real(1L, ctx), rational(1, 2, ctx)}, ctx).is_zero());
  EXPECT_LT(check_relation({3, -2}, {cl2(2L * pi / 3L, ctx), cl2(pi / 3L, ctx)}, ctx), pow10(-45, ctx));
  EXPECT_LT(abs(check_relation({1, 1}, {Real(1L, ctx), pi}, ctx) - (1L + pi)), pow10(-49, ctx));
  EXPECT_THROW(check_relation({1}, {Real(1L, ctx), pi}, ctx), DomainError);
}

TEST(Pslq, Preconditions) {
  const PrecisionCtx ctx(50);
  EXPECT_THROW(find({Real(1L, ctx)}, ctx), DomainError);
  EXPECT_THROW(find({Real(1L, ctx), Real(ctx)}, ctx), DomainError);
}

TEST(Canonicalize, GcdAndSign) {
  EXPECT_EQ(canonicalize({0, -4, 6, 2}), (Coeffs{0, 2, -3, -1}));
  EXPECT_EQ(canonicalize({3, 9}), (Coeffs{1, 3}));
  EXPECT_EQ(canonicalize({0, 0}), (Coeffs{0, 0}));
}

TEST(Pslq, PlantedRelationRecovery) {
  const PrecisionCtx ctx(100);
  Rng rng(40);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 8));
    Coeffs v(n);
    double norm2 = 0;
    do {
      norm2 = 0;
      for (auto& c : v) {
        c = rng.integer(-20, 20);
        norm2 += static_cast<double>(c * c);
      }
    } while (v[0] == 0 || norm2 > 2500.0);
    std::vector<Real> xs(n, Real(ctx));
    Real rest(ctx);
    for (std::size_t i = 1; i < n; ++i) {
      xs[i] = exp(Real(rng.uniform(-1, 1), ctx)) * sqrt(Real(rng.integer(2, 1000), ctx));
      rest += xs[i] * static_cast<long>(v[i]);
    }
    xs[0] = -rest / static_cast<long>(v[0]);
    if (xs[0].is_zero()) continue;
    const RelationResult r = find(xs, ctx);
    ASSERT_EQ(r.status, RelationResult::Status::found) << trial;
    EXPECT_EQ(r.coeffs, canonicalize(v)) << trial;
  }
}

TEST(Pslq, NoFalsePositives) {
  const PrecisionCtx ctx(100);
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Real> xs;
    for (int i = 0; i < 8; ++i) xs.push_back(exp(Real(rng.uniform(-2, 2), ctx)) * sqrt(Real(rng.integer(2, 10000), ctx)));
    const RelationResult r = find(xs, ctx, 10000);
    EXPECT_EQ(r.status, RelationResult::Status::none_found);
    EXPECT_GE(r.exclusion_bound, 10000L);
  }
}

TEST(Pslq, ScaleInvariance) {
  const PrecisionCtx ctx(100);
  const Real pi = const_pi(ctx);
  const std::vector<Real> xs = {cl2(pi / 3L, ctx), cl2(2L * pi / 3L, ctx), sqrt(Real(2L, ctx))};
  const RelationResult base = find(xs, ctx);
  ASSERT_EQ(base.status, RelationResult::Status::found);
  for (const Real& k : {-pi, Real(7L, ctx), exp(Real(-3L, ctx))}) {
    std::vector<Real> ys;
    for (const Real& x : xs) ys.push_back(x * k);
    EXPECT_EQ(find(ys, ctx).coeffs, base.coeffs);
  }
}

TEST(Pslq, SoundnessRecheck) {
  const PrecisionCtx ctx(60);
  const Real pi = const_pi(ctx);
  const std::vector<Real> xs = {pi, const_log2(ctx), pi + 3L * const_log2(ctx)};
  const RelationResult r = find(xs, ctx);
  ASSERT_EQ(r.status, RelationResult::Status::found);
  EXPECT_EQ(r.coeffs, (Coeffs{1, 3, -1}));
  std::vector<Real> hi;
  const PrecisionCtx up = ctx.raised(20);
  hi.push_back(const_pi(up));
  hi.push_back(const_log2(up));
  hi.push_back(hi[0] + 3L * hi[1]);
  EXPECT_LT(check_relation(r.coeffs, hi, up), detection_threshold(ctx));
}

TEST(Pslq, InsufficientPrecisionIsDistinct) {
  // Excluding norms up to 1e40 needs integer entries far beyond 64 bits.
  const PrecisionCtx ctx(300);
  Rng rng(42);
  std::vector<Real> xs;
  for (int i = 0; i < 8; ++i) xs.push_back(exp(Real(rng.uniform(-2, 2), ctx)));
  EXPECT_THROW(find_relation(xs, pow10(40, ctx), ctx), PslqPrecisionError);
}
