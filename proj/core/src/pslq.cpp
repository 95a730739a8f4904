#include "tetra/pslq.hpp"

#include <cmath>
#include <numeric>

namespace tetra {

namespace {

using i64 = std::int64_t;

class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), v_(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i) at(i, i) = 1;
  }
  i64& at(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  i64 at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<i64> v_;
};

[[noreturn]] void overflow(const Real& bound) {
  throw PslqPrecisionError("PSLQ integer entries exceed 64 bits; raise --digits", bound);
}

i64 add_mul(i64 x, i64 t, i64 y, const Real& bound) {
  i64 prod = 0;
  i64 out = 0;
  if (__builtin_mul_overflow(t, y, &prod) || __builtin_add_overflow(x, prod, &out)) overflow(bound);
  return out;
}

struct State {
  std::size_t n;
  std::vector<Real> y;
  std::vector<Real> h;  // n x (n-1), row-major
  IntMatrix b;          // columns are candidate relations
  Real bound;

  Real& H(std::size_t i, std::size_t j) { return h[i * (n - 1) + j]; }

  // Hermite-reduce row i against row j (j < i).
  void reduce(std::size_t i, std::size_t j) {
    const Real q = round(H(i, j) / H(j, j));
    if (q.is_zero()) return;
    if (q.exponent2() > 62) overflow(bound);
    const i64 t = q.to_int64();
    y[j] += y[i] * t;
    for (std::size_t k = 0; k <= j; ++k) H(i, k) -= H(j, k) * t;
    for (std::size_t k = 0; k < n; ++k) b.at(k, j) = add_mul(b.at(k, j), t, b.at(k, i), bound);
  }
};

}  // namespace

Real detection_threshold(const PrecisionCtx& ctx) {
  return pow10(-static_cast<long>(std::floor(0.7 * ctx.digits())), ctx);
}

Real check_relation(const std::vector<i64>& coeffs, const std::vector<Real>& xs, const PrecisionCtx& ctx) {
  if (coeffs.size() != xs.size()) {
    throw DomainError("relation has " + std::to_string(coeffs.size()) + " coefficients for " +
                      std::to_string(xs.size()) + " values");
  }
  Real sum(ctx);
  for (std::size_t i = 0; i < xs.size(); ++i) sum += xs[i].at(ctx) * static_cast<long>(coeffs[i]);
  return abs(sum);
}

std::vector<i64> canonicalize(std::vector<i64> coeffs) {
  i64 g = 0;
  for (i64 c : coeffs) g = std::gcd(g, c);
  if (g == 0) return coeffs;
  for (i64& c : coeffs) c /= g;
  for (i64 c : coeffs) {
    if (c == 0) continue;
    if (c < 0) {
      for (i64& x : coeffs) x = -x;
    }
    break;
  }
  return coeffs;
}

RelationResult find_relation(const std::vector<Real>& xs, const Real& max_norm, const PrecisionCtx& ctx) {
  const std::size_t n = xs.size();
  if (n < 2) throw DomainError("find_relation needs at least two values");
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i].at(ctx).is_zero()) throw DomainError("find_relation value " + std::to_string(i + 1) + " is zero");
  }
  if (max_norm <= 0L) throw DomainError("max_norm must be positive");

  const Real threshold = detection_threshold(ctx);
  const Real gamma = sqrt(rational(4, 3, ctx));
  const Real one(1L, ctx);

  Real norm2(ctx);
  for (const Real& x : xs) norm2 += sqr(x.at(ctx));
  const Real norm = sqrt(norm2);

  State st{n, {}, std::vector<Real>(n * (n - 1), Real(ctx)), IntMatrix(n), Real(ctx)};
  for (const Real& x : xs) st.y.push_back(x.at(ctx) / norm);

  // Partial norms s_j = sqrt(sum_{k >= j} y_k^2).
  std::vector<Real> s(n, Real(ctx));
  {
    Real acc(ctx);
    for (std::size_t k = n; k-- > 0;) {
      acc += sqr(st.y[k]);
      s[k] = sqrt(acc);
    }
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    st.H(j, j) = s[j + 1] / s[j];
    for (std::size_t i = j + 1; i < n; ++i) st.H(i, j) = -(st.y[i] * st.y[j]) / (s[j] * s[j + 1]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j-- > 0;) st.reduce(i, j);
  }

  auto detect = [&](int iterations, RelationResult& out) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(st.y[j]) < threshold && (best == n || abs(st.y[j]) < abs(st.y[best]))) best = j;
    }
    if (best == n) return false;
    std::vector<i64> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = st.b.at(k, best);
    c = canonicalize(std::move(c));
    const Real residual = check_relation(c, xs, ctx.raised(20));
    if (!(residual < threshold * norm)) {
      throw PslqPrecisionError("PSLQ candidate failed the re-check at " + std::to_string(ctx.digits() + 20) +
                                   " digits (residual " + residual.to_string(6) + ")",
                               st.bound);
    }
    out.status = RelationResult::Status::found;
    out.coeffs = std::move(c);
    out.residual = residual.at(ctx);
    out.iterations = iterations;
    return true;
  };

  RelationResult out;
  if (detect(0, out)) return out;

  const int cap = std::max<int>(10000, static_cast<int>(200 * n * n));
  for (int iter = 1; iter <= cap; ++iter) {
    // Exchange the row with the largest gamma^j |H_jj|.
    std::size_t m = 0;
    Real best(ctx);
    Real gpow = gamma;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const Real v = gpow * abs(st.H(j, j));
      if (v > best) {
        best = v;
        m = j;
      }
      gpow *= gamma;
    }
    std::swap(st.y[m], st.y[m + 1]);
    for (std::size_t k = 0; k + 1 < n; ++k) std::swap(st.H(m, k), st.H(m + 1, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(st.b.at(k, m), st.b.at(k, m + 1));
    if (m + 2 < n) {
      const Real t0 = sqrt(sqr(st.H(m, m)) + sqr(st.H(m, m + 1)));
      const Real t1 = st.H(m, m) / t0;
      const Real t2 = st.H(m, m + 1) / t0;
      for (std::size_t i = m; i < n; ++i) {
        const Real t3 = st.H(i, m);
        const Real t4 = st.H(i, m + 1);
        st.H(i, m) = t1 * t3 + t2 * t4;
        st.H(i, m + 1) = t1 * t4 - t2 * t3;
      }
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      for (std::size_t j = std::min(i - 1, m + 1) + 1; j-- > 0;) st.reduce(i, j);
    }

    Real hmax(ctx);
    for (std::size_t j = 0; j + 1 < n; ++j) hmax = max(hmax, abs(st.H(j, j)));
    if (!hmax.is_zero()) st.bound = one / hmax;

    if (detect(iter, out)) return out;
    if (hmax.is_zero()) {
      throw PslqPrecisionError("PSLQ diagonal vanished without a detectable relation", st.bound);
    }
    if (st.bound >= max_norm) {
      out.status = RelationResult::Status::none_found;
      out.exclusion_bound = st.bound.at(ctx);
      out.iterations = iter;
      return out;
    }
  }
  throw PslqPrecisionError("PSLQ hit the iteration cap of " + std::to_string(cap) + " (bound " +
                               st.bound.to_string(6) + ")",
                           st.bound);
}

}  // namespace tetra
