#include "zerogeo/qconv.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "zerogeo/error.hpp"

namespace zerogeo {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return std::round(r);
}

static void check_lambda(int n, double lambda) {
  if (n < 0) fail(ErrorCode::OutOfRange, "n must be nonnegative");
  if (!std::isfinite(lambda) || lambda < 0.0) fail(ErrorCode::OutOfRange, "lambda must be >= 0");
  if (n > 0 && lambda > kTwoPi / n && !lambda_is_endpoint(n, lambda))
    fail(ErrorCode::OutOfRange, "lambda exceeds 2pi/n");
}

static double q_coefficient_unchecked(int n, int k, double lambda) {
  if (k == 0 || k == n) return 1.0;
  if (lambda == 0.0) return binomial(n, k);
  if (lambda_is_endpoint(n, lambda)) return 0.0;
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r *= std::sin((n - k + j) * lambda / 2) / std::sin(j * lambda / 2);
  return r;
}

double q_coefficient(int n, int k, double lambda) {
  check_lambda(n, lambda);
  if (k < 0 || k > n) fail(ErrorCode::OutOfRange, "k outside 0..n");
  return q_coefficient_unchecked(n, k, lambda);
}

namespace {

struct TableCache {
  std::shared_mutex mu;
  std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const QCoefficientTable>> tables;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

}  // namespace

std::shared_ptr<const QCoefficientTable> q_table(int n, double lambda) {
  check_lambda(n, lambda);
  const auto key = std::make_pair(n, std::bit_cast<std::uint64_t>(lambda));
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.tables.find(key);
    if (it != c.tables.end()) return it->second;
  }
  auto t = std::make_shared<QCoefficientTable>();
  t->n = n;
  t->lambda = lambda;
  t->values.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    // palindromic: compute the shorter product and mirror
    t->values[k] = k <= n - k ? q_coefficient_unchecked(n, k, lambda) : t->values[n - k];
  }
  std::unique_lock lock(c.mu);
  if (c.tables.size() > 4096) c.tables.clear();
  auto [it, inserted] = c.tables.emplace(key, t);
  return it->second;
}

Polynomial gauss_product(int n, cplx q) {
  if (n < 0) fail(ErrorCode::BadParams, "n must be nonnegative");
  std::vector<cplx> c(n + 1, cplx(0.0));
  c[0] = 1.0;
  cplx qj = 1.0;
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k >= 1; --k) c[k] += qj * c[k - 1];
    qj *= q;
  }
  return Polynomial(std::move(c));
}

Polynomial q_extremal(int n, double lambda) {
  check_lambda(n, lambda);
  if (n < 1) fail(ErrorCode::OutOfRange, "n must be at least 1");
  std::vector<cplx> c(n + 1, cplx(0.0));
  c[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    const cplx w = std::polar(1.0, (2.0 * j - n - 1) * lambda / 2);
    for (int k = j; k >= 1; --k) c[k] += w * c[k - 1];
  }
  auto t = q_table(n, lambda);
  double scale = 0.0;
  for (double v : t->values) scale = std::max(scale, std::abs(v));
  for (int k = 0; k <= n; ++k) {
    if (std::abs(c[k] - t->values[k]) > 1e-12 * std::max(1.0, scale))
      fail(ErrorCode::InternalInconsistency, "product expansion disagrees with sine-ratio coefficient " + std::to_string(k));
  }
  std::vector<cplx> out(t->values.begin(), t->values.end());
  return Polynomial(std::move(out));
}

Polynomial pre_extremal(int n, cplx a, cplx b) {
  std::vector<cplx> c(n + 1);
  cplx w = a;
  for (int k = 0; k <= n; ++k) {
    c[k] = w;
    w *= b;
  }
  return Polynomial(std::move(c));
}

Polynomial grace_szego(const Polynomial& f, const Polynomial& g) {
  if (f.nominal_degree() != g.nominal_degree()) fail(ErrorCode::DegreeMismatch, "grace_szego needs equal n");
  const int n = f.nominal_degree();
  auto t = q_table(n, 0.0);
  std::vector<cplx> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = f[k] * g[k] / t->values[k];
  return Polynomial(std::move(c));
}

Polynomial lambda_convolve(const Polynomial& f, const Polynomial& g, const LambdaParam& lp) {
  if (f.nominal_degree() != g.nominal_degree() || f.nominal_degree() != lp.n())
    fail(ErrorCode::DegreeMismatch, "lambda_convolve needs equal n");
  lp.require_open_right();
  const int n = lp.n();
  auto t = q_table(n, lp.lambda());
  std::vector<cplx> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = f[k] * g[k] / t->values[k];
  return Polynomial(std::move(c));
}

Polynomial delta(const Polynomial& f, const LambdaParam& lp) {
  if (f.nominal_degree() != lp.n()) fail(ErrorCode::DegreeMismatch, "delta: degree differs from n");
  lp.require_open_right();
  const int n = lp.n();
  std::vector<cplx> c(n);
  if (lp.is_zero()) {
    for (int k = 0; k < n; ++k) c[k] = f[k + 1] * (static_cast<double>(k + 1) / n);
  } else {
    auto hi = q_table(n, lp.lambda());
    auto lo = q_table(n - 1, lp.lambda());
    for (int k = 0; k < n; ++k) c[k] = f[k + 1] * (lo->values[k] / hi->values[k + 1]);
  }
  return Polynomial(std::move(c));
}

Polynomial pre_lift(const Polynomial& f, const LambdaParam& lp) {
  if (f.nominal_degree() != lp.n()) fail(ErrorCode::DegreeMismatch, "pre_lift: degree differs from n");
  lp.require_open_right();
  return hadamard(f, q_extremal(lp.n(), lp.lambda()));
}

}  // namespace zerogeo
