#include "zerogeo/herglotz.hpp"

#include <cmath>
#include <limits>

#include "zerogeo/error.hpp"

namespace zerogeo {

namespace {

cplx partial_sum(const std::vector<cplx>& a, int k, cplx z) {
  cplx v = 0.0;
  for (int j = k; j >= 0; --j) v = v * z + a[j];
  return v;
}

}  // namespace

double partial_sum_min_real(const std::vector<cplx>& coeffs, int k, double r, int samples) {
  double mn = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) mn = std::min(mn, partial_sum(coeffs, k, std::polar(r, kTwoPi * j / samples)).real());
  return mn;
}

HerglotzApproximant build_approximant(const std::vector<cplx>& coeffs, int k, double r) {
  if (k < 1) fail(ErrorCode::BadParams, "k must be positive");
  if (!(r > 0.0 && r < 1.0)) fail(ErrorCode::BadParams, "r must lie in (0, 1)");
  if (static_cast<int>(coeffs.size()) < k + 1) fail(ErrorCode::BadParams, "need at least k+1 Taylor coefficients");
  if (std::abs(coeffs[0] - 1.0) > 1e-12) fail(ErrorCode::BadParams, "f(0) must equal 1");
  HerglotzApproximant h;
  h.m = 2 * k;
  h.min_real_part = partial_sum_min_real(coeffs, k, r, 4 * h.m);
  if (!(h.min_real_part > 0.0))
    fail(ErrorCode::PositivityLost, "Re S_k(rz) <= 0 on the circle (min " + std::to_string(h.min_real_part) + "); raise k or lower r");

  std::vector<cplx> b(k + 1);
  double w = 1.0;
  for (int j = 0; j <= k; ++j) {
    b[j] = coeffs[j] * w;
    w *= r;
  }
  std::vector<cplx> p(2 * k + 1, cplx(0.0));
  for (int j = 0; j <= k; ++j) {
    p[j] += b[j];
    p[2 * k - j] += std::conj(b[j]);
  }
  h.P = Polynomial(std::move(p));

  h.weights.resize(h.m);
  cplx total = 0.0;
  for (int j = 1; j <= h.m; ++j) {
    const cplx v = evaluate(h.P, std::polar(1.0, kTwoPi * j / h.m));
    total += v;
    h.weights[j - 1] = v.real() / (2.0 * h.m);
    if (!(h.weights[j - 1] > 0.0)) fail(ErrorCode::PositivityLost, "non-positive weight");
  }
  h.boundary_sum = total.real();
  if (std::abs(total - cplx(2.0 * h.m)) > 1e-9 * 2.0 * h.m)
    fail(ErrorCode::InternalInconsistency, "boundary values do not sum to 2m");
  for (double s : h.weights) h.weight_sum += s;
  if (std::abs(h.weight_sum - 1.0) > 1e-10) fail(ErrorCode::InternalInconsistency, "weights do not sum to 1");
  return h;
}

cplx evaluate_approximant(const HerglotzApproximant& h, cplx z) {
  if (!(std::abs(z) < 1.0)) fail(ErrorCode::OutOfDomain, "approximant is defined on the open unit disk");
  if (h.m < 2 || static_cast<int>(h.weights.size()) != h.m) fail(ErrorCode::BadParams, "malformed approximant");
  cplx v = 0.0;
  for (int j = 1; j <= h.m; ++j) {
    const cplx wz = std::polar(1.0, kTwoPi * j / h.m) * z;
    v += h.weights[j - 1] * (1.0 + wz) / (1.0 - wz);
  }
  return v;
}

ScheduleStep default_schedule(int j) {
  if (j < 1 || j > 20) fail(ErrorCode::OutOfRange, "schedule index must lie in [1, 20]");
  return ScheduleStep{1 << j, 1.0 - std::pow(2.0, -j / 2.0)};
}

std::vector<cplx> cayley_coefficients(int count) {
  std::vector<cplx> a(count, cplx(2.0));
  if (count > 0) a[0] = 1.0;
  return a;
}

double sup_error(const HerglotzApproximant& h, const std::function<cplx(cplx)>& f, double radius, int samples) {
  double e = 0.0;
  for (int j = 0; j < samples; ++j) {
    const cplx z = std::polar(radius, kTwoPi * j / samples);
    e = std::max(e, std::abs(f(z) - evaluate_approximant(h, z)));
  }
  return e;
}

bool disk_limit_check(const Polynomial& p, const LambdaParam& lp, int grid) {
  const int n = lp.n();
  if (p.nominal_degree() != n) fail(ErrorCode::DegreeMismatch, "degree differs from n");
  if (grid < 2) fail(ErrorCode::BadParams, "grid too small");
  if (std::abs(p[n] - 1.0) > 1e-12) fail(ErrorCode::HypothesisViolated, "leading coefficient must be 1");
  const cplx a0 = p[0];
  if (!(std::abs(a0) < 1.0)) fail(ErrorCode::HypothesisViolated, "|a_0| < 1 required");
  const Polynomial ps = n_inverse(p);
  const double rho = 1.0 - 1.0 / grid;
  for (int j = 0; j < grid; ++j) {
    const cplx z = std::polar(rho, kTwoPi * j / grid);
    const cplx zn = std::pow(z, n);
    const cplx w = (evaluate(ps, z) - std::conj(a0) * zn) / (1.0 - std::conj(a0) * zn);
    if (!(w.real() > 0.5)) return false;
  }
  return true;
}

}  // namespace zerogeo
