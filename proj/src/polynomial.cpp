#include "zerogeo/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zerogeo/error.hpp"

namespace zerogeo {

Polynomial::Polynomial() : c_(1, cplx(0.0)) {}

Polynomial::Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, cplx(0.0));
}

Polynomial::Polynomial(std::vector<cplx> coeffs, int nominal_degree) : c_(std::move(coeffs)) {
  if (nominal_degree < 0 || static_cast<int>(c_.size()) != nominal_degree + 1)
    fail(ErrorCode::DegreeMismatch, "coefficient count " + std::to_string(c_.size()) +
                                        " does not match n = " + std::to_string(nominal_degree));
}

Polynomial Polynomial::zero(int n) {
  if (n < 0) fail(ErrorCode::BadParams, "negative degree");
  return Polynomial(std::vector<cplx>(n + 1, cplx(0.0)));
}

Polynomial Polynomial::monomial(int n, int k, cplx c) {
  if (k < 0 || k > n) fail(ErrorCode::BadParams, "monomial power outside 0..n");
  std::vector<cplx> v(n + 1, cplx(0.0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_real(const std::vector<double>& coeffs) {
  return Polynomial(std::vector<cplx>(coeffs.begin(), coeffs.end()));
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots, cplx lead, int nominal_degree) {
  const int d = static_cast<int>(roots.size());
  int n = nominal_degree < 0 ? d : nominal_degree;
  if (n < d) fail(ErrorCode::DegreeMismatch, "more roots than nominal degree");
  std::vector<cplx> c(n + 1, cplx(0.0));
  c[0] = lead;
  int deg = 0;
  for (const cplx& r : roots) {
    // multiply by (z - r)
    for (int k = deg + 1; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
    ++deg;
  }
  return Polynomial(std::move(c));
}

int Polynomial::exact_degree() const {
  for (int k = nominal_degree(); k >= 0; --k)
    if (std::abs(c_[k]) > 0.0) return k;
  return kZeroDegree;
}

cplx Polynomial::leading() const {
  int d = exact_degree();
  return d == kZeroDegree ? cplx(0.0) : c_[d];
}

double Polynomial::max_abs() const {
  double m = 0.0;
  for (const cplx& a : c_) m = std::max(m, std::abs(a));
  return m;
}

double Polynomial::norm1() const {
  double s = 0.0;
  for (const cplx& a : c_) s += std::abs(a);
  return s;
}

Polynomial Polynomial::with_nominal(int n) const {
  if (n < 0) fail(ErrorCode::BadParams, "negative degree");
  std::vector<cplx> v(n + 1, cplx(0.0));
  for (int k = 0; k <= nominal_degree(); ++k) {
    if (k <= n) {
      v[k] = c_[k];
    } else if (std::abs(c_[k]) > 0.0) {
      fail(ErrorCode::DegreeMismatch, "cannot shrink nominal degree below exact degree");
    }
  }
  return Polynomial(std::move(v));
}

bool lambda_is_endpoint(int n, double lambda) {
  const double e = kTwoPi / n;
  return std::abs(lambda - e) <= 1e-14 * e;
}

LambdaParam::LambdaParam(int n, double lambda) : n_(n), lambda_(lambda) {
  if (n < 1) fail(ErrorCode::OutOfRange, "n must be at least 1");
  if (!std::isfinite(lambda) || lambda < 0.0) fail(ErrorCode::OutOfRange, "lambda must be >= 0");
  if (lambda_is_endpoint(n, lambda)) {
    lambda_ = kTwoPi / n;
  } else if (lambda > kTwoPi / n) {
    fail(ErrorCode::OutOfRange, "lambda exceeds 2pi/n");
  }
}

bool LambdaParam::at_endpoint() const { return lambda_is_endpoint(n_, lambda_); }

void LambdaParam::require_open_right() const {
  if (at_endpoint()) fail(ErrorCode::OutOfRange, "lambda = 2pi/n is not admissible here");
}

void LambdaParam::require_interior() const {
  require_open_right();
  if (lambda_ <= 0.0) fail(ErrorCode::OutOfRange, "lambda must be positive here");
}

cplx evaluate(const Polynomial& p, cplx z) {
  const auto& c = p.coeffs();
  cplx v = 0.0;
  for (int k = p.nominal_degree(); k >= 0; --k) v = v * z + c[k];
  return v;
}

void evaluate_with_derivative(const Polynomial& p, cplx z, cplx& value, cplx& deriv) {
  const auto& c = p.coeffs();
  value = 0.0;
  deriv = 0.0;
  for (int k = p.nominal_degree(); k >= 0; --k) {
    deriv = deriv * z + value;
    value = value * z + c[k];
  }
}

Polynomial n_inverse(const Polynomial& p) {
  const int n = p.nominal_degree();
  std::vector<cplx> v(n + 1);
  for (int k = 0; k <= n; ++k) v[k] = std::conj(p[n - k]);
  return Polynomial(std::move(v));
}

Polynomial rotate(const Polynomial& p, double angle) {
  std::vector<cplx> v = p.coeffs();
  for (int k = 1; k < static_cast<int>(v.size()); ++k) v[k] *= std::polar(1.0, k * angle);
  return Polynomial(std::move(v));
}

static void check_n(const Polynomial& p, const LambdaParam& lp) {
  if (p.nominal_degree() != lp.n()) fail(ErrorCode::DegreeMismatch, "polynomial degree differs from lambda parameter n");
}

Polynomial rotate_plus(const Polynomial& p, const LambdaParam& lp) {
  check_n(p, lp);
  return rotate(p, lp.lambda() / 2);
}

Polynomial rotate_minus(const Polynomial& p, const LambdaParam& lp) {
  check_n(p, lp);
  return rotate(p, -lp.lambda() / 2);
}

Polynomial hadamard(const Polynomial& f, const Polynomial& g) {
  if (f.nominal_degree() != g.nominal_degree()) fail(ErrorCode::DegreeMismatch, "hadamard needs equal n");
  std::vector<cplx> v(f.nominal_degree() + 1);
  for (int k = 0; k <= f.nominal_degree(); ++k) v[k] = f[k] * g[k];
  return Polynomial(std::move(v));
}

Polynomial scale_argument(const Polynomial& p, cplx c) {
  std::vector<cplx> v = p.coeffs();
  cplx w = 1.0;
  for (auto& a : v) {
    a *= w;
    w *= c;
  }
  return Polynomial(std::move(v));
}

cplx self_inversive_phase(const Polynomial& p, double tol) {
  if (p.is_zero()) fail(ErrorCode::BadParams, "zero polynomial has no phase");
  const int n = p.nominal_degree();
  int m = 0;
  for (int k = 1; k <= n; ++k)
    if (std::abs(p[k]) > std::abs(p[m])) m = k;
  const double scale = std::abs(p[m]);
  const cplx c2raw = std::conj(p[n - m]) / p[m];
  if (std::abs(std::abs(c2raw) - 1.0) > tol)
    fail(ErrorCode::NotSymmetric, "anchor coefficient pair is not unimodular");
  const cplx c2 = c2raw / std::abs(c2raw);
  for (int k = 0; k <= n; ++k) {
    if (std::abs(std::conj(p[n - k]) - c2 * p[k]) > tol * scale)
      fail(ErrorCode::NotSymmetric, "coefficient pair " + std::to_string(k) + " breaks symmetry");
  }
  double t = std::arg(c2) / 2;  // (-pi/2, pi/2]
  if (t < 0) t += kPi;
  if (t >= kPi) t -= kPi;
  return std::polar(1.0, t);
}

bool is_self_inversive_up_to_phase(const Polynomial& p, double tol) {
  try {
    self_inversive_phase(p, tol);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSymmetric) return false;
    throw;
  }
}

Polynomial normalize_phase(const Polynomial& p, double tol) { return self_inversive_phase(p, tol) * p; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.nominal_degree(), b.nominal_degree());
  std::vector<cplx> v(n + 1, cplx(0.0));
  for (int k = 0; k <= a.nominal_degree(); ++k) v[k] += a[k];
  for (int k = 0; k <= b.nominal_degree(); ++k) v[k] += b[k];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + cplx(-1.0) * b; }

Polynomial operator*(cplx s, const Polynomial& p) {
  std::vector<cplx> v = p.coeffs();
  for (auto& a : v) a *= s;
  return Polynomial(std::move(v));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  const int na = a.nominal_degree(), nb = b.nominal_degree();
  std::vector<cplx> v(na + nb + 1, cplx(0.0));
  for (int i = 0; i <= na; ++i)
    for (int j = 0; j <= nb; ++j) v[i + j] += a[i] * b[j];
  return Polynomial(std::move(v));
}

Polynomial derivative(const Polynomial& p) {
  const int n = p.nominal_degree();
  if (n == 0) return Polynomial::zero(0);
  std::vector<cplx> v(n);
  for (int k = 1; k <= n; ++k) v[k - 1] = static_cast<double>(k) * p[k];
  return Polynomial(std::move(v));
}

double abs_diff(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.nominal_degree(), b.nominal_degree());
  double m = 0.0;
  for (int k = 0; k <= n; ++k) {
    cplx x = k <= a.nominal_degree() ? a[k] : cplx(0.0);
    cplx y = k <= b.nominal_degree() ? b[k] : cplx(0.0);
    m = std::max(m, std::abs(x - y));
  }
  return m;
}

double rel_diff(const Polynomial& a, const Polynomial& b) {
  const double s = std::max({a.max_abs(), b.max_abs(), 1e-300});
  return abs_diff(a, b) / s;
}

}  // namespace zerogeo
