#pragma once

#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace zerogeo {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Exact degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// Dense polynomial with ascending coefficients and an explicit ambient degree n.
class Polynomial {
 public:
  Polynomial();  // zero polynomial, n = 0
  explicit Polynomial(std::vector<cplx> coeffs);
  Polynomial(std::vector<cplx> coeffs, int nominal_degree);

  static Polynomial zero(int n);
  static Polynomial monomial(int n, int k, cplx c = 1.0);
  static Polynomial from_real(const std::vector<double>& coeffs);
  // lead * prod (z - r_i), nominal degree defaults to number of roots
  static Polynomial from_roots(const std::vector<cplx>& roots, cplx lead = 1.0, int nominal_degree = -1);

  int nominal_degree() const { return static_cast<int>(c_.size()) - 1; }
  int exact_degree() const;
  bool is_zero() const { return exact_degree() == kZeroDegree; }

  const std::vector<cplx>& coeffs() const { return c_; }
  cplx operator[](int k) const { return c_[k]; }
  cplx leading() const;

  double max_abs() const;
  double norm1() const;

  // same coefficients in a larger ambient space, or a smaller one when the dropped tail is zero
  Polynomial with_nominal(int n) const;

 private:
  std::vector<cplx> c_;
};

// (n, lambda) with 0 <= lambda <= 2 pi / n
class LambdaParam {
 public:
  LambdaParam(int n, double lambda);
  int n() const { return n_; }
  double lambda() const { return lambda_; }
  double endpoint() const { return kTwoPi / n_; }
  bool is_zero() const { return lambda_ == 0.0; }
  bool at_endpoint() const;
  void require_open_right() const;   // OutOfRange unless lambda < 2 pi / n
  void require_interior() const;     // OutOfRange unless 0 < lambda < 2 pi / n

 private:
  int n_;
  double lambda_;
};

bool lambda_is_endpoint(int n, double lambda);

cplx evaluate(const Polynomial& p, cplx z);
// value and derivative in one pass
void evaluate_with_derivative(const Polynomial& p, cplx z, cplx& value, cplx& deriv);

Polynomial n_inverse(const Polynomial& p);
Polynomial rotate(const Polynomial& p, double angle);  // coeff_k * e^{i k angle}
Polynomial rotate_plus(const Polynomial& p, const LambdaParam& lp);
Polynomial rotate_minus(const Polynomial& p, const LambdaParam& lp);
Polynomial hadamard(const Polynomial& f, const Polynomial& g);
Polynomial scale_argument(const Polynomial& p, cplx c);

// c with arg in [0, pi) and n_inverse(p) = c^2 p
cplx self_inversive_phase(const Polynomial& p, double tol = 1e-10);
bool is_self_inversive_up_to_phase(const Polynomial& p, double tol = 1e-10);
// c_p * p, which is n-self-inversive
Polynomial normalize_phase(const Polynomial& p, double tol = 1e-10);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(cplx s, const Polynomial& p);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);

// max_k |a_k - b_k| / max(max|a|, max|b|, tiny); nominal degrees may differ
double rel_diff(const Polynomial& a, const Polynomial& b);
double abs_diff(const Polynomial& a, const Polynomial& b);

}  // namespace zerogeo
