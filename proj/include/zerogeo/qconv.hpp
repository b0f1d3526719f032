#pragma once

#include <memory>
#include <vector>

#include "zerogeo/polynomial.hpp"

namespace zerogeo {

// C_0..C_n of Q_n(lambda; z)
struct QCoefficientTable {
  int n = 0;
  double lambda = 0.0;
  std::vector<double> values;
};

double binomial(int n, int k);

double q_coefficient(int n, int k, double lambda);
// cached table, shared between threads
std::shared_ptr<const QCoefficientTable> q_table(int n, double lambda);

Polynomial q_extremal(int n, double lambda);             // Q_n(lambda; z)
Polynomial gauss_product(int n, cplx q);                  // R_n(q; z)
Polynomial pre_extremal(int n, cplx a, cplx b);           // a * sum b^k z^k

Polynomial grace_szego(const Polynomial& f, const Polynomial& g);
Polynomial lambda_convolve(const Polynomial& f, const Polynomial& g, const LambdaParam& lp);
Polynomial delta(const Polynomial& f, const LambdaParam& lp);
Polynomial pre_lift(const Polynomial& f, const LambdaParam& lp);

}  // namespace zerogeo
