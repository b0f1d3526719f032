#pragma once

#include <vector>

#include "zerogeo/polynomial.hpp"

namespace zerogeo {

enum class CircleTag { INSIDE, ON, OUTSIDE };
const char* to_string(CircleTag t);

struct Root {
  cplx z;
  int multiplicity = 1;
  CircleTag tag = CircleTag::INSIDE;
};

struct RootSet {
  std::vector<Root> roots;
  double residual = 0.0;     // max normalized |p(root)| over simple roots
  double circle_tol = 1e-7;
  int degree = 0;            // sum of multiplicities
  int nominal_degree = 0;

  int count(CircleTag t) const;
  bool all(CircleTag t) const { return count(t) == degree; }
  bool all_simple() const;
  double max_modulus() const;
  double min_modulus() const;
  // roots repeated by multiplicity
  std::vector<cplx> flat() const;
};

struct RootOptions {
  int max_iter = 1000;
  double tol = 1e-12;
  double circle_tol = 1e-7;
};

CircleTag classify_modulus(double r, double circle_tol);

RootSet find_roots(const Polynomial& p, const RootOptions& opts = {});

// minimum circular gap between consecutive root arguments
double arg_separation(const RootSet& rs);

bool interspersed(const Polynomial& P, const Polynomial& Q, bool strict, const RootOptions& opts = {});

}  // namespace zerogeo
