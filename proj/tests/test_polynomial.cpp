#include <random>

#include "doctest.h"
#include "zerogeo/error.hpp"
#include "zerogeo/polynomial.hpp"
#include "zerogeo/qconv.hpp"

using namespace zerogeo;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  std::vector<cplx> c(n + 1);
  for (auto& a : c) a = cplx(g(rng), g(rng));
  return Polynomial(c);
}

// Horner-free reference: sum a_k z^k with explicit powers
cplx naive_eval(const Polynomial& p, cplx z) {
  cplx s = 0.0;
  for (int k = 0; k <= p.nominal_degree(); ++k) s += p[k] * std::pow(z, k);
  return s;
}

}  // namespace

TEST_CASE("evaluate") {
  Polynomial p = Polynomial::from_real({1, 0, 1});
  CHECK(std::abs(evaluate(p, cplx(0, 1))) < 1e-15);
  CHECK(evaluate(Polynomial::zero(4), cplx(0.3, 2)) == cplx(0.0));
  const double lam = 0.7;
  Polynomial q = q_extremal(3, lam);
  for (int j = 1; j <= 3; ++j) {
    cplx root = -std::polar(1.0, (2.0 * j - 4) * lam / 2);
    CHECK(std::abs(evaluate(q, root)) < 1e-14);
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    Polynomial r = random_poly(rng, 7);
    cplx z(0.3 * t - 2, 0.1 * t);
    CHECK(std::abs(evaluate(r, z) - naive_eval(r, z)) <= 1e-11 * (1 + std::abs(naive_eval(r, z))));
  }
}

TEST_CASE("polynomial construction and degrees") {
  CHECK_THROWS_AS(Polynomial(std::vector<cplx>{1, 2}, 3), Error);
  Polynomial p(std::vector<cplx>{1, 2, 0, 0}, 3);
  CHECK(p.nominal_degree() == 3);
  CHECK(p.exact_degree() == 1);
  CHECK(Polynomial::zero(3).exact_degree() == kZeroDegree);
  Polynomial r = Polynomial::from_roots({cplx(1), cplx(-2)});
  CHECK(rel_diff(r, Polynomial::from_real({-2, 1, 1})) < 1e-15);
}

TEST_CASE("n_inverse") {
  Polynomial zn = Polynomial::monomial(5, 5);
  CHECK(rel_diff(n_inverse(zn), Polynomial::monomial(5, 0)) == 0.0);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    Polynomial p = random_poly(rng, 1 + t % 9);
    CHECK(abs_diff(n_inverse(n_inverse(p)), p) == 0.0);
  }
  for (int n = 1; n <= 9; ++n) {
    Polynomial q = q_extremal(n, 0.37 * kTwoPi / n);
    CHECK(rel_diff(n_inverse(q), q) < 1e-15);
  }
  // z^n conj(p(1/conj z)) pointwise
  Polynomial p = random_poly(rng, 6);
  cplx z(0.4, -1.3);
  CHECK(std::abs(evaluate(n_inverse(p), z) - std::pow(z, 6) * std::conj(evaluate(p, 1.0 / std::conj(z)))) < 1e-11);
}

TEST_CASE("rotations") {
  std::mt19937_64 rng(3);
  Polynomial p = random_poly(rng, 6);
  LambdaParam zero(6, 0.0);
  CHECK(abs_diff(rotate_plus(p, zero), p) == 0.0);
  LambdaParam lp(6, 0.8);
  Polynomial zn = Polynomial::monomial(6, 6);
  CHECK(rel_diff(rotate_plus(zn, lp), Polynomial::monomial(6, 6, std::polar(1.0, 6 * 0.4))) < 1e-15);
  CHECK(rel_diff(rotate_minus(zn, lp), Polynomial::monomial(6, 6, std::polar(1.0, -6 * 0.4))) < 1e-15);
  CHECK(abs_diff(rotate_minus(rotate_plus(p, lp), lp), p) <= 1e-14 * p.max_abs());
  cplx z(0.3, 0.2);
  CHECK(std::abs(evaluate(rotate_plus(p, lp), z) - evaluate(p, std::polar(1.0, 0.4) * z)) < 1e-13);
}

TEST_CASE("hadamard") {
  std::mt19937_64 rng(4);
  Polynomial g = random_poly(rng, 5);
  Polynomial ones(std::vector<cplx>(6, cplx(1.0)));
  CHECK(abs_diff(hadamard(ones, g), g) == 0.0);
  Polynomial f = Polynomial::from_real({1, 2});
  CHECK(abs_diff(hadamard(f, f), Polynomial::from_real({1, 4})) == 0.0);
  CHECK_THROWS_AS(hadamard(f, g), Error);
}

TEST_CASE("self-inversive phase") {
  Polynomial p = Polynomial::from_real({1, 0, 0, 1});
  CHECK(std::abs(self_inversive_phase(p) - cplx(1.0)) < 1e-15);
  Polynomial q(std::vector<cplx>{cplx(0, 1), cplx(0, 1)});
  cplx c = self_inversive_phase(q);
  CHECK(std::abs(c * c - cplx(-1.0)) < 1e-15);
  CHECK(std::abs(c - cplx(0, 1)) < 1e-15);
  CHECK_THROWS_AS(self_inversive_phase(Polynomial::from_real({1, 2})), Error);
  try {
    self_inversive_phase(Polynomial::from_real({1, 2}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
  // random polynomials with roots on the circle, times a random unimodular constant
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, kTwoPi);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + t % 8;
    std::vector<cplx> r;
    for (int k = 0; k < n; ++k) r.push_back(std::polar(1.0, u(rng)));
    Polynomial s = Polynomial::from_roots(r, std::polar(2.5, u(rng)));
    cplx cs = self_inversive_phase(s);
    CHECK(std::arg(cs) >= 0.0);
    CHECK(std::arg(cs) < kPi);
    CHECK(rel_diff(n_inverse(s), (cs * cs) * s) < 1e-12);
    Polynomial ns = normalize_phase(s);
    CHECK(rel_diff(n_inverse(ns), ns) < 1e-12);
    // boundary values of c P are real after removing e^{int/2}
    for (int j = 0; j < 64; ++j) {
      double tt = kTwoPi * j / 64;
      cplx v = std::polar(1.0, -n * tt / 2) * cs * evaluate(s, std::polar(1.0, tt));
      CHECK(std::abs(v.imag()) <= 1e-9 * s.norm1());
    }
  }
}

TEST_CASE("scale_argument") {
  std::mt19937_64 rng(6);
  Polynomial p = random_poly(rng, 4);
  CHECK(abs_diff(scale_argument(p, 1.0), p) == 0.0);
  CHECK(abs_diff(scale_argument(Polynomial::from_real({1, 1}), 2.0), Polynomial::from_real({1, 2})) == 0.0);
}

TEST_CASE("n-inverse laws") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, kTwoPi);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + t % 8;
    Polynomial P = random_poly(rng, n), Q = random_poly(rng, n);
    LambdaParam lp(n, u(rng) / n * 0.999);
    CHECK(rel_diff(n_inverse(lambda_convolve(P, Q, lp)), lambda_convolve(n_inverse(P), n_inverse(Q), lp)) <= 1e-12);
    cplx c = std::polar(1.0, u(rng));
    Polynomial lhs = n_inverse(scale_argument(P, c));
    Polynomial rhs = std::pow(std::conj(c), n) * scale_argument(n_inverse(P), c);
    CHECK(rel_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("lambda param validation") {
  CHECK_THROWS_AS(LambdaParam(0, 0.1), Error);
  CHECK_THROWS_AS(LambdaParam(3, -0.1), Error);
  CHECK_THROWS_AS(LambdaParam(3, 2.2), Error);
  LambdaParam e(3, kTwoPi / 3);
  CHECK(e.at_endpoint());
  CHECK_THROWS_AS(e.require_open_right(), Error);
}
