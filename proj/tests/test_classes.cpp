#include <random>

#include "doctest.h"
#include "zerogeo/classes.hpp"
#include "zerogeo/error.hpp"
#include "zerogeo/qconv.hpp"

using namespace zerogeo;

namespace {

Polynomial random_inside(std::mt19937_64& rng, int n, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> roots;
  for (int k = 0; k < n; ++k) roots.push_back(std::polar(rmax * std::sqrt(u(rng)), kTwoPi * u(rng)));
  return Polynomial::from_roots(roots, std::polar(1.0, kTwoPi * u(rng)));
}

// direct evaluation of F_+ F*_- - F_- F*_+ at a point
cplx t_direct(const Polynomial& F, double lam, cplx z) {
  const Polynomial Fi = n_inverse(F);
  const cplx p = std::polar(1.0, lam / 2), m = std::polar(1.0, -lam / 2);
  return evaluate(F, p * z) * evaluate(Fi, m * z) - evaluate(F, m * z) * evaluate(Fi, p * z);
}

}  // namespace

TEST_CASE("in_T examples") {
  for (int n = 2; n <= 7; ++n) {
    const double lam = 0.6 * kTwoPi / n;
    LambdaParam lp(n, lam);
    Polynomial q = q_extremal(n, lam);
    CHECK(in_T(q, lp, true).member);
    CHECK_FALSE(in_T(q, lp, false).member);

    std::vector<cplx> c(n + 1, 0.0);
    c[0] = 1.0;
    c[n] = 1.0;
    Polynomial p(c);
    LambdaParam end(n, kTwoPi / n);
    CHECK(in_T(p, end, true).member);
    CHECK_FALSE(in_T(p, end, false).member);
    CHECK(in_T(p, lp, false).member);

    Polynomial b = Polynomial::from_roots(std::vector<cplx>(n, -1.0));
    auto v = in_T(b, lp, true);
    CHECK_FALSE(v.member);
    CHECK_FALSE(v.witnesses.empty());
  }
  // lambda = 0: closed is pi_n(T), open needs simple roots
  LambdaParam z0(3, 0.0);
  Polynomial dbl = Polynomial::from_roots({1.0, 1.0, -1.0});
  CHECK(in_T(dbl, z0, true).member);
  CHECK_FALSE(in_T(dbl, z0, false).member);
  CHECK_THROWS_AS(in_T(Polynomial::from_real({1, 1}), z0, true), Error);
}

TEST_CASE("in_pi_disk") {
  CHECK(in_pi_disk(Polynomial::from_roots({0.5, cplx(0, 0.9)}), false).member);
  CHECK(in_pi_disk(Polynomial::from_roots({1.0, 0.2}), true).member);
  CHECK_FALSE(in_pi_disk(Polynomial::from_roots({1.0, 0.2}), false).member);
  auto v = in_pi_disk(Polynomial::from_roots({1.5, 0.2}), true);
  CHECK_FALSE(v.member);
  CHECK(v.margin < 0);
  CHECK(std::abs(v.witnesses.at(0).value - 1.5) < 1e-10);
}

TEST_CASE("T polynomial") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 7; ++n) {
    const double lam = 0.7 * kTwoPi / n;
    LambdaParam lp(n, lam);
    // z^n
    Polynomial zn = Polynomial::monomial(n, n);
    Polynomial T = build_char_polys(zn, lp).T;
    CHECK(T.nominal_degree() == 2 * n);
    for (int j = 0; j <= 2 * n; ++j) {
      const cplx expect = j == n ? cplx(0.0, 2.0 * std::sin(n * lam / 2)) : cplx(0.0);
      CHECK(std::abs(T[j] - expect) < 1e-14);
    }
    // formula against direct evaluation
    Polynomial F = random_inside(rng, n, 1.2);
    Polynomial TF = build_char_polys(F, lp).T;
    for (double t : {0.1, 1.3, 2.9, 4.4}) {
      cplx z = std::polar(0.8 + t / 5, t);
      CHECK(std::abs(evaluate(TF, z) - t_direct(F, lam, z)) < 1e-11 * std::max(1.0, std::abs(t_direct(F, lam, z))));
    }
    // self-inversive input gives T == 0
    Polynomial S = F + n_inverse(F);
    CHECK(build_char_polys(S, lp).T.max_abs() < 1e-12 * S.max_abs() * S.max_abs());
    // T = (cP^2 - cQ^2) S
    Polynomial G = random_inside(rng, n, 0.9);
    PQSplit pq = split_pq(G);
    CharacterizationPolys cp = build_char_polys(pq.P, pq.Q, lp);
    const cplx a = self_inversive_phase(pq.P), b = self_inversive_phase(pq.Q);
    REQUIRE(cp.S.has_value());
    Polynomial rhs = (a * a - b * b) * *cp.S;
    CHECK(abs_diff(cp.T, rhs) < 1e-11 * std::max(1.0, cp.T.max_abs()));
  }
  CHECK_THROWS_AS(build_char_polys(Polynomial::monomial(2, 2), LambdaParam(2, 0.0)), Error);
}

TEST_CASE("boundary function matches T on the circle") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    LambdaParam lp(n, 0.5 * kTwoPi / n);
    Polynomial F = random_inside(rng, n, 0.9);
    Polynomial T = build_char_polys(F, lp).T;
    const double s = F.norm1();
    for (double t : {0.0, 0.7, 2.0, 5.5}) {
      cplx lhs = std::polar(1.0, -n * t) * evaluate(T, std::polar(1.0, t));
      CHECK(std::abs(lhs - cplx(0.0, 2.0 * s * s * boundary_function(F, lp, t))) < 1e-11 * s * s);
    }
  }
}

TEST_CASE("in_D_third examples") {
  for (int n = 1; n <= 7; ++n) {
    for (double frac : {0.05, 0.5, 0.95}) {
      LambdaParam lp(n, frac * kTwoPi / n);
      auto v = in_D_third(Polynomial::monomial(n, n), lp, false);
      CHECK(v.member);
      CHECK(v.method == Method::THIRD_CHAR);
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const double lam = 0.8 * kTwoPi / n;
    LambdaParam lp(n, lam);
    Polynomial q = q_extremal(n, lam);
    for (double r : {1.05, 1.5, 3.0}) {
      Polynomial F = scale_argument(q, r);
      CHECK(in_D_third(F, lp, false).member);
      CHECK(in_D_third(F, lp, true).member);
      CHECK_FALSE(in_T(F, lp, true).member);
    }
    // one root outside
    std::vector<cplx> roots(n, 0.3);
    roots[0] = 1.4;
    auto v = in_D_third(Polynomial::from_roots(roots), lp, true);
    CHECK_FALSE(v.member);
    CHECK(std::abs(v.witnesses.at(0).value - 1.4) < 1e-9);
  }
  // roots all on the circle route to the T classes
  LambdaParam lp(3, 1.0);
  auto v = in_D_third(q_extremal(3, 1.0), lp, true);
  CHECK(v.member);
  CHECK(v.method == Method::DEFINITION);
  CHECK_FALSE(in_D_third(q_extremal(3, 1.0), lp, false).member);
  // mixed ON and INSIDE roots never member
  CHECK_FALSE(in_D_third(Polynomial::from_roots({1.0, 0.1, -0.1}), LambdaParam(3, 0.1), true).member);
}

TEST_CASE("explicit sets at the ends of the lambda range") {
  LambdaParam z(3, 0.0);
  CHECK(in_D(Polynomial::from_roots({1.0, 0.5, 0.0}), z, true).member);
  CHECK_FALSE(in_D(Polynomial::from_roots({1.0, 0.5, 0.0}), z, false).member);
  CHECK(in_D(Polynomial::from_roots({1.0, -1.0, cplx(0, 1)}), z, false).member);
  CHECK_FALSE(in_D(Polynomial::from_roots({1.0, 1.0, cplx(0, 1)}), z, false).member);
  LambdaParam e(3, kTwoPi / 3);
  CHECK(in_D(Polynomial({cplx(-0.4, 0.2), 0.0, 0.0, 2.0}), e, true).member);
  CHECK_FALSE(in_D(Polynomial({cplx(-3.0, 0.0), 0.0, 0.0, 2.0}), e, true).member);
  CHECK_FALSE(in_D(Polynomial({0.1, 0.1, 0.0, 2.0}), e, true).member);
  CHECK_FALSE(in_D(Polynomial::monomial(3, 3), e, false).member);
}

TEST_CASE("extremal family") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const double lam = (0.1 + 0.8 * std::abs(u(rng)) / 2) * kTwoPi / n;
      double a = u(rng);
      if (std::abs(a) < 0.1) a = 0.5;
      const double b = u(rng);
      double th = u(rng) * 1.5;
      if (std::abs(th) < 0.05) th = 0.3;
      const cplx c = std::polar(1.0, th);
      Polynomial P = extremal_family(n, lam, a, b, c);
      Polynomial Q = q_extremal(n, lam);
      // leading coefficient c(b + a sum cot - i n a)
      cplx lead = b;
      for (int k = 1; k <= n; ++k) lead += a / std::tan((k - n - 1.0) * lam / 2);
      lead -= cplx(0.0, n * a);
      lead *= c;
      CHECK(std::abs(P[n] - lead) < 1e-10 * std::max(1.0, std::abs(lead)));
      CHECK(P.exact_degree() == n);
      CHECK(find_roots(P).all(CircleTag::ON));
      Polynomial F = P - Q;
      Polynomial lhs = F - (c * c) * n_inverse(F);
      CHECK(abs_diff(lhs, (c * c - 1.0) * Q) < 1e-10 * std::max(1.0, F.max_abs()));
      LambdaParam lp(n, lam);
      CHECK_FALSE(in_T(F, lp, true).member);
      // the member is F when a Im(c) < 0 and F* otherwise; the other one has every root outside
      const bool direct = a * c.imag() < 0;
      Polynomial M = direct ? F : n_inverse(F);
      Polynomial N = direct ? n_inverse(F) : F;
      auto vt = in_D_third(M, lp, true);
      INFO(n, " ", lam, " ", a, " ", b, " ", th, " ", vt.margin, " ", vt.witnesses.empty() ? "" : vt.witnesses[0].kind);
      CHECK(vt.member);
      CHECK(in_D_oracle(M, lp, true).member);
      CHECK(find_roots(N).min_modulus() > 1.0);
    }
  }
  CHECK_THROWS_AS(extremal_family(3, 1.0, 0.0, 1.0, cplx(0, 1)), Error);
  CHECK_THROWS_AS(extremal_family(3, 1.0, 1.0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(extremal_family(3, kTwoPi / 3, 1.0, 1.0, cplx(0, 1)), Error);
}

TEST_CASE("first and second characterizations") {
  for (int n = 1; n <= 6; ++n) {
    LambdaParam lp(n, 0.5 * kTwoPi / n);
    CHECK(in_D_first(Polynomial::monomial(n, n), lp, false).member);
    Polynomial F = scale_argument(q_extremal(n, lp.lambda()), 1.3);
    PQSplit pq = split_pq(F);
    auto v = in_D_second(pq.P, pq.Q, lp, false);
    CHECK(v.member);
    CHECK(v.method == Method::SECOND_CHAR_GRID);
  }
  Polynomial P = Polynomial::from_real({1, 0, 1});
  CHECK_THROWS_AS(in_D_second(P, P, LambdaParam(2, 0.5), true), Error);
  try {
    in_D_second(P, P, LambdaParam(2, 0.5), true);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PhaseCollision);
  }
}

TEST_CASE("characterizations agree on random instances") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  int members = 0, non = 0, compared = 0;
  ClassOptions opts;
  opts.oracle_angles = 128;
  opts.oracle_radii = 32;
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + i % 5;
    LambdaParam lp(n, u(rng) * kTwoPi / n);
    Polynomial F = random_inside(rng, n, 0.98);
    const bool closed = i % 2 == 0;
    auto third = in_D_third(F, lp, closed, opts);
    if (third.indeterminate) continue;
    ++compared;
    (third.member ? members : non)++;
    auto first = in_D_first(F, lp, closed, 64, opts);
    PQSplit pq = split_pq(F);
    auto second = in_D_second(pq.P, pq.Q, lp, closed, opts);
    auto oracle = in_D_oracle(F, lp, closed, opts);
    CHECK(first.member == third.member);
    CHECK(second.member == third.member);
    CHECK(oracle.member == third.member);
  }
  CHECK(compared > 40);
  CHECK(members > 3);
  CHECK(non > 3);
}

TEST_CASE("hermite-biehler") {
  Polynomial P = Polynomial::from_real({1, 0, 1});
  Polynomial Q = Polynomial::from_real({1, 0, -1});
  CHECK(hermite_biehler(P, Q, true));
  CHECK(hermite_biehler(P, Q, false));
  // same phase
  CHECK_THROWS_AS(hermite_biehler(P, cplx(0, 1) * Q, false), Error);
  // shared root
  Polynomial A = Polynomial::from_roots({1.0, cplx(0, 1)});
  Polynomial B = cplx(0, 1) * Polynomial::from_roots({1.0, cplx(0, -1)});
  if (std::abs(self_inversive_phase(A) - self_inversive_phase(B)) > 1e-6) CHECK_FALSE(hermite_biehler(A, B, true));
  // rotation invariance
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int rep = 0; rep < 10; ++rep) {
    const double a = u(rng);
    CHECK(hermite_biehler(rotate(P, a), rotate(Q, a), true));
  }
  CHECK_THROWS_AS(hermite_biehler(P, 2.0 * P, false), Error);
}

TEST_CASE("hermite-kakeya") {
  for (int n = 2; n <= 6; ++n) {
    LambdaParam lp(n, 0.6 * kTwoPi / n);
    Polynomial q = q_extremal(n, lp.lambda());
    Polynomial P = normalize_phase(rotate_plus(q, lp));
    Polynomial Q = normalize_phase(rotate_minus(q, lp));
    CHECK(hermite_kakeya(P, Q, false));
    // non-interspersed pair with matched phases
    Polynomial A = normalize_phase(Polynomial::from_roots({1.0, std::polar(1.0, 0.1)}));
    Polynomial B = normalize_phase(Polynomial::from_roots({std::polar(1.0, 0.2), std::polar(1.0, 0.3)}));
    CHECK_FALSE(hermite_kakeya(A, B, false));
  }
  Polynomial P = Polynomial::from_real({1, 0, 1});
  CHECK_THROWS_AS(hermite_kakeya(P, P, false), Error);
  try {
    hermite_kakeya(P, Polynomial::from_real({1, 0, -1}), false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PhaseMismatch);
  }
  // root at 0 is not on the circle
  CHECK_FALSE(hermite_kakeya(P, Polynomial({0.0, 2.0, 0.0}), false));
}

TEST_CASE("half-plane criterion") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<cplx> c(n + 1, 0.0);
    c[n] = 1.0;
    c[0] = cplx(0.3, -0.4);
    CHECK(half_plane_criterion(Polynomial(c)).holds);
    std::vector<cplx> g(n + 1);
    for (int k = 0; k <= n; ++k) g[k] = std::pow(1.1, k);
    CHECK(half_plane_criterion(Polynomial(g)).holds);
  }
  CHECK_THROWS_AS(half_plane_criterion(Polynomial::from_real({1, 0, 1})), Error);
  // large middle coefficient breaks it
  CHECK_FALSE(half_plane_criterion(Polynomial::from_real({0.1, -3, 1})).holds);
}

TEST_CASE("pre-classes") {
  for (int n = 1; n <= 6; ++n) {
    for (double frac : {0.0, 0.3, 0.9}) {
      LambdaParam lp(n, frac * kTwoPi / n);
      std::vector<cplx> c(n + 1, 0.0);
      c[0] = 1.0;
      c[n] = 1.0;
      auto v = pre_class_test(Polynomial(c), lp, PreClass::PTbar);
      CHECK(v.member);
      CHECK(v.class_label == ClassLabel::PT);
      CHECK(pre_class_test(pre_extremal(n, 1.0, 1.0), lp, PreClass::PTbar).member);
      Polynomial pe = pre_extremal(n, cplx(0.5, 1.0), 2.0);
      CHECK(pre_class_test(pe, lp, PreClass::PDbar).member);
      CHECK(pre_class_test(pe, lp, PreClass::PD).member);
      // |b| < 1 pushes the lifted roots outside
      CHECK_FALSE(pre_class_test(pre_extremal(n, 1.0, 0.5), lp, PreClass::PDbar).member);
    }
  }
}
