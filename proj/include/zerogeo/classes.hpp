#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerogeo/polynomial.hpp"
#include "zerogeo/rootfind.hpp"

namespace zerogeo {

enum class ClassLabel { T_closed, T_open, D_closed, D_open, PT, PD, pi_of_domain };
enum class Method {
  DEFINITION,           // root location / separation straight from the class definition
  ENDPOINT_DEFINITION,  // lambda = 0 or 2pi/n explicit sets
  FIRST_CHAR_SAMPLED,
  SECOND_CHAR_GRID,
  THIRD_CHAR,
  GRID_ORACLE,
};

const char* to_string(ClassLabel l);
const char* to_string(Method m);

struct Witness {
  std::string kind;   // e.g. "root_outside", "zeta", "theta", "odd_root_of_T"
  cplx value = 0.0;
  double parameter = 0.0;
};

struct MembershipVerdict {
  ClassLabel class_label = ClassLabel::T_closed;
  bool member = false;
  Method method = Method::DEFINITION;
  double margin = 0.0;        // slack in the decisive inequality; negative for violations
  bool indeterminate = false; // |margin| below the configured margin tolerance
  std::vector<Witness> witnesses;
};

struct ClassOptions {
  RootOptions roots;
  double sep_tol = 1e-8;
  double margin_tol = 1e-6;
  double coeff_tol = 1e-10;
  int zeta_count = 64;
  int theta_grid = 181;
  int oracle_angles = 256;
  int oracle_radii = 64;
  int refine_iters = 40;
};

struct CharacterizationPolys {
  std::optional<Polynomial> S;
  Polynomial T;
};

struct PQSplit {
  Polynomial P, Q;
};

enum class PreClass { PTbar, PT, PDbar, PD };

// pi_n(closed or open disk): exact degree n and roots inside
MembershipVerdict in_pi_disk(const Polynomial& p, bool closed, const ClassOptions& opts = {});

MembershipVerdict in_T(const Polynomial& p, const LambdaParam& lp, bool closed, const ClassOptions& opts = {});

CharacterizationPolys build_char_polys(const Polynomial& F, const LambdaParam& lp);
CharacterizationPolys build_char_polys(const Polynomial& P, const Polynomial& Q, const LambdaParam& lp);

// Im(e^{-in lambda/2} F_+(e^{it}) conj F_-(e^{it})) / |F|_1^2
double boundary_function(const Polynomial& F, const LambdaParam& lp, double t);

MembershipVerdict in_D_third(const Polynomial& F, const LambdaParam& lp, bool closed, const ClassOptions& opts = {});
MembershipVerdict in_D_first(const Polynomial& F, const LambdaParam& lp, bool closed, int zeta_count = 64,
                             const ClassOptions& opts = {});
MembershipVerdict in_D_second(const Polynomial& P, const Polynomial& Q, const LambdaParam& lp, bool closed,
                              const ClassOptions& opts = {});
MembershipVerdict in_D_oracle(const Polynomial& F, const LambdaParam& lp, bool closed, const ClassOptions& opts = {});
// canonical decision procedure
MembershipVerdict in_D(const Polynomial& F, const LambdaParam& lp, bool closed, const ClassOptions& opts = {});

PQSplit split_pq(const Polynomial& F, cplx eta = 1.0, cplx zeta = cplx(0.0, 1.0));

bool hermite_biehler(const Polynomial& P, const Polynomial& Q, bool strict, const ClassOptions& opts = {});
bool hermite_kakeya(const Polynomial& P, const Polynomial& Q, bool strict, int x_grid = 181, const ClassOptions& opts = {});

struct HalfPlaneResult {
  bool holds = false;
  double margin = 0.0;
  double worst_angle = 0.0;
};
HalfPlaneResult half_plane_criterion(const Polynomial& f, int grid = 1024);

Polynomial extremal_family(int n, double lambda, double a, double b, cplx c);

MembershipVerdict pre_class_test(const Polynomial& f, const LambdaParam& lp, PreClass which, const ClassOptions& opts = {});

}  // namespace zerogeo
