#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zerogeo/polynomial.hpp"
#include "zerogeo/rootfind.hpp"

namespace zerogeo {

enum class DomainKind {
  UNIT_DISK_OPEN,
  UNIT_DISK_CLOSED,
  UNIT_CIRCLE,
  OMEGA,
  OMEGA_CLOSED,
  LIMACON_I,
  LIMACON_I_CLOSED,
  LIMACON_O,
  LIMACON_O_CLOSED,
  COMPLEMENT,
};

const char* to_string(DomainKind k);

struct DomainSpec {
  DomainKind kind = DomainKind::UNIT_DISK_OPEN;
  cplx tau = 1.0;
  double gamma = 0.0;
  std::shared_ptr<const DomainSpec> inner;  // COMPLEMENT only

  static DomainSpec disk(bool closed);
  static DomainSpec circle();
  static DomainSpec omega(cplx tau, double gamma, bool closed);
  static DomainSpec limacon_inner(double gamma, bool closed);
  static DomainSpec limacon_outer(double gamma, bool closed);
  static DomainSpec complement(const DomainSpec& d);

  bool closed() const;
  std::string describe() const;
};

enum class Containment { IN, OUT, BOUNDARY };
const char* to_string(Containment c);

// w = tau z / (1 + gamma z)
cplx mobius(cplx tau, double gamma, cplx z);

// signed slack of the defining inequality, positive inside
double defect(const DomainSpec& d, cplx z);

Containment contains(const DomainSpec& d, cplx z, double tol = 1e-9);
Containment contains_infinity(const DomainSpec& d);
// IN always, BOUNDARY only for closed sets
bool accepts(const DomainSpec& d, cplx z, double tol = 1e-9);

struct RootSetCheck {
  bool inside = true;
  std::optional<cplx> witness;  // first offending root; nullopt with inside=false means a root at infinity
  Containment where = Containment::IN;
};

// roots at infinity (exact degree below nominal) count against sets not containing infinity
RootSetCheck root_set_in(const Polynomial& p, const DomainSpec& d, double tol = 1e-9, const RootOptions& ro = {});

// (1 - z/alpha)^n
Polynomial counterexample_P(cplx alpha, int n);

// radius where the ray through dir meets the limacon |z| +- gamma |1+z| = 1 (gamma < 1)
double limacon_radius(double gamma, bool inner, cplx dir);

// boundary curve for plotting
std::vector<cplx> domain_boundary(const DomainSpec& d, int samples);

}  // namespace zerogeo
