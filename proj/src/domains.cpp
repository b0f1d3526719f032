#include "zerogeo/domains.hpp"

#include <algorithm>
#include <cmath>

#include "zerogeo/error.hpp"
#include "zerogeo/qconv.hpp"

namespace zerogeo {

const char* to_string(DomainKind k) {
  switch (k) {
    case DomainKind::UNIT_DISK_OPEN: return "UNIT_DISK_OPEN";
    case DomainKind::UNIT_DISK_CLOSED: return "UNIT_DISK_CLOSED";
    case DomainKind::UNIT_CIRCLE: return "UNIT_CIRCLE";
    case DomainKind::OMEGA: return "OMEGA";
    case DomainKind::OMEGA_CLOSED: return "OMEGA_CLOSED";
    case DomainKind::LIMACON_I: return "LIMACON_I";
    case DomainKind::LIMACON_I_CLOSED: return "LIMACON_I_CLOSED";
    case DomainKind::LIMACON_O: return "LIMACON_O";
    case DomainKind::LIMACON_O_CLOSED: return "LIMACON_O_CLOSED";
    case DomainKind::COMPLEMENT: return "COMPLEMENT";
  }
  return "?";
}

const char* to_string(Containment c) {
  switch (c) {
    case Containment::IN: return "IN";
    case Containment::OUT: return "OUT";
    case Containment::BOUNDARY: return "BOUNDARY";
  }
  return "?";
}

namespace {

void check_gamma(double g, bool allow_one) {
  if (!(g >= 0.0) || g > 1.0 || (!allow_one && g == 1.0))
    fail(ErrorCode::OutOfRange, allow_one ? "gamma must lie in [0, 1]" : "gamma must lie in [0, 1) for open limacons");
}

double dist_to_segment(cplx z, double a, double b) {
  const double x = std::clamp(z.real(), a, b);
  return std::abs(z - cplx(x, 0.0));
}

}  // namespace

DomainSpec DomainSpec::disk(bool closed) {
  DomainSpec d;
  d.kind = closed ? DomainKind::UNIT_DISK_CLOSED : DomainKind::UNIT_DISK_OPEN;
  return d;
}

DomainSpec DomainSpec::circle() {
  DomainSpec d;
  d.kind = DomainKind::UNIT_CIRCLE;
  return d;
}

DomainSpec DomainSpec::omega(cplx tau, double gamma, bool closed) {
  if (tau == cplx(0.0)) fail(ErrorCode::BadParams, "tau must be nonzero");
  check_gamma(gamma, true);
  DomainSpec d;
  d.kind = closed ? DomainKind::OMEGA_CLOSED : DomainKind::OMEGA;
  d.tau = tau;
  d.gamma = gamma;
  return d;
}

DomainSpec DomainSpec::limacon_inner(double gamma, bool closed) {
  check_gamma(gamma, closed);
  DomainSpec d;
  d.kind = closed ? DomainKind::LIMACON_I_CLOSED : DomainKind::LIMACON_I;
  d.gamma = gamma;
  return d;
}

DomainSpec DomainSpec::limacon_outer(double gamma, bool closed) {
  check_gamma(gamma, closed);
  DomainSpec d;
  d.kind = closed ? DomainKind::LIMACON_O_CLOSED : DomainKind::LIMACON_O;
  d.gamma = gamma;
  return d;
}

DomainSpec DomainSpec::complement(const DomainSpec& in) {
  DomainSpec d;
  d.kind = DomainKind::COMPLEMENT;
  d.inner = std::make_shared<const DomainSpec>(in);
  return d;
}

bool DomainSpec::closed() const {
  switch (kind) {
    case DomainKind::UNIT_DISK_CLOSED:
    case DomainKind::UNIT_CIRCLE:
    case DomainKind::OMEGA_CLOSED:
    case DomainKind::LIMACON_I_CLOSED:
    case DomainKind::LIMACON_O_CLOSED: return true;
    case DomainKind::COMPLEMENT: return !inner->closed();
    default: return false;
  }
}

std::string DomainSpec::describe() const {
  std::string s = to_string(kind);
  switch (kind) {
    case DomainKind::OMEGA:
    case DomainKind::OMEGA_CLOSED:
      s += "(tau=" + std::to_string(tau.real()) + "+" + std::to_string(tau.imag()) + "i,gamma=" + std::to_string(gamma) + ")";
      break;
    case DomainKind::LIMACON_I:
    case DomainKind::LIMACON_I_CLOSED:
    case DomainKind::LIMACON_O:
    case DomainKind::LIMACON_O_CLOSED: s += "(gamma=" + std::to_string(gamma) + ")"; break;
    case DomainKind::COMPLEMENT: s += "(" + inner->describe() + ")"; break;
    default: break;
  }
  return s;
}

cplx mobius(cplx tau, double gamma, cplx z) { return tau * z / (1.0 + gamma * z); }

double defect(const DomainSpec& d, cplx z) {
  switch (d.kind) {
    case DomainKind::UNIT_DISK_OPEN:
    case DomainKind::UNIT_DISK_CLOSED: return 1.0 - std::abs(z);
    case DomainKind::UNIT_CIRCLE: return -std::abs(1.0 - std::abs(z));
    case DomainKind::OMEGA:
    case DomainKind::OMEGA_CLOSED: return std::abs(d.tau - d.gamma * z) - std::abs(z);
    case DomainKind::LIMACON_I:
    case DomainKind::LIMACON_I_CLOSED:
      if (d.gamma == 1.0) return -dist_to_segment(z, -1.0, 0.0);
      return 1.0 - std::abs(z) - d.gamma * std::abs(1.0 + z);
    case DomainKind::LIMACON_O:
    case DomainKind::LIMACON_O_CLOSED:
      if (d.gamma == 1.0) return -std::abs(z - cplx(std::min(z.real(), -1.0), 0.0));
      return std::abs(z) - d.gamma * std::abs(1.0 + z) - 1.0;
    case DomainKind::COMPLEMENT: return -defect(*d.inner, z);
  }
  return 0.0;
}

Containment contains(const DomainSpec& d, cplx z, double tol) {
  if (d.kind == DomainKind::COMPLEMENT) {
    const Containment c = contains(*d.inner, z, tol);
    if (c == Containment::BOUNDARY) return c;
    return c == Containment::IN ? Containment::OUT : Containment::IN;
  }
  const double v = defect(d, z);
  // sets without interior: points on them count as IN
  if (d.kind == DomainKind::UNIT_CIRCLE || ((d.kind == DomainKind::LIMACON_I_CLOSED || d.kind == DomainKind::LIMACON_O_CLOSED) &&
                                            d.gamma == 1.0))
    return v >= -tol ? Containment::IN : Containment::OUT;
  if (std::abs(v) <= tol) return Containment::BOUNDARY;
  return v > 0 ? Containment::IN : Containment::OUT;
}

Containment contains_infinity(const DomainSpec& d) {
  switch (d.kind) {
    case DomainKind::OMEGA:
    case DomainKind::OMEGA_CLOSED: return d.gamma == 1.0 ? Containment::BOUNDARY : Containment::OUT;
    case DomainKind::LIMACON_O:
    case DomainKind::LIMACON_O_CLOSED: return Containment::IN;
    case DomainKind::COMPLEMENT: {
      const Containment c = contains_infinity(*d.inner);
      if (c == Containment::BOUNDARY) return c;
      return c == Containment::IN ? Containment::OUT : Containment::IN;
    }
    default: return Containment::OUT;
  }
}

namespace {
bool accept(const DomainSpec& d, Containment c) { return c == Containment::IN || (c == Containment::BOUNDARY && d.closed()); }
}  // namespace

bool accepts(const DomainSpec& d, cplx z, double tol) { return accept(d, contains(d, z, tol)); }

RootSetCheck root_set_in(const Polynomial& p, const DomainSpec& d, double tol, const RootOptions& ro) {
  if (p.is_zero()) fail(ErrorCode::BadParams, "zero polynomial has no root set");
  RootSetCheck res;
  if (p.exact_degree() < p.nominal_degree()) {
    const Containment c = contains_infinity(d);
    if (!accept(d, c)) {
      res.inside = false;
      res.where = c;
      return res;
    }
  }
  if (p.exact_degree() == 0) return res;
  RootSet rs = find_roots(p.with_nominal(p.exact_degree()), ro);
  for (const auto& r : rs.roots) {
    const Containment c = contains(d, r.z, tol);
    if (!accept(d, c)) {
      res.inside = false;
      res.witness = r.z;
      res.where = c;
      return res;
    }
    if (c == Containment::BOUNDARY) res.where = c;
  }
  return res;
}

Polynomial counterexample_P(cplx alpha, int n) {
  if (alpha == cplx(0.0)) fail(ErrorCode::BadParams, "alpha must be nonzero");
  if (n < 0) fail(ErrorCode::BadParams, "negative degree");
  std::vector<cplx> c(n + 1);
  const cplx q = -1.0 / alpha;
  cplx w = 1.0;
  for (int k = 0; k <= n; ++k) {
    c[k] = binomial(n, k) * w;
    w *= q;
  }
  return Polynomial(std::move(c));
}

double limacon_radius(double g, bool inner, cplx dir) {
  check_gamma(g, false);
  const cplx u = dir / std::abs(dir);
  // |z| +- g|1+z| = 1 is monotone in the radius along each ray
  auto f = [&](double r) { return inner ? r + g * std::abs(1.0 + r * u) - 1.0 : r - g * std::abs(1.0 + r * u) - 1.0; };
  double lo = inner ? 0.0 : 1.0, hi = inner ? 1.0 : (1.0 + g) / (1.0 - g) + 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<cplx> domain_boundary(const DomainSpec& d, int samples) {
  if (samples < 2) fail(ErrorCode::BadParams, "need at least two samples");
  std::vector<cplx> out;
  out.reserve(samples);
  const DomainSpec& base = d.kind == DomainKind::COMPLEMENT ? *d.inner : d;
  switch (base.kind) {
    case DomainKind::UNIT_DISK_OPEN:
    case DomainKind::UNIT_DISK_CLOSED:
    case DomainKind::UNIT_CIRCLE:
      for (int j = 0; j < samples; ++j) out.push_back(std::polar(1.0, kTwoPi * j / samples));
      break;
    case DomainKind::OMEGA:
    case DomainKind::OMEGA_CLOSED:
      for (int j = 0; j < samples; ++j) {
        const cplx z = std::polar(1.0, kTwoPi * (j + 0.5) / samples);
        if (std::abs(1.0 + base.gamma * z) < 1e-12) continue;
        out.push_back(mobius(base.tau, base.gamma, z));
      }
      break;
    case DomainKind::LIMACON_I:
    case DomainKind::LIMACON_I_CLOSED:
    case DomainKind::LIMACON_O:
    case DomainKind::LIMACON_O_CLOSED: {
      const bool inner = base.kind == DomainKind::LIMACON_I || base.kind == DomainKind::LIMACON_I_CLOSED;
      const double g = base.gamma;
      if (g == 1.0) {
        // degenerate: segment or ray, emitted as a polyline along the real axis
        for (int j = 0; j < samples; ++j) {
          const double s = static_cast<double>(j) / (samples - 1);
          out.push_back(inner ? cplx(-s, 0.0) : cplx(-1.0 - 10.0 * s, 0.0));
        }
        break;
      }
      for (int j = 0; j < samples; ++j) {
        const cplx u = std::polar(1.0, kTwoPi * j / samples);
        out.push_back(limacon_radius(g, inner, u) * u);
      }
      break;
    }
    case DomainKind::COMPLEMENT: break;
  }
  return out;
}

}  // namespace zerogeo
