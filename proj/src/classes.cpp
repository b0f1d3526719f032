#include "zerogeo/classes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "zerogeo/error.hpp"
#include "zerogeo/qconv.hpp"

namespace zerogeo {

const char* to_string(ClassLabel l) {
  switch (l) {
    case ClassLabel::T_closed: return "T_closed";
    case ClassLabel::T_open: return "T_open";
    case ClassLabel::D_closed: return "D_closed";
    case ClassLabel::D_open: return "D_open";
    case ClassLabel::PT: return "PT";
    case ClassLabel::PD: return "PD";
    case ClassLabel::pi_of_domain: return "pi_of_domain";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::DEFINITION: return "DEFINITION";
    case Method::ENDPOINT_DEFINITION: return "ENDPOINT_DEFINITION";
    case Method::FIRST_CHAR_SAMPLED: return "FIRST_CHAR_SAMPLED";
    case Method::SECOND_CHAR_GRID: return "SECOND_CHAR_GRID";
    case Method::THIRD_CHAR: return "THIRD_CHAR";
    case Method::GRID_ORACLE: return "GRID_ORACLE";
  }
  return "?";
}

namespace {

constexpr double kInvPhi = 0.6180339887498949;

MembershipVerdict finish(MembershipVerdict v, const ClassOptions& opts) {
  if (v.member && v.margin < 0) v.margin = 0.0;
  if (!v.member && v.margin > 0) v.margin = 0.0;
  v.indeterminate = std::abs(v.margin) < opts.margin_tol;
  if (!v.member && v.witnesses.empty()) v.witnesses.push_back({"unspecified", 0.0, 0.0});
  return v;
}

MembershipVerdict relabel(MembershipVerdict v, ClassLabel l) {
  v.class_label = l;
  return v;
}

void require_degree(const Polynomial& p, const LambdaParam& lp) {
  if (p.nominal_degree() != lp.n()) fail(ErrorCode::DegreeMismatch, "nominal degree differs from lambda parameter n");
  if (p.is_zero()) fail(ErrorCode::BadParams, "zero polynomial is not a class member");
}

double circle_distance(cplx z) { return std::abs(std::abs(z) - 1.0); }

// golden-section search for the minimum of f on [a, b]
double golden_min(const std::function<double(double)>& f, double a, double b, int iters, double& best_x) {
  double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  best_x = f1 <= f2 ? x1 : x2;
  return std::min(f1, f2);
}

// explicit sets at lambda = 0 and lambda = 2pi/n, plus root-location screening
std::optional<MembershipVerdict> d_prelude(const Polynomial& F, const LambdaParam& lp, bool closed, const ClassOptions& opts,
                                           Method method) {
  require_degree(F, lp);
  const ClassLabel label = closed ? ClassLabel::D_closed : ClassLabel::D_open;
  const int n = lp.n();
  MembershipVerdict v;
  v.class_label = label;
  v.method = method;
  if (F.exact_degree() < n) {
    v.member = false;
    v.margin = -1.0;
    v.witnesses.push_back({"degree_deficit", 0.0, static_cast<double>(n - F.exact_degree())});
    return finish(v, opts);
  }
  if (lp.is_zero()) {
    MembershipVerdict d = in_pi_disk(F, closed, opts);
    if (!closed && !d.member) {
      RootSet rs = find_roots(F, opts.roots);
      if (rs.all(CircleTag::ON)) d = in_T(F, lp, false, opts);
    }
    d.class_label = label;
    d.method = Method::ENDPOINT_DEFINITION;
    return finish(d, opts);
  }
  if (lp.at_endpoint()) {
    v.method = Method::ENDPOINT_DEFINITION;
    if (!closed) {
      v.member = false;
      v.margin = -1.0;
      v.witnesses.push_back({"empty_class", 0.0, lp.lambda()});
      return finish(v, opts);
    }
    double mid = 0.0;
    for (int k = 1; k < n; ++k) mid = std::max(mid, std::abs(F[k]));
    mid /= F.max_abs();
    const double bmod = std::abs(F[0] / F[n]);
    if (mid > opts.coeff_tol) {
      v.member = false;
      v.margin = -mid;
      v.witnesses.push_back({"middle_coefficient", 0.0, mid});
    } else {
      v.member = bmod <= 1.0 + opts.coeff_tol;
      v.margin = 1.0 - bmod;
      if (!v.member) v.witnesses.push_back({"constant_too_large", F[0] / F[n], bmod});
    }
    return finish(v, opts);
  }
  RootSet rs = find_roots(F, opts.roots);
  if (rs.count(CircleTag::OUTSIDE) > 0) {
    const Root* worst = nullptr;
    for (const auto& r : rs.roots)
      if (!worst || std::abs(r.z) > std::abs(worst->z)) worst = &r;
    v.member = false;
    v.margin = 1.0 + opts.roots.circle_tol - std::abs(worst->z);
    v.witnesses.push_back({"root_outside", worst->z, std::abs(worst->z)});
    return finish(v, opts);
  }
  if (rs.all(CircleTag::ON)) {
    MembershipVerdict t = in_T(F, lp, closed, opts);
    t.class_label = label;
    return t;
  }
  if (rs.count(CircleTag::ON) > 0) {
    double d = 0.0;
    const Root* on = nullptr;
    for (const auto& r : rs.roots)
      if (r.tag == CircleTag::ON) {
        if (!on) on = &r;
        d = std::max(d, circle_distance(r.z));
      }
    v.member = false;
    v.margin = d <= 1e-10 ? -1.0 : -d;
    v.witnesses.push_back({"mixed_root_location", on->z, 0.0});
    return finish(v, opts);
  }
  return std::nullopt;
}

// max root modulus of h, or a large value when the degree drops below d
double max_root_modulus(const Polynomial& h, int d, double lead_scale, const RootOptions& ro) {
  if (d <= 0) return 0.0;
  if (std::abs(h[d]) <= 1e-12 * lead_scale) return 1e12;
  Polynomial t = h.with_nominal(d);
  return find_roots(t, ro).max_modulus();
}

}  // namespace

MembershipVerdict in_pi_disk(const Polynomial& p, bool closed, const ClassOptions& opts) {
  if (p.is_zero()) fail(ErrorCode::BadParams, "zero polynomial");
  MembershipVerdict v;
  v.class_label = ClassLabel::pi_of_domain;
  v.method = Method::DEFINITION;
  const int n = p.nominal_degree();
  if (p.exact_degree() < n) {
    v.member = false;
    v.margin = -1.0;
    v.witnesses.push_back({"degree_deficit", 0.0, static_cast<double>(n - p.exact_degree())});
    return finish(v, opts);
  }
  if (n == 0) {
    v.member = true;
    v.margin = 1.0;
    return finish(v, opts);
  }
  RootSet rs = find_roots(p, opts.roots);
  const Root* worst = &rs.roots.front();
  for (const auto& r : rs.roots)
    if (std::abs(r.z) > std::abs(worst->z)) worst = &r;
  const double m = std::abs(worst->z);
  const double ct = opts.roots.circle_tol;
  if (closed) {
    v.member = rs.count(CircleTag::OUTSIDE) == 0;
    v.margin = 1.0 + ct - m;
  } else {
    v.member = rs.all(CircleTag::INSIDE);
    v.margin = 1.0 - ct - m;
  }
  if (!v.member) v.witnesses.push_back({"root", worst->z, m});
  return finish(v, opts);
}

MembershipVerdict in_T(const Polynomial& p, const LambdaParam& lp, bool closed, const ClassOptions& opts) {
  require_degree(p, lp);
  const int n = lp.n();
  const double lam = lp.lambda();
  MembershipVerdict v;
  v.class_label = closed ? ClassLabel::T_closed : ClassLabel::T_open;
  v.method = Method::DEFINITION;
  if (p.exact_degree() < n) {
    v.member = false;
    v.margin = -1.0;
    v.witnesses.push_back({"degree_deficit", 0.0, static_cast<double>(n - p.exact_degree())});
    return finish(v, opts);
  }
  if (!closed && lp.at_endpoint()) {
    v.method = Method::ENDPOINT_DEFINITION;
    v.member = false;
    v.margin = -1.0;
    v.witnesses.push_back({"empty_class", 0.0, lam});
    return finish(v, opts);
  }
  RootSet rs = find_roots(p, opts.roots);
  if (!rs.all(CircleTag::ON)) {
    const Root* worst = nullptr;
    for (const auto& r : rs.roots)
      if (r.tag != CircleTag::ON && (!worst || circle_distance(r.z) > circle_distance(worst->z))) worst = &r;
    v.member = false;
    v.margin = -circle_distance(worst->z);
    v.witnesses.push_back({"root_off_circle", worst->z, std::abs(worst->z)});
    return finish(v, opts);
  }
  const double sep = arg_separation(rs);
  if (closed) {
    v.member = sep >= lam - opts.sep_tol;
    v.margin = sep - lam;
  } else {
    const bool simple = rs.all_simple();
    v.member = simple && sep > lam + opts.sep_tol;
    v.margin = simple ? sep - lam - (v.member ? 0.0 : opts.sep_tol) : -lam;
  }
  if (!v.member) {
    const Root* mr = nullptr;
    for (const auto& r : rs.roots)
      if (r.multiplicity > 1) mr = &r;
    if (mr) v.witnesses.push_back({"multiple_root", mr->z, static_cast<double>(mr->multiplicity)});
    else v.witnesses.push_back({"separation", 0.0, sep});
  }
  return finish(v, opts);
}

CharacterizationPolys build_char_polys(const Polynomial& F, const LambdaParam& lp) {
  if (F.nominal_degree() != lp.n()) fail(ErrorCode::DegreeMismatch, "nominal degree differs from lambda parameter n");
  lp.require_interior();
  const int n = lp.n();
  const double lam = lp.lambda();
  // T_j = sum_{k+l=j} a_k conj(a_{n-l}) 2i sin((k-l) lambda/2)
  std::vector<cplx> t(2 * n + 1, cplx(0.0));
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) {
      if (k == l) continue;
      t[k + l] += F[k] * std::conj(F[n - l]) * cplx(0.0, 2.0 * std::sin((k - l) * lam / 2));
    }
  return CharacterizationPolys{std::nullopt, Polynomial(std::move(t))};
}

CharacterizationPolys build_char_polys(const Polynomial& P, const Polynomial& Q, const LambdaParam& lp) {
  if (P.nominal_degree() != lp.n() || Q.nominal_degree() != lp.n()) fail(ErrorCode::DegreeMismatch, "split degree mismatch");
  CharacterizationPolys c = build_char_polys(P - Q, lp);
  c.S = multiply(rotate_plus(P, lp), rotate_minus(Q, lp)) - multiply(rotate_minus(P, lp), rotate_plus(Q, lp));
  return c;
}

double boundary_function(const Polynomial& F, const LambdaParam& lp, double t) {
  const double lam = lp.lambda();
  const cplx fp = evaluate(F, std::polar(1.0, t + lam / 2));
  const cplx fm = evaluate(F, std::polar(1.0, t - lam / 2));
  const double s = F.norm1();
  return (std::polar(1.0, -lp.n() * lam / 2) * fp * std::conj(fm)).imag() / (s * s);
}

MembershipVerdict in_D_third(const Polynomial& F, const LambdaParam& lp, bool closed, const ClassOptions& opts) {
  if (auto v = d_prelude(F, lp, closed, opts, Method::THIRD_CHAR)) return *v;
  const int n = lp.n();
  MembershipVerdict v;
  v.class_label = closed ? ClassLabel::D_closed : ClassLabel::D_open;
  v.method = Method::THIRD_CHAR;
  const Polynomial T = build_char_polys(F, lp).T;
  if (T.max_abs() <= 1e-14 * F.norm1() * F.norm1())
    fail(ErrorCode::InternalInconsistency, "T vanishes for a polynomial with all roots inside the disk");
  RootSet rt = find_roots(T, opts.roots);

  double dist_min = std::numeric_limits<double>::infinity();
  std::vector<Root> on, odd, near;
  for (const auto& r : rt.roots) {
    dist_min = std::min(dist_min, circle_distance(r.z));
    if (r.tag == CircleTag::ON) on.push_back(r);
    if (circle_distance(r.z) < 1e-4) near.push_back(r);
  }
  // parity by angular clusters: a double root on the circle may come back as two nearby simple roots
  std::sort(near.begin(), near.end(), [](const Root& x, const Root& y) { return std::arg(x.z) < std::arg(y.z); });
  std::vector<std::vector<Root>> clusters;
  for (const auto& r : near) {
    if (!clusters.empty() && std::abs(std::arg(r.z) - std::arg(clusters.back().back().z)) < 1e-4) clusters.back().push_back(r);
    else clusters.push_back({r});
  }
  if (clusters.size() > 1 && std::arg(clusters.front().front().z) + kTwoPi - std::arg(clusters.back().back().z) < 1e-4) {
    clusters.front().insert(clusters.front().end(), clusters.back().begin(), clusters.back().end());
    clusters.pop_back();
  }
  for (const auto& cl : clusters) {
    int m = 0;
    bool has_on = false;
    for (const auto& r : cl) {
      m += r.multiplicity;
      has_on = has_on || r.tag == CircleTag::ON;
    }
    if (has_on && m % 2 == 1) odd.push_back(Root{std::polar(1.0, std::arg(cl.front().z)), m, CircleTag::ON});
  }
  // minimum of the real boundary function, sampled plus flanks of the circle roots of T
  double min_n = std::numeric_limits<double>::infinity();
  double min_t = 0.0;
  const int samples = 64 * 2 * n;
  for (int j = 0; j < samples; ++j) {
    const double t = kTwoPi * j / samples;
    const double val = boundary_function(F, lp, t);
    if (val < min_n) {
      min_n = val;
      min_t = t;
    }
  }
  for (const auto& r : on) {
    const double t0 = std::arg(r.z);
    for (double d : {1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
      for (double s : {-1.0, 1.0}) {
        const double val = boundary_function(F, lp, t0 + s * d);
        if (val < min_n) {
          min_n = val;
          min_t = t0 + s * d;
        }
      }
    }
  }

  if (!closed) {
    v.member = on.empty();
    v.margin = v.member ? dist_min : std::min(min_n, 0.0);
    if (!v.member) v.witnesses.push_back({"root_of_T_on_circle", on.front().z, static_cast<double>(on.front().multiplicity)});
  } else {
    v.member = odd.empty();
    if (v.member) {
      v.margin = on.empty() ? dist_min : 0.0;
      if (min_n < -opts.margin_tol) {
        // an even cluster hides a sign change: two nearby simple roots
        v.member = false;
        v.margin = min_n;
        v.witnesses.push_back({"sign_change_of_boundary_function", std::polar(1.0, min_t), min_t});
      }
    } else {
      v.margin = std::min(min_n, 0.0);
      v.witnesses.push_back({"odd_root_of_T", odd.front().z, static_cast<double>(odd.front().multiplicity)});
    }
  }
  return finish(v, opts);
}

MembershipVerdict in_D_first(const Polynomial& F, const LambdaParam& lp, bool closed, int zeta_count, const ClassOptions& opts) {
  if (zeta_count < 1) fail(ErrorCode::BadParams, "zeta_count must be positive");
  if (auto v = d_prelude(F, lp, closed, opts, Method::FIRST_CHAR_SAMPLED)) return *v;
  const Polynomial Fi = n_inverse(F);
  MembershipVerdict v;
  v.class_label = closed ? ClassLabel::D_closed : ClassLabel::D_open;
  v.method = Method::FIRST_CHAR_SAMPLED;
  v.member = true;
  v.margin = std::numeric_limits<double>::infinity();
  auto probe = [&](double th) {
    const cplx zeta = std::polar(1.0, th);
    MembershipVerdict t = in_T(F + zeta * Fi, lp, closed, opts);
    if (!t.member && v.member) {
      v.member = false;
      v.witnesses.push_back({"zeta", zeta, th});
    }
    v.margin = std::min(v.margin, t.margin);
    return t.margin;
  };
  int worst = 0;
  double worst_m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < zeta_count; ++j) {
    const double m = probe(kTwoPi * j / zeta_count);
    if (m < worst_m) {
      worst_m = m;
      worst = j;
    }
  }
  double bx = 0.0;
  golden_min(probe, kTwoPi * (worst - 1) / zeta_count, kTwoPi * (worst + 1) / zeta_count, opts.refine_iters, bx);
  return finish(v, opts);
}

MembershipVerdict in_D_second(const Polynomial& P, const Polynomial& Q, const LambdaParam& lp, bool closed,
                              const ClassOptions& opts) {
  require_degree(P, lp);
  require_degree(Q, lp);
  const int n = lp.n();
  for (const Polynomial* x : {&P, &Q}) {
    if (x->exact_degree() != n) fail(ErrorCode::NotOnCircle, "split polynomial has a root at infinity");
    if (!find_roots(*x, opts.roots).all(CircleTag::ON)) fail(ErrorCode::NotOnCircle, "split polynomial has roots off the circle");
  }
  const cplx cp = self_inversive_phase(P, opts.coeff_tol);
  const cplx cq = self_inversive_phase(Q, opts.coeff_tol);
  if (std::abs(cp - cq) <= 1e-9) fail(ErrorCode::PhaseCollision, "c_P equals c_Q");
  const Polynomial F = P - Q;
  if (auto v = d_prelude(F, lp, closed, opts, Method::SECOND_CHAR_GRID)) return *v;

  const Polynomial A = cp * delta(P, lp);
  const Polynomial B = cq * delta(Q, lp);
  const int d = n - 1;
  const double lead_scale = std::abs(A[d]) + std::abs(B[d]);
  auto maxmod = [&](double th) { return max_root_modulus(std::cos(th) * A - std::sin(th) * B, d, lead_scale, opts.roots); };

  MembershipVerdict v;
  v.class_label = closed ? ClassLabel::D_closed : ClassLabel::D_open;
  v.method = Method::SECOND_CHAR_GRID;
  double worst_m = -1.0, worst_th = 0.0;
  int worst = 0;
  for (int j = 0; j < opts.theta_grid; ++j) {
    const double th = kPi * j / opts.theta_grid;
    const double m = maxmod(th);
    if (m > worst_m) {
      worst_m = m;
      worst_th = th;
      worst = j;
    }
  }
  // angle where the leading coefficient can vanish (A_lead / B_lead real)
  if (d >= 0 && std::abs(B[d]) > 0) {
    const cplx r = A[d] / B[d];
    if (std::abs(r.imag()) <= 1e-9 * std::abs(r)) {
      double th = std::atan(r.real());
      if (th < 0) th += kPi;
      const double m = maxmod(th);
      if (m > worst_m) {
        worst_m = m;
        worst_th = th;
      }
    }
  }
  double bx = 0.0;
  const double refined = -golden_min([&](double th) { return -maxmod(th); }, kPi * (worst - 1) / opts.theta_grid,
                                     kPi * (worst + 1) / opts.theta_grid, opts.refine_iters, bx);
  if (refined > worst_m) {
    worst_m = refined;
    worst_th = bx;
  }
  const double ct = opts.roots.circle_tol;
  v.margin = closed ? 1.0 + ct - worst_m : 1.0 - ct - worst_m;
  v.member = closed ? worst_m <= 1.0 + ct : worst_m < 1.0 - ct;
  if (!v.member) v.witnesses.push_back({"theta", std::polar(1.0, worst_th), worst_m});
  return finish(v, opts);
}

MembershipVerdict in_D_oracle(const Polynomial& F, const LambdaParam& lp, bool closed, const ClassOptions& opts) {
  require_degree(F, lp);
  const int n = lp.n();
  MembershipVerdict v;
  v.class_label = closed ? ClassLabel::D_closed : ClassLabel::D_open;
  v.method = Method::GRID_ORACLE;
  if (lp.is_zero() || lp.at_endpoint() || F.exact_degree() < n) {
    auto e = d_prelude(F, lp, closed, opts, Method::GRID_ORACLE);
    if (e) return *e;
  }
  if (!closed) {
    MembershipVerdict t = in_T(F, lp, false, opts);
    if (t.member) {
      t.class_label = ClassLabel::D_open;
      t.method = Method::GRID_ORACLE;
      return t;
    }
  }
  const double lam = lp.lambda();
  const cplx rot = std::polar(1.0, -n * lam / 2);
  const cplx ep = std::polar(1.0, lam / 2), em = std::polar(1.0, -lam / 2);
  auto value = [&](double t, double r) {
    const cplx z = std::polar(r, t);
    const cplx fp = evaluate(F, ep * z), fm = evaluate(F, em * z);
    const double den = std::abs(fp) * std::abs(fm);
    if (!(den > 1e-300)) return 1.0;
    return (rot * fp * std::conj(fm)).imag() / den;
  };
  const double rmin = closed ? 1.0 + 1e-9 : 1.0;
  std::vector<double> radii;
  if (!closed) radii.push_back(1.0);
  for (int j = 0; j < opts.oracle_radii; ++j) radii.push_back(1.0 + 1e-7 * std::pow(1.6e8, static_cast<double>(j) / (opts.oracle_radii - 1)));

  struct Pt {
    double v, t, r;
  };
  std::vector<Pt> pts;
  for (int a = 0; a < opts.oracle_angles; ++a) {
    const double t = kTwoPi * (a + 0.5) / opts.oracle_angles;
    for (double r : radii) pts.push_back({value(t, r), t, r});
  }
  std::partial_sort(pts.begin(), pts.begin() + std::min<size_t>(8, pts.size()), pts.end(),
                    [](const Pt& x, const Pt& y) { return x.v < y.v; });
  Pt best = pts.front();
  // compass search from the lowest grid points in (t, log(r - 1 + tiny))
  for (size_t s = 0; s < std::min<size_t>(8, pts.size()); ++s) {
    Pt cur = pts[s];
    double dt = kTwoPi / opts.oracle_angles, dr = std::max(1e-9, 0.5 * (cur.r - 1.0));
    for (int it = 0; it < 80 && (dt > 1e-12 || dr > 1e-12); ++it) {
      bool moved = false;
      for (auto [a, b] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
        const double t = cur.t + a * dt, r = std::max(rmin, cur.r + b * dr);
        const double val = value(t, r);
        if (val < cur.v) {
          cur = {val, t, r};
          moved = true;
          break;
        }
      }
      if (!moved) {
        dt *= 0.5;
        dr *= 0.5;
      }
    }
    if (cur.v < best.v) best = cur;
  }
  const double tol = 1e-12;
  v.margin = best.v;
  v.member = closed ? best.v >= -tol : best.v > tol;
  if (!v.member) v.witnesses.push_back({"negative_imaginary_part", std::polar(best.r, best.t), best.v});
  return finish(v, opts);
}

MembershipVerdict in_D(const Polynomial& F, const LambdaParam& lp, bool closed, const ClassOptions& opts) {
  return in_D_third(F, lp, closed, opts);
}

PQSplit split_pq(const Polynomial& F, cplx eta, cplx zeta) {
  const cplx e2 = eta * eta, z2 = zeta * zeta;
  if (std::abs(e2 - z2) < 1e-12) fail(ErrorCode::BadParams, "eta^2 must differ from zeta^2");
  const Polynomial Fi = n_inverse(F);
  const cplx s = 1.0 / (e2 - z2);
  return PQSplit{s * (e2 * F - Fi), s * (z2 * F - Fi)};
}

namespace {

void require_nonconstant_ratio(const Polynomial& P, const Polynomial& Q, double tol) {
  int k0 = 0;
  for (int k = 1; k <= Q.nominal_degree(); ++k)
    if (std::abs(Q[k]) > std::abs(Q[k0])) k0 = k;
  if (Q.is_zero() || P.is_zero()) fail(ErrorCode::BadParams, "zero polynomial");
  const cplx ratio = P[k0] / Q[k0];
  if (rel_diff(P, ratio * Q) <= tol) fail(ErrorCode::BadParams, "P/Q is constant");
}

}  // namespace

bool hermite_biehler(const Polynomial& P, const Polynomial& Q, bool strict, const ClassOptions& opts) {
  if (P.nominal_degree() != Q.nominal_degree()) fail(ErrorCode::DegreeMismatch, "P and Q need equal n");
  require_nonconstant_ratio(P, Q, opts.coeff_tol);
  const cplx cp = self_inversive_phase(P, opts.coeff_tol);
  const cplx cq = self_inversive_phase(Q, opts.coeff_tol);
  if (std::abs(cp - cq) <= 1e-9) fail(ErrorCode::PhaseCollision, "c_P equals c_Q");
  bool alt = false;
  try {
    alt = interspersed(P, Q, strict, opts.roots);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotOnCircle) throw;
    alt = false;
  }
  const Polynomial F = P - Q;
  const bool loc = in_pi_disk(F, !strict, opts).member || in_pi_disk(n_inverse(F), !strict, opts).member;
  if (alt != loc) fail(ErrorCode::InternalInconsistency, "interspersion and root location of P - Q disagree");
  return alt;
}

bool hermite_kakeya(const Polynomial& P, const Polynomial& Q, bool strict, int x_grid, const ClassOptions& opts) {
  if (P.nominal_degree() != Q.nominal_degree()) fail(ErrorCode::DegreeMismatch, "P and Q need equal n");
  if (x_grid < 1) fail(ErrorCode::BadParams, "x_grid must be positive");
  require_nonconstant_ratio(P, Q, opts.coeff_tol);
  const cplx cp = self_inversive_phase(P, opts.coeff_tol);
  const cplx cq = self_inversive_phase(Q, opts.coeff_tol);
  if (std::abs(cp - cq) > 1e-9) fail(ErrorCode::PhaseMismatch, "c_P differs from c_Q; normalize phases first");
  const LambdaParam lp0(P.nominal_degree(), 0.0);
  if (strict && !in_T(Q, lp0, false, opts).member) return false;
  for (int j = 0; j < x_grid; ++j) {
    const double th = kPi * j / x_grid - kPi / 2;
    if (std::abs(std::cos(th)) < 1e-12) continue;
    const Polynomial H = std::cos(th) * P - std::sin(th) * Q;
    if (!in_T(H, lp0, !strict, opts).member) return false;
  }
  return true;
}

HalfPlaneResult half_plane_criterion(const Polynomial& f, int grid) {
  const int n = f.nominal_degree();
  if (grid < 1) fail(ErrorCode::BadParams, "grid must be positive");
  if (f.exact_degree() != n || n < 1) fail(ErrorCode::HypothesisViolated, "f must have exact degree n >= 1");
  const cplx a0 = f[0], an = f[n];
  if (!(std::abs(a0) < std::abs(an))) fail(ErrorCode::HypothesisViolated, "|a_0| < |a_n| required");
  HalfPlaneResult res;
  res.margin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid; ++j) {
    const double t = kTwoPi * j / grid;
    const cplx z = std::polar(1.0, t);
    const cplx w = (evaluate(f, z) - a0) / (an * std::pow(z, n) - a0);
    if (w.real() - 0.5 < res.margin) {
      res.margin = w.real() - 0.5;
      res.worst_angle = t;
    }
  }
  res.holds = res.margin > 0;
  return res;
}

Polynomial extremal_family(int n, double lambda, double a, double b, cplx c) {
  LambdaParam lp(n, lambda);
  lp.require_interior();
  if (a == 0.0) fail(ErrorCode::BadParams, "a must be nonzero");
  if (std::abs(std::abs(c) - 1.0) > 1e-12) fail(ErrorCode::BadParams, "c must be unimodular");
  if (std::abs(c - 1.0) < 1e-12 || std::abs(c + 1.0) < 1e-12) fail(ErrorCode::BadParams, "c must differ from +-1");
  std::vector<cplx> w(n + 1);
  for (int j = 1; j <= n; ++j) w[j] = std::polar(1.0, (2.0 * j - n - 1) * lambda / 2);
  const cplx top = std::polar(1.0, (n + 1) * lambda / 2);
  Polynomial sum = b * q_extremal(n, lambda);
  for (int k = 1; k <= n; ++k) {
    // (1 + top z) * prod_{j != k} (1 + w_j z)
    std::vector<cplx> roots;
    cplx lead = top;
    roots.push_back(-1.0 / top);
    for (int j = 1; j <= n; ++j) {
      if (j == k) continue;
      roots.push_back(-1.0 / w[j]);
      lead *= w[j];
    }
    const double ang = (k - n - 1.0) * lambda / 2;
    const cplx weight = std::polar(1.0, ang) / std::sin(ang);
    sum = sum + (a * weight) * Polynomial::from_roots(roots, lead);
  }
  return c * sum;
}

MembershipVerdict pre_class_test(const Polynomial& f, const LambdaParam& lp, PreClass which, const ClassOptions& opts) {
  const Polynomial lift = pre_lift(f, lp);
  switch (which) {
    case PreClass::PTbar: return relabel(in_T(lift, lp, true, opts), ClassLabel::PT);
    case PreClass::PT: return relabel(in_T(lift, lp, false, opts), ClassLabel::PT);
    case PreClass::PDbar: return relabel(in_D(lift, lp, true, opts), ClassLabel::PD);
    case PreClass::PD: return relabel(in_D(lift, lp, false, opts), ClassLabel::PD);
  }
  return {};
}

}  // namespace zerogeo
