#include "zerogeo/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "zerogeo/error.hpp"

namespace zerogeo {

const char* to_string(CircleTag t) {
  switch (t) {
    case CircleTag::INSIDE: return "INSIDE";
    case CircleTag::ON: return "ON";
    case CircleTag::OUTSIDE: return "OUTSIDE";
  }
  return "?";
}

int RootSet::count(CircleTag t) const {
  int c = 0;
  for (const auto& r : roots)
    if (r.tag == t) c += r.multiplicity;
  return c;
}

bool RootSet::all_simple() const {
  return std::all_of(roots.begin(), roots.end(), [](const Root& r) { return r.multiplicity == 1; });
}

double RootSet::max_modulus() const {
  double m = 0.0;
  for (const auto& r : roots) m = std::max(m, std::abs(r.z));
  return m;
}

double RootSet::min_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) m = std::min(m, std::abs(r.z));
  return m;
}

std::vector<cplx> RootSet::flat() const {
  std::vector<cplx> v;
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity; ++i) v.push_back(r.z);
  return v;
}

CircleTag classify_modulus(double r, double circle_tol) {
  if (std::abs(r - 1.0) <= circle_tol) return CircleTag::ON;
  return r < 1.0 ? CircleTag::INSIDE : CircleTag::OUTSIDE;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kGoldenAngle = 2.399963229728653;

struct Eval {
  cplx p, dp;
  double bound;  // sum |a_k| |z|^k
};

Eval eval(const std::vector<cplx>& a, cplx z) {
  Eval e{0.0, 0.0, 0.0};
  const double az = std::abs(z);
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
    e.dp = e.dp * z + e.p;
    e.p = e.p * z + a[k];
    e.bound = e.bound * az + std::abs(a[k]);
  }
  return e;
}

// starting points on circles whose radii come from the upper convex hull of (k, log|a_k|)
std::vector<cplx> initial_guesses(const std::vector<cplx>& a) {
  const int m = static_cast<int>(a.size()) - 1;
  std::vector<int> pts;
  std::vector<double> lg(m + 1, -std::numeric_limits<double>::infinity());
  for (int k = 0; k <= m; ++k)
    if (std::abs(a[k]) > 0.0) lg[k] = std::log(std::abs(a[k]));
  std::vector<int> hull;
  for (int k = 0; k <= m; ++k) {
    if (!std::isfinite(lg[k])) continue;
    while (hull.size() >= 2) {
      int i = hull[hull.size() - 2], j = hull.back();
      // drop j if it lies on or below segment i-k
      if ((lg[j] - lg[i]) * (k - i) <= (lg[k] - lg[i]) * (j - i)) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<cplx> z;
  z.reserve(m);
  const double offset = kGoldenAngle / std::max(m, 1);
  for (size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i = hull[h], j = hull[h + 1];
    const double r = std::exp((lg[i] - lg[j]) / (j - i));
    for (int l = 0; l < j - i; ++l) {
      const double th = kTwoPi * (static_cast<double>(l) / (j - i)) + kTwoPi * i / m + offset;
      z.push_back(std::polar(r, th));
    }
  }
  return z;
}

// an m-fold root is a simple root of the (m-1)-th derivative
cplx polish_multiple(const std::vector<cplx>& a, cplx z, int mult, double tol) {
  std::vector<cplx> d = a;
  for (int r = 1; r < mult; ++r) {
    for (size_t k = 1; k < d.size(); ++k) d[k - 1] = static_cast<double>(k) * d[k];
    d.pop_back();
  }
  const double rho = std::min(std::pow(tol, 1.0 / mult), 5e-2) * std::max(1.0, std::abs(z));
  cplx w = z;
  for (int it = 0; it < 30; ++it) {
    const Eval e = eval(d, w);
    if (e.dp == cplx(0.0)) break;
    const cplx step = e.p / e.dp;
    w -= step;
    if (std::abs(step) <= 4 * kEps * std::max(1.0, std::abs(w))) break;
  }
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w - z) > rho) return z;
  return w;
}

}  // namespace

RootSet find_roots(const Polynomial& p, const RootOptions& opts) {
  if (p.is_zero()) fail(ErrorCode::BadParams, "find_roots on the zero polynomial");
  const int d = p.exact_degree();
  RootSet rs;
  rs.circle_tol = opts.circle_tol;
  rs.nominal_degree = p.nominal_degree();
  rs.degree = d;
  if (d == 0) return rs;

  int z0 = 0;
  while (std::abs(p[z0]) == 0.0) ++z0;
  const double scale = p.max_abs();
  std::vector<cplx> a;
  for (int k = z0; k <= d; ++k) a.push_back(p[k] / scale);
  const int m = d - z0;

  std::vector<cplx> z;
  if (m == 1) {
    z.push_back(-a[0] / a[1]);
  } else if (m > 1) {
    z = initial_guesses(a);
    std::vector<char> done(m, 0);
    int it = 0;
    for (; it < opts.max_iter; ++it) {
      bool all_done = true;
      for (int i = 0; i < m; ++i) {
        if (done[i]) continue;
        const Eval e = eval(a, z[i]);
        if (std::abs(e.p) <= 8 * kEps * e.bound) {
          done[i] = 1;
          continue;
        }
        all_done = false;
        cplx s = 0.0;
        for (int j = 0; j < m; ++j) {
          if (j == i) continue;
          cplx diff = z[i] - z[j];
          if (diff == cplx(0.0)) diff = cplx(kEps * (1.0 + std::abs(z[i])), 0.0);
          s += 1.0 / diff;
        }
        cplx w;
        if (e.dp == cplx(0.0)) {
          w = cplx(1e-3 * (1.0 + std::abs(z[i])), 0.0);
        } else {
          const cplx ratio = e.p / e.dp;
          w = ratio / (1.0 - ratio * s);
        }
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = cplx(1e-3, 1e-3);
        z[i] -= w;
      }
      if (all_done) break;
    }
    // Newton polish, accepted only when the residual drops
    for (int i = 0; i < m; ++i) {
      for (int step = 0; step < 3; ++step) {
        const Eval e = eval(a, z[i]);
        if (e.dp == cplx(0.0) || e.p == cplx(0.0)) break;
        const cplx zn = z[i] - e.p / e.dp;
        if (std::abs(eval(a, zn).p) < std::abs(e.p)) z[i] = zn;
        else break;
      }
    }
  }

  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    const Eval e = eval(a, z[i]);
    worst = std::max(worst, e.bound > 0 ? std::abs(e.p) / e.bound : 0.0);
  }
  if (worst > opts.tol)
    fail(ErrorCode::NoConvergence, "root residual " + std::to_string(worst) + " above tolerance");

  // cluster into multiple roots: largest admissible m first
  std::vector<char> used(m, 0);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int i : order) {
    if (used[i]) continue;
    std::vector<int> cand;
    for (int j = 0; j < m; ++j)
      if (!used[j]) cand.push_back(j);
    std::sort(cand.begin(), cand.end(), [&](int x, int y) {
      return std::abs(z[x] - z[i]) < std::abs(z[y] - z[i]);
    });
    int take = 1;
    cplx centre = z[i];
    for (int k = static_cast<int>(cand.size()); k >= 2; --k) {
      const double rho = std::min(std::pow(opts.tol, 1.0 / k), 5e-2) * std::max(1.0, std::abs(z[i]));
      if (std::abs(z[cand[k - 1]] - z[i]) > 2 * rho) continue;
      cplx c = 0.0;
      for (int l = 0; l < k; ++l) c += z[cand[l]];
      c /= static_cast<double>(k);
      double spread = 0.0;
      for (int l = 0; l < k; ++l) spread = std::max(spread, std::abs(z[cand[l]] - c));
      if (spread <= rho) {
        take = k;
        centre = c;
        break;
      }
    }
    for (int l = 0; l < take; ++l) used[cand[l]] = 1;
    if (take > 1) centre = polish_multiple(a, centre, take, opts.tol);
    rs.roots.push_back(Root{centre, take, classify_modulus(std::abs(centre), opts.circle_tol)});
  }
  if (z0 > 0) rs.roots.push_back(Root{cplx(0.0), z0, classify_modulus(0.0, opts.circle_tol)});

  double resid = 0.0;
  for (const auto& r : rs.roots) {
    if (r.multiplicity != 1) continue;
    const Eval e = eval(a, r.z);
    resid = std::max(resid, e.bound > 0 ? std::abs(e.p) / e.bound : 0.0);
  }
  rs.residual = resid;
  return rs;
}

double arg_separation(const RootSet& rs) {
  std::vector<double> args;
  for (const auto& r : rs.roots) {
    if (r.tag != CircleTag::ON) fail(ErrorCode::NotOnCircle, "root off the unit circle");
    if (r.multiplicity > 1) return 0.0;
    double t = std::arg(r.z);
    if (t < 0) t += kTwoPi;
    args.push_back(t);
  }
  if (args.empty()) fail(ErrorCode::NotOnCircle, "no roots");
  if (args.size() == 1) return kTwoPi;
  std::sort(args.begin(), args.end());
  double g = kTwoPi - (args.back() - args.front());
  for (size_t i = 1; i < args.size(); ++i) g = std::min(g, args[i] - args[i - 1]);
  return g;
}

bool interspersed(const Polynomial& P, const Polynomial& Q, bool strict, const RootOptions& opts) {
  const RootSet a = find_roots(P, opts);
  const RootSet b = find_roots(Q, opts);
  if (!a.all(CircleTag::ON) || !b.all(CircleTag::ON)) fail(ErrorCode::NotOnCircle, "interspersion needs roots on the circle");
  if (a.degree != b.degree || a.degree == 0) return false;

  struct Ev {
    double t;
    int owner;
    int mult;
  };
  std::vector<Ev> ev;
  for (const auto& r : a.roots) ev.push_back({std::fmod(std::arg(r.z) + kTwoPi, kTwoPi), 0, r.multiplicity});
  for (const auto& r : b.roots) ev.push_back({std::fmod(std::arg(r.z) + kTwoPi, kTwoPi), 1, r.multiplicity});
  std::sort(ev.begin(), ev.end(), [](const Ev& x, const Ev& y) { return x.t < y.t; });

  // group coincident arguments (within the circle tolerance, wrapping around)
  const double tie = opts.circle_tol;
  std::vector<std::pair<int, int>> groups;  // (#P, #Q)
  std::vector<double> start;
  for (size_t i = 0; i < ev.size(); ++i) {
    if (i > 0 && ev[i].t - ev[i - 1].t <= tie) {
      (ev[i].owner == 0 ? groups.back().first : groups.back().second) += ev[i].mult;
    } else {
      groups.push_back(ev[i].owner == 0 ? std::make_pair(ev[i].mult, 0) : std::make_pair(0, ev[i].mult));
      start.push_back(ev[i].t);
    }
  }
  if (groups.size() > 1 && ev.front().t + kTwoPi - ev.back().t <= tie) {
    groups.front().first += groups.back().first;
    groups.front().second += groups.back().second;
    groups.pop_back();
  }
  int lo = 0, hi = 0, s = 0;
  for (const auto& [np, nq] : groups) {
    if (std::abs(np - nq) > 1) return false;
    if (strict && np + nq != 1) return false;
    s += np - nq;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return s == 0 && hi - lo <= 1;
}

}  // namespace zerogeo
