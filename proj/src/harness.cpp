#include "zerogeo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "zerogeo/error.hpp"
#include "zerogeo/herglotz.hpp"
#include "zerogeo/json_io.hpp"
#include "zerogeo/qconv.hpp"

namespace zerogeo {

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(index), hi(index)};
  return Rng(seq);
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t stream_id(const std::string& id, int n, double lambda) {
  // FNV-1a over the trial family name and its parameters
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  mix(static_cast<std::uint64_t>(n));
  mix(std::bit_cast<std::uint64_t>(lambda));
  return h;
}

double uniform(Rng& rng, double a = 0.0, double b = 1.0) { return std::uniform_real_distribution<double>(a, b)(rng); }

cplx unimodular(Rng& rng) { return std::polar(1.0, uniform(rng, 0.0, kTwoPi)); }

TrialOutcome judge(bool ok, double margin, double ind, const std::string& witness) {
  TrialOutcome o;
  o.margin = margin;
  if (std::abs(margin) < ind) o.status = TrialOutcome::INDETERMINATE;
  else o.status = ok ? TrialOutcome::PASS : TrialOutcome::FAIL;
  if (o.status == TrialOutcome::FAIL) o.witness = witness;
  return o;
}

TrialOutcome skip() {
  TrialOutcome o;
  o.status = TrialOutcome::SKIP;
  return o;
}

std::string witness_json(int trial, std::initializer_list<std::pair<const char*, Polynomial>> polys, const std::string& note,
                         double lambda) {
  json j;
  j["trial"] = trial;
  j["lambda"] = lambda;
  j["note"] = note;
  for (const auto& [k, p] : polys) j[k] = to_json(p);
  return j.dump();
}

Polynomial divide_by_q(const Polynomial& F, const LambdaParam& lp) {
  auto t = q_table(lp.n(), lp.lambda());
  std::vector<cplx> c(lp.n() + 1);
  for (int k = 0; k <= lp.n(); ++k) c[k] = F[k] / t->values[k];
  return Polynomial(std::move(c));
}

// unit circle roots with one gap shorter than lambda (a double root when lambda = 0)
Polynomial sample_T_violator(int n, double lambda, Rng& rng) {
  const double g0 = lambda * uniform(rng, 0.3, 0.8);
  const double slack = kTwoPi - g0 - (n - 1) * lambda;
  std::gamma_distribution<double> gd(1.0, 1.0);
  std::vector<double> w(n - 1);
  double s = 0.0;
  for (auto& x : w) s += (x = gd(rng));
  std::vector<cplx> roots;
  double t = uniform(rng, 0.0, kTwoPi);
  roots.push_back(std::polar(1.0, t));
  t += g0;
  roots.push_back(std::polar(1.0, t));
  for (int i = 0; i + 2 < n; ++i) {
    t += lambda + slack * w[i] / s;
    roots.push_back(std::polar(1.0, t));
  }
  return Polynomial::from_roots(roots, unimodular(rng));
}

SampledD sample_D_retry(int n, double lambda, bool closed, Rng& rng, const ClassOptions& opts) {
  for (int attempt = 0;; ++attempt) {
    try {
      return sample_D(n, lambda, closed, rng, opts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SamplerExhausted || attempt >= 4) throw;
    }
  }
}

int threads_for(const HarnessOptions& ho) { return ho.threads; }

}  // namespace

// distance of f + zeta f* from the pre-extremal sequences a b^k: smallest singular value of the
// 2 x n matrix of consecutive coefficient pairs, relative to |f|; minimized over zeta on the circle
double pre_extremal_gap(const Polynomial& f) {
  const int n = f.nominal_degree();
  double fn = 0.0;
  for (int k = 0; k <= n; ++k) fn += std::norm(f[k]);
  if (n < 2 || fn == 0.0) return 0.0;
  auto gap = [&](double th) {
    const cplx z = std::polar(1.0, th);
    std::vector<cplx> h(n + 1);
    for (int k = 0; k <= n; ++k) h[k] = f[k] + z * std::conj(f[n - k]);
    double a = 0.0, d = 0.0;
    cplx b = 0.0;
    for (int k = 0; k < n; ++k) {
      a += std::norm(h[k]);
      d += std::norm(h[k + 1]);
      b += h[k] * std::conj(h[k + 1]);
    }
    const double tr = a + d, det = std::max(0.0, a * d - std::norm(b));
    const double smin2 = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
    return std::sqrt(std::max(0.0, smin2) / fn);
  };
  const int M = 256;
  int best = 0;
  double bv = gap(0.0);
  for (int j = 1; j < M; ++j) {
    const double v = gap(kTwoPi * j / M);
    if (v < bv) bv = v, best = j;
  }
  double lo = kTwoPi * (best - 1) / M, hi = kTwoPi * (best + 1) / M;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 60; ++it) {
    const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    if (gap(x1) < gap(x2)) hi = x2;
    else lo = x1;
  }
  return std::min(bv, gap(0.5 * (lo + hi)));
}

TrialReport merge_outcomes(const std::string& id, std::uint64_t seed, const std::vector<TrialOutcome>& outcomes) {
  TrialReport r;
  r.theorem_id = id;
  r.seed = seed;
  double worst = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.status == TrialOutcome::SKIP) {
      ++r.skipped;
      continue;
    }
    ++r.trials;
    if (o.status == TrialOutcome::INDETERMINATE) {
      ++r.indeterminate;
      continue;
    }
    worst = std::min(worst, o.margin);
    if (o.status == TrialOutcome::FAIL) {
      ++r.failures;
      r.witnesses.push_back(o.witness.empty() ? json{{"trial", i}}.dump() : o.witness);
    }
  }
  r.worst_margin = std::isfinite(worst) ? worst : 0.0;
  return r;
}

void accumulate(TrialReport& into, const TrialReport& part) {
  const bool first = into.trials == 0 && into.skipped == 0;
  into.trials += part.trials;
  into.failures += part.failures;
  into.indeterminate += part.indeterminate;
  into.skipped += part.skipped;
  into.worst_margin = first ? part.worst_margin : std::min(into.worst_margin, part.worst_margin);
  into.witnesses.insert(into.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
  into.seconds += part.seconds;
}

std::vector<TrialOutcome> parallel_trials(int count, const std::function<TrialOutcome(int)>& fn, int threads) {
  std::vector<TrialOutcome> out(std::max(count, 0));
  if (count <= 0) return out;
  int nt = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  nt = std::min(nt, count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (const Error& e) {
        // numerical trouble is not a counterexample
        TrialOutcome o;
        o.status = TrialOutcome::INDETERMINATE;
        o.witness = std::string(to_string(e.code())) + ": " + e.what();
        out[i] = o;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::vector<std::pair<int, double>> standard_grid() {
  std::vector<std::pair<int, double>> g;
  for (int n = 2; n <= 8; ++n) {
    g.emplace_back(n, 0.0);
    for (int j = 1; j <= 7; ++j) g.emplace_back(n, j * (kTwoPi / n) / 8);
  }
  return g;
}

Polynomial sample_T(int n, double lambda, bool strict, Rng& rng) {
  if (n < 1) fail(ErrorCode::BadParams, "n must be positive");
  const LambdaParam lp(n, lambda);
  if (strict && lp.at_endpoint()) fail(ErrorCode::OutOfRange, "the open class is empty at lambda = 2pi/n");
  const double lam = lp.lambda();
  const double slack = std::max(0.0, kTwoPi - n * lam);
  std::gamma_distribution<double> gd(1.0, 1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = gd(rng);
  if (!strict && n > 1 && uniform(rng) < 0.25) {
    // some gaps exactly lambda
    const int keep = std::uniform_int_distribution<int>(0, n - 1)(rng);
    for (int i = 0; i < n; ++i)
      if (i != keep && uniform(rng) < 0.5) w[i] = 0.0;
  }
  double s = 0.0;
  for (double x : w) s += x;
  for (auto& x : w) x /= s;
  if (strict)
    for (auto& x : w) x = 0.1 / n + 0.9 * x;
  std::vector<cplx> roots;
  double t = uniform(rng, 0.0, kTwoPi);
  for (int i = 0; i < n; ++i) {
    roots.push_back(std::polar(1.0, t));
    t += lam + slack * w[i];
  }
  return Polynomial::from_roots(roots, unimodular(rng));
}

SampledD sample_D(int n, double lambda, bool closed, Rng& rng, const ClassOptions& opts) {
  if (n < 1) fail(ErrorCode::BadParams, "n must be positive");
  const LambdaParam lp(n, lambda);
  if (lp.at_endpoint()) {
    if (!closed) fail(ErrorCode::OutOfRange, "the open class is empty at lambda = 2pi/n");
    std::vector<cplx> c(n + 1, cplx(0.0));
    c[n] = unimodular(rng) * uniform(rng, 0.5, 2.0);
    c[0] = -c[n] * std::polar(std::sqrt(uniform(rng)), uniform(rng, 0.0, kTwoPi));
    return {Polynomial(std::move(c)), "endpoint"};
  }
  if (lp.is_zero()) {
    if (!closed && uniform(rng) < 0.1) return {sample_T(n, 0.0, true, rng), "disk"};
    std::vector<cplx> roots;
    const double rmax = closed ? 1.0 : 0.98;
    for (int k = 0; k < n; ++k) {
      const double r = closed && uniform(rng) < 0.2 ? 1.0 : rmax * std::sqrt(uniform(rng));
      roots.push_back(std::polar(r, uniform(rng, 0.0, kTwoPi)));
    }
    return {Polynomial::from_roots(roots, unimodular(rng)), "disk"};
  }
  const double u = uniform(rng);
  if (u < 0.4) {
    const Polynomial G = sample_T(n, lp.lambda(), false, rng);
    return {scale_argument(G, uniform(rng, 1.02, 2.0)), "scaled_T"};
  }
  if (u < 0.6 && closed) {
    double th = uniform(rng, 0.1, kPi - 0.1);
    if (uniform(rng) < 0.5) th = -th;
    const double amag = uniform(rng, 0.2, 2.0);
    // the family lands in the closed class only for a Im(c) < 0
    const double a = th > 0 ? -amag : amag;
    const double b = uniform(rng, -2.0, 2.0);
    const Polynomial P = extremal_family(n, lp.lambda(), a, b, std::polar(1.0, th));
    return {P - q_extremal(n, lp.lambda()), "extremal_family"};
  }
  for (int attempt = 0; attempt < 400; ++attempt) {
    const double rmax = uniform(rng, 0.05, 1.0);
    std::vector<cplx> roots;
    for (int k = 0; k < n; ++k) roots.push_back(std::polar(rmax * std::sqrt(uniform(rng)), uniform(rng, 0.0, kTwoPi)));
    Polynomial F = Polynomial::from_roots(roots, unimodular(rng));
    const MembershipVerdict v = in_D_third(F, lp, closed, opts);
    if (v.member && !v.indeterminate) return {std::move(F), "rejection"};
  }
  fail(ErrorCode::SamplerExhausted, "rejection budget exhausted");
}

cplx sample_point(const DomainSpec& d, Rng& rng) {
  const bool edge = d.closed() && uniform(rng) < 0.2;
  const cplx dir = unimodular(rng);
  switch (d.kind) {
    case DomainKind::UNIT_DISK_OPEN:
    case DomainKind::UNIT_DISK_CLOSED: return (edge ? 1.0 : 0.999 * std::sqrt(uniform(rng))) * dir;
    case DomainKind::UNIT_CIRCLE: return dir;
    case DomainKind::OMEGA:
    case DomainKind::OMEGA_CLOSED: {
      for (;;) {
        const cplx z = (edge ? 1.0 : 0.999 * std::sqrt(uniform(rng))) * unimodular(rng);
        if (std::abs(1.0 + d.gamma * z) > 1e-6) return mobius(d.tau, d.gamma, z);
      }
    }
    case DomainKind::LIMACON_I:
    case DomainKind::LIMACON_I_CLOSED: {
      if (d.gamma == 1.0) return cplx(-uniform(rng), 0.0);
      const double rb = limacon_radius(d.gamma, true, dir);
      return rb * (edge ? 1.0 : 0.999 * std::sqrt(uniform(rng))) * dir;
    }
    case DomainKind::LIMACON_O:
    case DomainKind::LIMACON_O_CLOSED: {
      if (d.gamma == 1.0) return cplx(-1.0 - std::exponential_distribution<double>(1.0)(rng), 0.0);
      const double rb = limacon_radius(d.gamma, false, dir);
      const double t = edge ? 0.0 : 1e-3 + 0.5 * std::exponential_distribution<double>(1.0)(rng);
      return rb * (1.0 + t) * dir;
    }
    case DomainKind::COMPLEMENT: {
      const DomainSpec& in = *d.inner;
      if (in.kind != DomainKind::OMEGA && in.kind != DomainKind::OMEGA_CLOSED && in.kind != DomainKind::UNIT_DISK_OPEN &&
          in.kind != DomainKind::UNIT_DISK_CLOSED)
        fail(ErrorCode::BadParams, "complement sampling is only available for disks and Omega domains");
      const bool is_omega = in.kind == DomainKind::OMEGA || in.kind == DomainKind::OMEGA_CLOSED;
      const double g = is_omega ? in.gamma : 0.0;
      const cplx tau = is_omega ? in.tau : cplx(1.0);
      for (;;) {
        // y outside the unit disk, heavy-tailed toward the boundary
        const double r = edge ? 1.0 : 1.0 / (0.999 * std::sqrt(uniform(rng)) + 1e-9);
        const cplx y = r * unimodular(rng);
        if (std::abs(1.0 + g * y) > 1e-6) return mobius(tau, g, y);
      }
    }
  }
  return 0.0;
}

TrialReport run_suffridge_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  const LambdaParam lp(n, lambda);
  lp.require_open_right();
  const std::uint64_t stream = stream_id("suffridge", n, lp.lambda());
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    const Polynomial F = sample_T(n, lp.lambda(), false, rng);
    const Polynomial G = sample_T(n, lp.lambda(), true, rng);
    const Polynomial H = lambda_convolve(F, G, lp);
    const MembershipVerdict v = in_T(H, lp, false, ho.classes);
    TrialOutcome o = judge(v.member, v.margin, ho.indeterminate_margin,
                           witness_json(t, {{"F", F}, {"G", G}, {"H", H}}, "convolution left the open class", lp.lambda()));
    if (o.status != TrialOutcome::FAIL && t % 10 == 0 && n >= 2) {
      // only-if: a G outside the open class admits some F = Q_n(lambda; b z) with F * G outside too
      const Polynomial Gbad = sample_T_violator(n, lp.lambda(), rng);
      bool found = false;
      const Polynomial Q = q_extremal(n, lp.lambda());
      for (int j = 0; j < 64 && !found; ++j) {
        const Polynomial Fb = scale_argument(Q, std::polar(1.0, kTwoPi * j / 64));
        found = !in_T(lambda_convolve(Fb, Gbad, lp), lp, false, ho.classes).member;
      }
      if (!found) {
        o.status = TrialOutcome::FAIL;
        o.witness = witness_json(t, {{"G", Gbad}}, "no failing Q_n(lambda; bz) for a non-member G", lp.lambda());
      }
    }
    return o;
  }, threads_for(ho));
  TrialReport r = merge_outcomes("suffridge", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

TrialReport run_main_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  const LambdaParam lp(n, lambda);
  lp.require_open_right();
  const std::uint64_t stream = stream_id("main", n, lp.lambda());
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    const SampledD F = sample_D_retry(n, lp.lambda(), true, rng, ho.classes);
    const SampledD G = sample_D_retry(n, lp.lambda(), false, rng, ho.classes);
    const Polynomial H = lambda_convolve(F.F, G.F, lp);
    const MembershipVerdict v = in_D(H, lp, false, ho.classes);
    return judge(v.member, v.margin, ho.indeterminate_margin,
                 witness_json(t, {{"F", F.F}, {"G", G.F}, {"H", H}}, "F:" + F.strategy + " G:" + G.strategy, lp.lambda()));
  }, threads_for(ho));
  TrialReport r = merge_outcomes("main", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

TrialReport run_preclass_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  const LambdaParam lp(n, lambda);
  lp.require_open_right();
  const std::uint64_t stream = stream_id("preclass", n, lp.lambda());
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    const SampledD F = sample_D_retry(n, lp.lambda(), true, rng, ho.classes);
    const Polynomial f = divide_by_q(F.F, lp);
    // the hypothesis excludes pre-extremal f + zeta f*; keep only instances clearly away from it
    if (pre_extremal_gap(f) <= 1e-3) return skip();
    const double end = kTwoPi / n;
    const double mu = lp.lambda() + (end - lp.lambda()) * uniform(rng, 0.05, 0.95);
    const MembershipVerdict v = pre_class_test(f, LambdaParam(n, mu), PreClass::PD, ho.classes);
    return judge(v.member, v.margin, ho.indeterminate_margin,
                 witness_json(t, {{"f", f}}, "not in PD(mu), mu = " + std::to_string(mu), lp.lambda()));
  }, threads_for(ho));
  TrialReport r = merge_outcomes("preclass", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<double> halfplane_lambda_grid(int n) {
  std::vector<double> g;
  for (int j = 0; j < 8; ++j) g.push_back((1.0 - std::pow(4.0, -j)) * kTwoPi / n);
  return g;
}

TrialReport run_halfplane_trial(int per_side, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  const int candidates = 30 * per_side;
  const std::uint64_t stream = stream_id("halfplane", 0, 0.0);
  struct Cand {
    bool valid = false;
    bool holds = false;
    TrialOutcome outcome;
  };
  std::vector<Cand> cands(candidates);
  auto outcomes = parallel_trials(candidates, [&](int i) {
    Rng rng = make_rng(seed, stream, i);
    const int n = 2 + i % 6;
    const double s = uniform(rng, 0.02, 1.2);
    std::vector<cplx> c(n + 1);
    for (int k = 1; k < n; ++k) c[k] = s * cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    c[n] = 1.0;
    c[0] = 0.9 * uniform(rng) * unimodular(rng);
    const Polynomial f(c);
    const HalfPlaneResult hp = half_plane_criterion(f);
    if (std::abs(hp.margin) < ho.indeterminate_margin) return skip();
    bool exists = false, shaky = false;
    for (double lam : halfplane_lambda_grid(n)) {
      const LambdaParam lp(n, lam);
      const MembershipVerdict d = pre_class_test(f, lp, PreClass::PD, ho.classes);
      const MembershipVerdict t = pre_class_test(f, lp, PreClass::PT, ho.classes);
      shaky = shaky || d.indeterminate || t.indeterminate;
      if (d.member && !t.member) {
        exists = true;
        break;
      }
    }
    TrialOutcome o;
    o.margin = hp.holds ? 1.0 : -1.0;  // side marker, replaced below
    if (exists == hp.holds) o.status = TrialOutcome::PASS;
    else o.status = shaky ? TrialOutcome::INDETERMINATE : TrialOutcome::FAIL;
    if (o.status == TrialOutcome::FAIL)
      o.witness = witness_json(i, {{"f", f}}, hp.holds ? "half-plane holds but no lambda works" : "half-plane fails but some lambda works", 0.0);
    return o;
  }, threads_for(ho));
  std::vector<TrialOutcome> picked;
  int pass_side = 0, fail_side = 0;
  for (auto& o : outcomes) {
    if (o.status == TrialOutcome::SKIP) continue;
    const bool holds = o.margin > 0;
    int& cnt = holds ? pass_side : fail_side;
    if (cnt >= per_side) continue;
    ++cnt;
    o.margin = std::abs(o.margin);
    picked.push_back(o);
  }
  TrialReport r = merge_outcomes("halfplane", seed, picked);
  if (pass_side < per_side || fail_side < per_side) r.skipped += (per_side - pass_side) + (per_side - fail_side);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

namespace {

struct LimaconPart {
  DomainSpec p_dom, q_dom, target;
  bool leq;  // degree at most n, roots at infinity allowed
};

LimaconPart limacon_part(cplx tau, double gamma, int part) {
  const DomainSpec om = DomainSpec::omega(tau, gamma, false);
  const DomainSpec omc = DomainSpec::omega(tau, gamma, true);
  switch (part) {
    case 1: return {omc, DomainSpec::limacon_inner(gamma, false), om, false};
    case 2: return {om, DomainSpec::limacon_inner(gamma, true), om, false};
    case 3: return {DomainSpec::complement(om), DomainSpec::limacon_outer(gamma, false), DomainSpec::complement(omc), true};
    case 4: return {DomainSpec::complement(omc), DomainSpec::limacon_outer(gamma, true), DomainSpec::complement(omc), true};
    case 5: return {DomainSpec::limacon_inner(gamma, true), DomainSpec::limacon_inner(gamma, false), DomainSpec::limacon_inner(gamma, false), false};
    case 6: return {DomainSpec::limacon_outer(gamma, true), DomainSpec::limacon_outer(gamma, false), DomainSpec::limacon_outer(gamma, false), true};
    default: fail(ErrorCode::BadParams, "limacon part must lie in 1..6");
  }
}

Polynomial sample_poly_in(const DomainSpec& d, int n, bool leq, Rng& rng) {
  int finite = n;
  if (leq) {
    const double u = uniform(rng);
    finite = u < 0.6 ? n : (u < 0.85 ? n - 1 : n - 2);
    finite = std::max(finite, 0);
  }
  std::vector<cplx> roots;
  for (int k = 0; k < finite; ++k) roots.push_back(sample_point(d, rng));
  // keep coefficients moderate for far-out roots
  cplx lead = unimodular(rng);
  for (const cplx& r : roots)
    if (std::abs(r) > 1.0) lead /= std::abs(r);
  return Polynomial::from_roots(roots, lead, n);
}

// smallest scaled defect over the finite roots; roots at infinity are judged by the target alone
double root_margin(const Polynomial& R, const DomainSpec& target, const RootOptions& ro, bool& infinity_ok) {
  infinity_ok = true;
  if (R.exact_degree() < R.nominal_degree()) {
    const Containment c = contains_infinity(target);
    infinity_ok = c == Containment::IN;
  }
  double m = std::numeric_limits<double>::infinity();
  if (R.exact_degree() >= 1) {
    const RootSet rs = find_roots(R.with_nominal(R.exact_degree()), ro);
    for (const auto& r : rs.roots) m = std::min(m, defect(target, r.z) / std::max(1.0, std::abs(r.z)));
  }
  return m;
}

}  // namespace

TrialReport run_limacon_trial(cplx tau, double gamma, int n, int part, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  if (gamma < 0.0 || gamma >= 1.0) fail(ErrorCode::OutOfRange, "gamma must lie in [0, 1)");
  const LimaconPart lp = limacon_part(tau, gamma, part);
  const std::uint64_t stream = stream_id("limacon" + std::to_string(part) + lp.p_dom.describe(), n, gamma);
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    const int deg = n > 0 ? n : 1 + t % 8;
    const Polynomial P = sample_poly_in(lp.p_dom, deg, lp.leq, rng);
    const Polynomial Q = sample_poly_in(lp.q_dom, deg, lp.leq, rng);
    const Polynomial R = grace_szego(P, Q);
    if (R.is_zero()) return skip();
    bool inf_ok = true;
    const double m = root_margin(R, lp.target, ho.classes.roots, inf_ok);
    const std::string w = witness_json(t, {{"P", P}, {"Q", Q}, {"R", R}}, "part " + std::to_string(part), gamma);
    if (!inf_ok) return judge(false, -1.0, ho.indeterminate_margin, w);
    return judge(m > 0, std::isfinite(m) ? m : 1.0, ho.indeterminate_margin, w);
  }, threads_for(ho));
  TrialReport r = merge_outcomes("limacon_part" + std::to_string(part), seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

TrialReport run_limacon_negative(cplx tau, double gamma, int n, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  if (gamma < 0.0 || gamma >= 1.0) fail(ErrorCode::OutOfRange, "gamma must lie in [0, 1)");
  const DomainSpec om = DomainSpec::omega(tau, gamma, false);
  const DomainSpec inner = DomainSpec::limacon_inner(gamma, false);
  const std::uint64_t stream = stream_id("limacon_negative", n, gamma) ^ std::bit_cast<std::uint64_t>(tau.imag());
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    const int deg = n > 0 ? n : 1 + t % 8;
    cplx beta;
    do {
      beta = cplx(uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0));
    } while (defect(inner, beta) > -0.05 || std::abs(beta) < 0.05);
    std::vector<cplx> roots{beta};
    for (int k = 1; k < deg; ++k) roots.push_back(sample_point(inner, rng));
    const Polynomial Q = Polynomial::from_roots(roots, unimodular(rng));
    // alpha on the boundary of Omega with -alpha beta outside Omega
    cplx alpha = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int M = 256; M <= 4096 && !(best < -1e-9); M *= 2) {
      for (int j = 0; j < M; ++j) {
        const cplx z = std::polar(1.0, kTwoPi * (j + 0.5) / M);
        if (std::abs(1.0 + gamma * z) < 1e-9) continue;
        const cplx a = mobius(tau, gamma, z);
        const double d = defect(om, -a * beta) / std::max(1.0, std::abs(a * beta));
        if (d < best) {
          best = d;
          alpha = a;
        }
      }
    }
    if (!(best < -1e-9)) {
      TrialOutcome o;
      o.status = TrialOutcome::INDETERMINATE;
      return o;
    }
    const Polynomial P = counterexample_P(alpha, deg);
    const Polynomial R = grace_szego(P, Q);
    const RootSet rs = find_roots(R, ho.classes.roots);
    const cplx target = -alpha * beta;
    const Root* hit = nullptr;
    for (const auto& r : rs.roots)
      if (!hit || std::abs(r.z - target) < std::abs(hit->z - target)) hit = &r;
    const bool located = hit && std::abs(hit->z - target) <= 1e-6 * std::max(1.0, std::abs(target));
    const bool outside = hit && !accepts(om, hit->z, 0.0);
    return judge(located && outside, -best, ho.indeterminate_margin,
                 witness_json(t, {{"P", P}, {"Q", Q}, {"R", R}}, "planted root did not produce an external root", gamma));
  }, threads_for(ho));
  TrialReport r = merge_outcomes("limacon_negative", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

TrialReport run_gauss_lucas_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  const LambdaParam lp(n, lambda);
  lp.require_open_right();
  if (n < 2) fail(ErrorCode::BadParams, "n must be at least 2");
  const std::uint64_t stream = stream_id("gausslucas", n, lp.lambda());
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    const bool closed = t % 2 == 0;
    Polynomial F = (t % 4 == 3) ? sample_T(n, lp.lambda(), true, rng) : sample_D_retry(n, lp.lambda(), closed, rng, ho.classes).F;
    const Polynomial D = delta(F, lp);
    const MembershipVerdict v = in_pi_disk(D, closed, ho.classes);
    return judge(v.member, v.margin, ho.indeterminate_margin,
                 witness_json(t, {{"F", F}, {"Delta", D}}, closed ? "closed" : "open", lp.lambda()));
  }, threads_for(ho));
  TrialReport r = merge_outcomes("gausslucas", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

TrialReport run_st_biconditional_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  const LambdaParam lp(n, lambda);
  lp.require_open_right();
  if (n < 2) fail(ErrorCode::BadParams, "n must be at least 2");
  const std::uint64_t stream = stream_id("stgausslucas", n, lp.lambda());
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    Polynomial F;
    switch (t % 4) {
      case 0: F = sample_T(n, lp.lambda(), false, rng); break;
      case 1: F = lp.is_zero() ? sample_T(n, 0.0, true, rng) : sample_T_violator(n, lp.lambda(), rng); break;
      default: {
        std::vector<cplx> roots;
        for (int k = 0; k < n; ++k) roots.push_back(std::polar(uniform(rng, 0.5, 1.5), uniform(rng, 0.0, kTwoPi)));
        const Polynomial G = Polynomial::from_roots(roots);
        F = G + unimodular(rng) * n_inverse(G);
        if (F.exact_degree() < n) return skip();
      }
    }
    const MembershipVerdict left = in_T(F, lp, true, ho.classes);
    const Polynomial D = delta(F, lp);
    const MembershipVerdict right = in_pi_disk(D, true, ho.classes);
    const double m = std::min(std::abs(left.margin), std::abs(right.margin));
    return judge(left.member == right.member, m, ho.indeterminate_margin,
                 witness_json(t, {{"F", F}, {"Delta", D}}, left.member ? "in T but Delta escapes" : "not in T but Delta inside", lp.lambda()));
  }, threads_for(ho));
  TrialReport r = merge_outcomes("st_biconditional", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

TrialReport run_dichotomy_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  const LambdaParam lp(n, lambda);
  lp.require_interior();
  if (n < 2) fail(ErrorCode::BadParams, "n must be at least 2");
  const std::uint64_t stream = stream_id("dichotomy", n, lp.lambda());
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    if (t % 2 == 0) {
      // sampled members never mix circle and interior roots
      const SampledD s = sample_D_retry(n, lp.lambda(), true, rng, ho.classes);
      const RootSet rs = find_roots(s.F, ho.classes.roots);
      const bool pure = rs.all(CircleTag::ON) || rs.all(CircleTag::INSIDE);
      return judge(pure, 1.0, ho.indeterminate_margin, witness_json(t, {{"F", s.F}}, "member with mixed roots", lp.lambda()));
    }
    const int on = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::vector<cplx> roots;
    for (int k = 0; k < n; ++k)
      roots.push_back(std::polar(k < on ? 1.0 : 0.95 * std::sqrt(uniform(rng)), uniform(rng, 0.0, kTwoPi)));
    const Polynomial F = Polynomial::from_roots(roots, unimodular(rng));
    const MembershipVerdict v = in_D(F, lp, true, ho.classes);
    const MembershipVerdict o = in_D_oracle(F, lp, true, ho.classes);
    const bool ok = !v.member && (!o.member || o.indeterminate);
    return judge(ok, 1.0, ho.indeterminate_margin, witness_json(t, {{"F", F}}, "mixed roots accepted", lp.lambda()));
  }, threads_for(ho));
  TrialReport r = merge_outcomes("dichotomy", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

TrialReport run_monotonicity_trial(int n, int trials, std::uint64_t seed, const HarnessOptions& ho) {
  const auto t0 = Clock::now();
  const std::uint64_t stream = stream_id("monotonicity", n, 0.0);
  auto outcomes = parallel_trials(trials, [&](int t) {
    Rng rng = make_rng(seed, stream, t);
    const double mu = uniform(rng, 0.1, 0.95) * kTwoPi / n;
    const SampledD s = sample_D_retry(n, mu, true, rng, ho.classes);
    const MembershipVerdict top = in_D(s.F, LambdaParam(n, mu), true, ho.classes);
    if (!top.member || top.indeterminate) return skip();
    double worst = std::numeric_limits<double>::infinity();
    bool ok = true;
    bool shaky = false;
    for (int j = 0; j < 6; ++j) {
      const double lam = mu * j / 6;
      const MembershipVerdict v = in_D(s.F, LambdaParam(n, lam), true, ho.classes);
      if (v.indeterminate) {
        shaky = true;
        continue;
      }
      worst = std::min(worst, v.margin);
      ok = ok && v.member;
    }
    TrialOutcome o = judge(ok, std::isfinite(worst) ? worst : 1.0, 0.0,
                           witness_json(t, {{"F", s.F}}, "lost membership at smaller lambda, mu = " + std::to_string(mu), mu));
    if (ok && shaky) o.status = TrialOutcome::PASS;
    return o;
  }, threads_for(ho));
  TrialReport r = merge_outcomes("monotonicity", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

TrialReport run_herglotz_trial(int steps, std::uint64_t seed) {
  const auto t0 = Clock::now();
  if (steps < 1 || steps > 12) fail(ErrorCode::OutOfRange, "steps must lie in [1, 12]");
  const auto a = cayley_coefficients((1 << steps) + 1);
  auto f = [](cplx z) { return (1.0 + z) / (1.0 - z); };
  std::vector<TrialOutcome> outcomes;
  double prev = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= steps; ++j) {
    const ScheduleStep s = default_schedule(j);
    TrialOutcome o;
    try {
      const HerglotzApproximant h = build_approximant(a, s.k, s.r);
      bool pos = true;
      for (double w : h.weights) pos = pos && w > 0;
      const double e = sup_error(h, f, 0.5);
      const bool ok = pos && std::abs(h.weight_sum - 1.0) <= 1e-10 && std::abs(h.boundary_sum - 2.0 * h.m) <= 1e-9 * 2.0 * h.m &&
                      e < prev;
      o.status = ok ? TrialOutcome::PASS : TrialOutcome::FAIL;
      o.margin = prev - e;
      if (!ok) o.witness = json{{"step", j}, {"k", s.k}, {"r", s.r}, {"error", e}}.dump();
      prev = e;
    } catch (const Error& err) {
      o.status = TrialOutcome::FAIL;
      o.margin = -1.0;
      o.witness = json{{"step", j}, {"k", s.k}, {"r", s.r}, {"error", err.what()}}.dump();
    }
    outcomes.push_back(o);
  }
  TrialReport r = merge_outcomes("herglotz", seed, outcomes);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

double estimate_disk_radius(int n, double lambda, int samples, std::uint64_t seed, const ClassOptions& opts) {
  const LambdaParam lp(n, lambda);
  lp.require_interior();
  const std::uint64_t stream = stream_id("disk_radius", n, lp.lambda());
  auto all_members = [&](double r) {
    for (int i = 0; i < samples; ++i) {
      Rng rng = make_rng(seed, stream, i);
      std::vector<cplx> roots;
      for (int k = 0; k < n; ++k) roots.push_back(std::polar(r * (i % 2 ? 1.0 : std::sqrt(uniform(rng))), uniform(rng, 0.0, kTwoPi)));
      if (!in_D(Polynomial::from_roots(roots), lp, false, opts).member) return false;
    }
    return true;
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 20; ++it) {
    const double mid = 0.5 * (lo + hi);
    (all_members(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace zerogeo
