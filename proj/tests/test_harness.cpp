#include "doctest.h"

#include <cmath>
#include <string>

#include "zerogeo/classes.hpp"
#include "zerogeo/error.hpp"
#include "zerogeo/harness.hpp"
#include "zerogeo/json_io.hpp"
#include "zerogeo/qconv.hpp"

using namespace zerogeo;

namespace {
void report(const TrialReport& r) {
  MESSAGE(r.theorem_id << ": trials " << r.trials << " failures " << r.failures << " indeterminate " << r.indeterminate
                       << " skipped " << r.skipped << " worst " << r.worst_margin << " (" << r.seconds << " s)");
  for (size_t i = 0; i < r.witnesses.size() && i < 3; ++i) MESSAGE(r.witnesses[i]);
}
}  // namespace

TEST_CASE("rng streams are reproducible and distinct") {
  Rng a = make_rng(7, 1, 2), b = make_rng(7, 1, 2), c = make_rng(7, 1, 3);
  const auto x = a(), y = b(), z = c();
  CHECK(x == y);
  CHECK(x != z);
}

TEST_CASE("parallel trials keep index order and absorb numerical errors") {
  auto out = parallel_trials(50, [](int i) {
    if (i == 17) fail(ErrorCode::NoConvergence, "boom");
    TrialOutcome o;
    o.margin = i;
    o.status = i % 7 == 3 ? TrialOutcome::FAIL : TrialOutcome::PASS;
    return o;
  }, 4);
  REQUIRE(out.size() == 50);
  CHECK(out[10].margin == 10.0);
  CHECK(out[17].status == TrialOutcome::INDETERMINATE);
  const TrialReport r = merge_outcomes("x", 1, out);
  CHECK(r.trials == 50);
  CHECK(r.failures == 6);
  CHECK(r.witnesses.size() == 6);
  CHECK(r.indeterminate == 1);
  CHECK(r.worst_margin == 0.0);
  CHECK(!r.passed());
}

TEST_CASE("accumulate and json round trip of reports") {
  TrialReport a = merge_outcomes("t", 3, {TrialOutcome{TrialOutcome::PASS, 0.5, ""}});
  TrialReport b = merge_outcomes("t", 3, {TrialOutcome{TrialOutcome::PASS, 0.2, ""}, TrialOutcome{TrialOutcome::SKIP, 0, ""}});
  accumulate(a, b);
  CHECK(a.trials == 2);
  CHECK(a.skipped == 1);
  CHECK(a.worst_margin == doctest::Approx(0.2));
  const TrialReport c = report_from_json(to_json(a));
  CHECK(c.trials == 2);
  CHECK(c.theorem_id == "t");
}

TEST_CASE("standard grid") {
  const auto g = standard_grid();
  CHECK(g.size() == 7 * 8);
  for (const auto& [n, lam] : g) {
    CHECK(n >= 2);
    CHECK(lam < kTwoPi / n);
  }
}

TEST_CASE("samplers land in their classes") {
  Rng rng = make_rng(11, 0, 0);
  for (int n = 2; n <= 6; ++n) {
    for (double frac : {0.0, 0.3, 0.8, 1.0}) {
      const double lam = frac * kTwoPi / n;
      const LambdaParam lp(n, lam);
      for (int t = 0; t < 10; ++t) {
        const Polynomial F = sample_T(n, lam, false, rng);
        CHECK(in_T(F, lp, true).member);
        if (frac < 1.0) {
          CHECK(in_T(sample_T(n, lam, true, rng), lp, false).member);
          try {
            const SampledD s = sample_D(n, lam, true, rng);
            CHECK_MESSAGE(in_D(s.F, lp, true).member, s.strategy);
            const SampledD o = sample_D(n, lam, false, rng);
            CHECK_MESSAGE(in_D(o.F, lp, false).member, o.strategy);
          } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SamplerExhausted);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(sample_T(4, kTwoPi / 4, true, rng), Error);
  CHECK_THROWS_AS(sample_D(4, kTwoPi / 4, false, rng), Error);
  CHECK(in_D(sample_D(4, kTwoPi / 4, true, rng).F, LambdaParam(4, kTwoPi / 4), true).member);
}

TEST_CASE("domain points") {
  Rng rng = make_rng(5, 0, 0);
  const DomainSpec ds[] = {DomainSpec::disk(false), DomainSpec::omega(cplx(1, 1), 0.4, true), DomainSpec::limacon_inner(0.6, true),
                           DomainSpec::limacon_outer(0.6, true), DomainSpec::complement(DomainSpec::omega(cplx(1, 1), 0.4, false))};
  for (const auto& d : ds)
    for (int i = 0; i < 200; ++i) CHECK_MESSAGE(accepts(d, sample_point(d, rng), 1e-9), d.describe());
}

TEST_CASE("small trial runs") {
  HarnessOptions ho;
  ho.threads = 4;
  for (const auto& [n, lam] : std::vector<std::pair<int, double>>{{3, 0.0}, {3, 0.9}, {5, 0.6}}) {
    auto r = run_suffridge_trial(n, lam, 20, 1, ho);
    report(r);
    CHECK(r.failures == 0);
    r = run_main_trial(n, lam, 20, 1, ho);
    report(r);
    CHECK(r.failures == 0);
    r = run_preclass_trial(n, lam, 20, 1, ho);
    report(r);
    CHECK(r.failures == 0);
    r = run_gauss_lucas_trial(n, lam, 20, 1, ho);
    report(r);
    CHECK(r.failures == 0);
    r = run_st_biconditional_trial(n, lam, 20, 1, ho);
    report(r);
    CHECK(r.failures == 0);
  }
  auto r = run_dichotomy_trial(4, 0.7, 20, 1, ho);
  report(r);
  CHECK(r.failures == 0);
  r = run_monotonicity_trial(4, 10, 1, ho);
  report(r);
  CHECK(r.failures == 0);
}

TEST_CASE("limacon parts and negative direction") {
  HarnessOptions ho;
  ho.threads = 4;
  for (int part = 1; part <= 6; ++part) {
    auto r = run_limacon_trial(cplx(1.5, 0.5), 0.5, 0, part, 40, 2, ho);
    report(r);
    CHECK(r.failures == 0);
  }
  auto r = run_limacon_negative(cplx(1.5, 0.5), 0.5, 0, 20, 2, ho);
  report(r);
  CHECK(r.failures == 0);
}

TEST_CASE("half-plane and herglotz runs") {
  HarnessOptions ho;
  ho.threads = 4;
  auto r = run_halfplane_trial(5, 3, ho);
  report(r);
  CHECK(r.failures == 0);
  CHECK(r.trials == 10);
  r = run_herglotz_trial(6, 0);
  report(r);
  CHECK(r.failures == 0);
  CHECK_THROWS_AS(run_herglotz_trial(0, 0), Error);
}

TEST_CASE("disk radius estimate is below one and above zero") {
  const double r = estimate_disk_radius(4, 0.5, 20, 1, {});
  MESSAGE("r = " << r);
  CHECK(r > 0.0);
  CHECK(r < 1.0);
}

TEST_CASE("pre-extremal gap") {
  // a sum b^k z^k with b on the circle: f + zeta f* stays geometric
  const cplx b = std::polar(1.0, 0.4);
  CHECK(pre_extremal_gap(pre_extremal(4, cplx(2.0, 1.0), b)) < 1e-9);
  // self-inversive f: f + zeta f* vanishes for one zeta
  const Polynomial s = Polynomial::from_roots({std::polar(1.0, 0.1), std::polar(1.0, 2.0), std::polar(1.0, 4.0)});
  CHECK(pre_extremal_gap(s) < 1e-9);
  // extremal family, pre-coefficients
  const int n = 4;
  const double lam = 0.7;
  const Polynomial F = extremal_family(n, lam, -1.0, 0.5, std::polar(1.0, 1.0)) - q_extremal(n, lam);
  const auto q = q_table(n, lam);
  std::vector<cplx> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = F[k] / q->values[k];
  CHECK(pre_extremal_gap(Polynomial(c)) < 1e-7);
  // generic
  CHECK(pre_extremal_gap(Polynomial({cplx(0.1), cplx(0.3, 0.2), cplx(-0.5), cplx(0.2, 0.1), cplx(1.0)})) > 1e-2);
}
