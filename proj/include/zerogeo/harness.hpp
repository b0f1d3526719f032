#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zerogeo/classes.hpp"
#include "zerogeo/domains.hpp"
#include "zerogeo/polynomial.hpp"

namespace zerogeo {

using Rng = std::mt19937_64;

// independent stream per (seed, stream, index) so a single trial replays in isolation
Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

struct TrialReport {
  std::string theorem_id;
  int trials = 0;
  int failures = 0;
  int indeterminate = 0;
  int skipped = 0;
  double worst_margin = 0.0;  // smallest margin among counted trials
  std::uint64_t seed = 0;
  std::vector<std::string> witnesses;  // serialized failing instances, one per failure
  double seconds = 0.0;

  double indeterminate_rate() const { return trials > 0 ? static_cast<double>(indeterminate) / trials : 0.0; }
  bool passed(double max_indeterminate_rate = 0.05) const {
    return failures == 0 && indeterminate_rate() <= max_indeterminate_rate;
  }
};

// per-trial result, merged by index
struct TrialOutcome {
  enum Status { PASS, FAIL, INDETERMINATE, SKIP } status = PASS;
  double margin = 0.0;
  std::string witness;
};

TrialReport merge_outcomes(const std::string& id, std::uint64_t seed, const std::vector<TrialOutcome>& outcomes);
void accumulate(TrialReport& into, const TrialReport& part);

// runs fn(0..count-1) on a pool; results come back in index order
std::vector<TrialOutcome> parallel_trials(int count, const std::function<TrialOutcome(int)>& fn, int threads = 0);

struct HarnessOptions {
  ClassOptions classes;
  double indeterminate_margin = 1e-6;
  int threads = 0;  // 0 = hardware concurrency
};

// n in {2..8}, lambda in {0} and j (2pi/n)/8 for j = 1..7
std::vector<std::pair<int, double>> standard_grid();

Polynomial sample_T(int n, double lambda, bool strict, Rng& rng);

struct SampledD {
  Polynomial F;
  std::string strategy;  // "scaled_T", "extremal_family", "rejection", "disk"
};
// lambda = 0 samples the explicit sets; extremal-family instances only for the closed class
SampledD sample_D(int n, double lambda, bool closed, Rng& rng, const ClassOptions& opts = {});

// random point in a domain (boundary points included with some probability for closed sets)
cplx sample_point(const DomainSpec& d, Rng& rng);

TrialReport run_suffridge_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho = {});
TrialReport run_main_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho = {});
// pre-class part: f in PDbar(lambda) with no extremal f + zeta f* lands in PD(mu) for mu > lambda
TrialReport run_preclass_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho = {});

// 0 when f + zeta f* is pre-extremal (a geometric coefficient sequence) for some unimodular zeta
double pre_extremal_gap(const Polynomial& f);

// lambda grid for the half-plane biconditional: (1 - 4^{-j}) 2pi/n, j = 0..7
std::vector<double> halfplane_lambda_grid(int n);
// collects `per_side` passing and `per_side` failing random f; checks existence of lambda with PD member, not PT member
TrialReport run_halfplane_trial(int per_side, std::uint64_t seed, const HarnessOptions& ho = {});

// part in 1..6 selects the statement of the limacon theorem
TrialReport run_limacon_trial(cplx tau, double gamma, int n, int part, int trials, std::uint64_t seed,
                              const HarnessOptions& ho = {});
// planted root outside I_gamma; alpha on the boundary of Omega such that -alpha beta is outside Omega
TrialReport run_limacon_negative(cplx tau, double gamma, int n, int trials, std::uint64_t seed, const HarnessOptions& ho = {});

TrialReport run_gauss_lucas_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho = {});
// both directions: self-inversive F is in Tbar(lambda) iff Delta F has no roots outside the closed disk
TrialReport run_st_biconditional_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho = {});

// mixed root configurations are never accepted by the closed D test
TrialReport run_dichotomy_trial(int n, double lambda, int trials, std::uint64_t seed, const HarnessOptions& ho = {});
// member of Dbar(mu) stays a member of Dbar(lambda) down a chain lambda < mu
TrialReport run_monotonicity_trial(int n, int trials, std::uint64_t seed, const HarnessOptions& ho = {});

// weights, unit sum and error decrease along the default schedule steps 1..steps
TrialReport run_herglotz_trial(int steps, std::uint64_t seed);

// bisection estimate of the largest r with every sampled root set in |z| < r inside Dbar(lambda); no correctness claim
double estimate_disk_radius(int n, double lambda, int samples, std::uint64_t seed, const ClassOptions& opts = {});

}  // namespace zerogeo
