#pragma once

#include <functional>
#include <vector>

#include "zerogeo/polynomial.hpp"

namespace zerogeo {

struct HerglotzApproximant {
  int m = 0;                     // 2k
  std::vector<double> weights;   // s_1..s_m at nodes e^{2 pi i j/m}
  Polynomial P;                  // S_k(rz) + z^k (S_k(rz))^{*k}
  double boundary_sum = 0.0;     // sum_j P(e^{2 pi i j/m}), should be 2m
  double weight_sum = 0.0;
  double min_real_part = 0.0;    // min Re S_k(r e^{it}) on the positivity grid
};

HerglotzApproximant build_approximant(const std::vector<cplx>& coeffs, int k, double r);
cplx evaluate_approximant(const HerglotzApproximant& h, cplx z);

// min over the sampled unit circle of Re S_k(r e^{it})
double partial_sum_min_real(const std::vector<cplx>& coeffs, int k, double r, int samples);

// default schedule: k = 2^j, r = 1 - 2^{-j/2}
struct ScheduleStep {
  int k;
  double r;
};
ScheduleStep default_schedule(int j);

// Taylor coefficients of (1+z)/(1-z)
std::vector<cplx> cayley_coefficients(int count);

// max |f - h| over |z| = radius (the sup over the closed disk, by the maximum principle)
double sup_error(const HerglotzApproximant& h, const std::function<cplx(cplx)>& f, double radius, int samples = 512);

bool disk_limit_check(const Polynomial& p, const LambdaParam& lp, int grid);

}  // namespace zerogeo
