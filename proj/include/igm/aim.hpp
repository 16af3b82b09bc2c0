#ifndef IGM_AIM_HPP
#define IGM_AIM_HPP

#include <cstdint>
#include <vector>

#include "igm/feasible.hpp"
#include "igm/noise.hpp"
#include "igm/objective.hpp"
#include "igm/trace.hpp"

namespace igm {

// Per-iteration inexactness slack: delta = eps_hat^2 ||g_tilde||^2 / c_hat.
// eps_hat = 0 gives the exact rule delta = 0.
struct DeltaRule {
  double epsilon_hat = 0.0;
  double c_hat = 1000.0;

  double operator()(const Vec& g_tilde) const {
    return epsilon_hat * epsilon_hat * g_tilde.squaredNorm() / c_hat;
  }
};

// Adaptive estimate-sequence method with doubling backtracking on the local
// smoothness L_k. State after k accepted iterations (k = 0 right after init).
struct AimState {
  double p = 2.0;
  std::int64_t k = 0;
  double L = 0.0;       // current L_k
  double delta = 0.0;   // accepted delta_k
  double M = 0.0;       // sum of B_i delta_i
  double max_L = 0.0;
  double max_delta = 0.0;
  double fx = 0.0;                  // f at the accepted query point x
  std::int64_t doublings = 0;       // total across init and all iterations
  std::vector<double> alphas, Bs, As;
  Vec x0;        // anchor of the dual step
  Vec dual_sum;  // sum of alpha_i * g_tilde(x^i) over accepted iterations
  Vec x, z, w, y;
};

// Estimates the initial L_0 = 2^{i_0} L_s by doubling until the descent test
// holds at y^0 = Proj_Q(x^0 - g/L), then forms alpha_0 = B_0 = A_0 = 1/L_0
// and z^0 = Proj_Q(x^0 - alpha_0 g). One oracle call. Throws after 60
// doublings (non-smooth or mis-specified objective).
AimState aim_init(const Objective& f, NoisyOracle& oracle, const Vec& x0, const FeasibleSet& Q,
                  double L_s, const DeltaRule& rule, double p);

// One accepted iteration: backtracking doubles L_k, re-querying the oracle at
// the trial point x^k each time, until
//   f(w^k) <= f(x^k) + <g_tilde, w^k - x^k> + (L_k/2) ||w^k - x^k||^2 + delta_k.
// Same 60-doubling cap per backtracking loop.
void aim_iteration(AimState& state, const Objective& f, NoisyOracle& oracle,
                   const FeasibleSet& Q, const DeltaRule& rule);

// (h_star + M_k) / A_k with h_star = ||x^0 - x*||^2 / 2.
double certificate_estimate1(double h_star, double A_k, double M_k);

// Same estimate reconstructed from a recorded trace prefix: A_k is read off
// row k and M_k = sum_{i<=k} alpha_i^2 L_i delta_i from the per-row columns.
double certificate_estimate1(const RunTrace& trace, std::int64_t k, double h_star);

// 4 R0^2 max_L / (k+2)^p + 2 max_delta k^{p-1}, valid for k >= 1.
double certificate_estimate2(std::int64_t k, double R0, double max_L, double max_delta, double p);

// iters accepted iterations from x0; rejects eps_hat >= 1 - 1e-9 for every
// policy except exact. Certificates in the trace need f.x_star (and assume it
// lies in Q); they are NaN otherwise.
RunTrace aim_run(const Objective& f, const NoisePolicy& policy, const Vec& x0,
                 const FeasibleSet& Q, std::int64_t iters, double L_s = 1.0, double p = 2.0,
                 double c_hat = 1000.0, bool record_triplets = false);

}  // namespace igm

#endif
