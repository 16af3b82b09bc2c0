#ifndef IGM_RISTM_HPP
#define IGM_RISTM_HPP

#include <cstdint>

#include "igm/istm.hpp"

namespace igm {

// Restart schedule for strongly convex problems: K restarts of N_per_restart
// steps each, every restart seeded at the previous output.
struct RestartPlan {
  std::int64_t K = 1;
  std::int64_t N_per_restart = 1;
  double a_per_restart = 1.0;  // proper_a(N_per_restart, p, epsilon_hat)
  double p = 2.0;
  double mu = 0.0;
  double L = 0.0;
  double R0 = 0.0;
  double eps_target = 0.0;
  double epsilon_hat = 0.0;
  bool admissible = false;  // epsilon_hat <= sqrt(mu / L) / 2
};

// K = ceil(log2(mu R0^2 / eps_target) + 1) clamped to >= 1,
// N_per_restart = ceil((L / mu)^(1/p)).
RestartPlan restart_schedule(double mu, double L, double R0, double eps_target, double p,
                             double epsilon_hat);

// Runs the plan with one oracle shared across restarts; exactly
// K * N_per_restart gradient calls. Rows carry global indices; per-restart
// summaries land in trace.restarts.
RunTrace ristm_run(const Objective& f, const NoisePolicy& policy, const Vec& x0,
                   const RestartPlan& plan, bool record_triplets = false);

}  // namespace igm

#endif
