#include "igm/ristm.hpp"

#include <cmath>
#include <stdexcept>

namespace igm {

RestartPlan restart_schedule(double mu, double L, double R0, double eps_target, double p,
                             double epsilon_hat) {
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  if (mu > L) throw std::invalid_argument("mu must not exceed L");
  if (!(R0 > 0.0)) throw std::invalid_argument("R0 must be positive");
  if (!(eps_target > 0.0)) throw std::invalid_argument("eps_target must be positive");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  if (!(epsilon_hat >= 0.0) || !(epsilon_hat <= 1.0))
    throw std::invalid_argument("epsilon_hat must lie in [0, 1]");

  RestartPlan plan;
  plan.N_per_restart = static_cast<std::int64_t>(std::ceil(std::pow(L / mu, 1.0 / p)));
  plan.K = static_cast<std::int64_t>(
      std::ceil(std::max(0.0, std::log2(mu * R0 * R0 / eps_target)) + 1.0));
  plan.a_per_restart = proper_a(plan.N_per_restart, p, epsilon_hat);
  plan.p = p;
  plan.mu = mu;
  plan.L = L;
  plan.R0 = R0;
  plan.eps_target = eps_target;
  plan.epsilon_hat = epsilon_hat;
  plan.admissible = epsilon_hat <= 0.5 * std::sqrt(mu / L);
  return plan;
}

RunTrace ristm_run(const Objective& f, const NoisePolicy& policy, const Vec& x0,
                   const RestartPlan& plan, bool record_triplets) {
  if (x0.size() != f.n) throw std::invalid_argument("x0 dimension mismatch with objective");
  if (!(f.mu > 0.0)) throw std::invalid_argument("objective must be strongly convex (mu > 0)");
  NoisyOracle oracle(f, policy, f.x_star);

  RunTrace trace;
  trace.meta.solver = "ristm";
  trace.meta.objective = f.name;
  trace.meta.n = f.n;
  trace.meta.L = f.L;
  trace.meta.mu = plan.mu;
  trace.meta.epsilon_hat = policy.epsilon_hat;
  trace.meta.a = plan.a_per_restart;
  trace.meta.p = plan.p;
  trace.meta.seed = policy.seed;
  trace.meta.policy = noise_kind_name(policy.kind);

  TraceRow row0;
  row0.k = 0;
  row0.f_gap = f.gap(x0);
  row0.grad_norm = f.gradient(x0).norm();
  if (f.x_star) row0.dist_sq_to_opt = (x0 - *f.x_star).squaredNorm();
  row0.L_k = f.L;
  row0.p_k = plan.p;
  row0.A_k = 0.0;
  trace.rows.push_back(row0);
  if (record_triplets) trace.triplets.push_back(Triplet{x0, f.value(x0), f.gradient(x0)});

  Vec x_cur = x0;
  for (std::int64_t r = 0; r < plan.K; ++r) {
    const double dist_sq = f.x_star ? (x_cur - *f.x_star).squaredNorm() : kNaN;
    IstmState state = istm_run_segment(f, oracle, x_cur, plan.N_per_restart,
                                       plan.a_per_restart, plan.p, trace.rows,
                                       record_triplets ? &trace.triplets : nullptr, dist_sq,
                                       r * plan.N_per_restart);
    x_cur = state.y;
    RestartSummary summary;
    summary.index = r;
    summary.k_end = (r + 1) * plan.N_per_restart;
    summary.f_gap = f.gap(x_cur);
    if (f.x_star) summary.dist_sq_to_opt = (x_cur - *f.x_star).squaredNorm();
    trace.restarts.push_back(summary);
  }

  if (record_triplets && f.x_star && f.f_star)
    trace.triplets.push_back(Triplet{*f.x_star, *f.f_star, Vec::Zero(f.n)});
  return trace;
}

}  // namespace igm
