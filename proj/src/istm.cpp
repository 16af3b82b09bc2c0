#include "igm/istm.hpp"

#include <cmath>
#include <stdexcept>

namespace igm {

Vec istm_next_x(IstmState& state) {
  const std::int64_t k = state.k;
  const double A_k = state.schedule.A(k);
  const double A_next = state.schedule.A(k + 1);
  return (A_k * state.y + state.schedule.alpha(k) * state.z) / A_next;
}

IstmState istm_step(IstmState state, const Vec& g_tilde) {
  if (g_tilde.size() != state.z.size())
    throw std::invalid_argument("gradient dimension mismatch");
  const std::int64_t k = state.k;
  const double alpha = state.schedule.alpha(k);
  const double A_k = state.schedule.A(k);
  const double A_next = state.schedule.A(k + 1);
  state.x = (A_k * state.y + alpha * state.z) / A_next;
  state.z -= alpha * g_tilde;
  state.y = (A_k * state.y + alpha * state.z) / A_next;
  state.k = k + 1;
  return state;
}

IstmState istm_run_segment(const Objective& f, NoisyOracle& oracle, const Vec& x0,
                           std::int64_t N, double a, double p, std::vector<TraceRow>& rows,
                           TraceTriplets* triplets, double dist0_sq, std::int64_t k_offset) {
  if (N < 1) throw std::invalid_argument("iteration count must be >= 1");
  if (x0.size() != f.n) throw std::invalid_argument("x0 dimension mismatch with objective");
  IstmState state(IstmSchedule(p, a, f.L), x0);
  for (std::int64_t step = 0; step < N; ++step) {
    const Vec x_next = istm_next_x(state);
    const Vec g_true = f.gradient(x_next);
    const Vec g_tilde = oracle.gradient(x_next);
    state = istm_step(std::move(state), g_tilde);

    TraceRow row;
    row.k = k_offset + step + 1;
    row.f_gap = f.gap(state.y);
    row.grad_norm = g_true.norm();
    if (f.x_star) row.dist_sq_to_opt = (state.z - *f.x_star).squaredNorm();
    row.L_k = f.L;
    row.p_k = p;
    row.alpha_k = state.schedule.alpha(step);
    row.A_k = state.schedule.A(step + 1);
    row.oracle_calls_cum = oracle.calls();
    if (!std::isnan(dist0_sq)) row.bound_istm = 2.0 * dist0_sq / row.A_k;
    rows.push_back(row);

    if (triplets) triplets->push_back(Triplet{x_next, f.value(x_next), g_true});
  }
  return state;
}

RunTrace istm_run(const Objective& f, const NoisePolicy& policy, const Vec& x0, std::int64_t N,
                  double a, double p, bool record_triplets) {
  if (x0.size() != f.n) throw std::invalid_argument("x0 dimension mismatch with objective");
  NoisyOracle oracle(f, policy, f.x_star);

  RunTrace trace;
  trace.meta.solver = "istm";
  trace.meta.objective = f.name;
  trace.meta.n = f.n;
  trace.meta.L = f.L;
  trace.meta.mu = f.mu;
  trace.meta.epsilon_hat = policy.epsilon_hat;
  trace.meta.a = a;
  trace.meta.p = p;
  trace.meta.seed = policy.seed;
  trace.meta.policy = noise_kind_name(policy.kind);

  const double dist0_sq = f.x_star ? (x0 - *f.x_star).squaredNorm() : kNaN;
  TraceRow row0;
  row0.k = 0;
  row0.f_gap = f.gap(x0);
  row0.grad_norm = f.gradient(x0).norm();
  row0.dist_sq_to_opt = dist0_sq;
  row0.L_k = f.L;
  row0.p_k = p;
  row0.A_k = 0.0;
  trace.rows.push_back(row0);
  if (record_triplets) trace.triplets.push_back(Triplet{x0, f.value(x0), f.gradient(x0)});

  trace.rows.reserve(static_cast<std::size_t>(N) + 1);
  istm_run_segment(f, oracle, x0, N, a, p, trace.rows,
                   record_triplets ? &trace.triplets : nullptr, dist0_sq, 0);

  if (record_triplets && f.x_star && f.f_star)
    trace.triplets.push_back(Triplet{*f.x_star, *f.f_star, Vec::Zero(f.n)});
  return trace;
}

double istm_bound(std::int64_t N, double a, double L, double R0, double p) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (!(a >= 1.0)) throw std::invalid_argument("a must be >= 1");
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  if (!(R0 >= 0.0)) throw std::invalid_argument("R0 must be nonnegative");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  return 16.0 * a * L * R0 * R0 / std::pow(static_cast<double>(N) + 1.0, p);
}

double istm_bound_proper(std::int64_t N, double L, double R0, double p, double eps_hat,
                         const std::array<double, 4>& multipliers) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  if (!(R0 >= 0.0)) throw std::invalid_argument("R0 must be nonnegative");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  if (!(eps_hat >= 0.0) || !(eps_hat <= 1.0))
    throw std::invalid_argument("epsilon_hat must lie in [0, 1]");
  const double n = static_cast<double>(N);
  const double LR2 = L * R0 * R0;
  double bound = multipliers[0] * LR2 / std::pow(n, p);
  bound = std::max(bound, multipliers[1] * std::sqrt(eps_hat) * LR2 / std::pow(n, 0.75 * p));
  bound = std::max(bound, multipliers[2] * eps_hat * LR2 / std::pow(n, 0.5 * p));
  bound = std::max(bound, multipliers[3] * eps_hat * eps_hat * LR2);
  return bound;
}

}  // namespace igm
