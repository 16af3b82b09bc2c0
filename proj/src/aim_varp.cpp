#include "igm/aim_varp.hpp"

#include <cmath>
#include <stdexcept>

namespace igm {

double compute_E(std::int64_t k, double R0, double max_L, double max_delta, double p) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (!(R0 >= 0.0)) throw std::invalid_argument("R0 must be nonnegative");
  if (!(max_L > 0.0)) throw std::invalid_argument("max_L must be positive");
  if (!(max_delta >= 0.0)) throw std::invalid_argument("max_delta must be nonnegative");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  const double kk = static_cast<double>(k);
  return 4.0 * R0 * R0 * max_L / std::pow(kk + 3.0, p) +
         2.0 * max_delta * std::pow(kk + 1.0, p - 1.0);
}

RunTrace aimvp_run(const Objective& f, const NoisePolicy& policy, const Vec& x0,
                   const FeasibleSet& Q, double L_s, double eta, double R0, std::int64_t budget,
                   double c_hat, bool restart_on_decrement, bool record_triplets) {
  if (!(L_s > 0.0)) throw std::invalid_argument("L_s must be positive");
  if (!(eta > 0.0) || !(eta <= 1.0)) throw std::invalid_argument("eta must lie in (0, 1]");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (!(c_hat > 0.0)) throw std::invalid_argument("c_hat must be positive");
  if (policy.kind != NoiseKind::exact && policy.epsilon_hat >= 1.0 - 1e-9)
    throw std::invalid_argument("epsilon_hat must be < 1 for noisy policies");

  NoisyOracle oracle(f, policy, f.x_star);
  const DeltaRule rule{policy.epsilon_hat, c_hat};

  VarPState vst;
  vst.eta = eta;
  vst.aim = aim_init(f, oracle, x0, Q, L_s, rule, 2.0);

  if (R0 <= 0.0) {
    if (!f.x_star) throw std::invalid_argument("R0 must be positive when the optimum is unknown");
    R0 = (vst.aim.x0 - *f.x_star).norm();
  }
  vst.E = vst.aim.L * R0 * R0;
  double h_star = f.x_star ? 0.5 * (vst.aim.x0 - *f.x_star).squaredNorm() : kNaN;

  RunTrace trace;
  trace.meta.solver = "aimvp";
  trace.meta.objective = f.name;
  trace.meta.n = f.n;
  trace.meta.L = f.L;
  trace.meta.mu = f.mu;
  trace.meta.epsilon_hat = policy.epsilon_hat;
  trace.meta.p = 2.0;
  trace.meta.seed = policy.seed;
  trace.meta.policy = noise_kind_name(policy.kind);
  trace.meta.c_hat = c_hat;
  trace.meta.eta = eta;

  auto push_row = [&](std::int64_t global_k, double E_value) {
    const AimState& st = vst.aim;
    TraceRow row;
    row.k = global_k;
    row.f_gap = f.gap(st.y);
    row.grad_norm = f.gradient(st.x).norm();
    if (f.x_star) row.dist_sq_to_opt = (st.z - *f.x_star).squaredNorm();
    row.L_k = st.L;
    row.p_k = vst.p_k;
    row.alpha_k = st.alphas.back();
    row.A_k = st.As.back();
    row.delta_k = st.delta;
    row.oracle_calls_cum = oracle.calls();
    if (!std::isnan(h_star))
      row.bound_est1 = certificate_estimate1(h_star, st.As.back(), st.M);
    row.bound_est2 = E_value;
    trace.rows.push_back(row);
    if (record_triplets) trace.triplets.push_back(Triplet{st.x, st.fx, f.gradient(st.x)});
  };

  push_row(0, kNaN);

  for (std::int64_t i = 0; i < budget; ++i) {
    AimState snapshot = vst.aim;
    double E_cand;
    while (true) {
      vst.aim.p = vst.p_k;
      aim_iteration(vst.aim, f, oracle, Q, rule);
      E_cand = compute_E(i, R0, vst.aim.max_L, vst.aim.max_delta, vst.p_k);
      if (E_cand <= vst.E || vst.p_k <= 1.0) break;
      vst.aim = snapshot;  // discard the iteration, keep oracle-call accounting
      vst.p_k = std::max(1.0, vst.p_k - eta);
      if (restart_on_decrement) {
        vst.aim = aim_init(f, oracle, snapshot.y, Q, snapshot.L, rule, vst.p_k);
        if (f.x_star) h_star = 0.5 * (vst.aim.x0 - *f.x_star).squaredNorm();
        snapshot = vst.aim;
      }
    }
    vst.E = E_cand;
    push_row(i + 1, E_cand);
  }

  if (record_triplets && f.x_star && f.f_star)
    trace.triplets.push_back(Triplet{*f.x_star, *f.f_star, Vec::Zero(f.n)});
  return trace;
}

}  // namespace igm
