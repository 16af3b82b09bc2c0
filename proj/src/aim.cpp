#include "igm/aim.hpp"

#include <cmath>
#include <stdexcept>

#include "igm/schedule.hpp"

namespace igm {

namespace {

constexpr std::int64_t kMaxDoublings = 60;

void check_common(double L_s, double p, double c_hat) {
  if (!(L_s > 0.0)) throw std::invalid_argument("L_s must be positive");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  if (!(c_hat > 0.0)) throw std::invalid_argument("c_hat must be positive");
}

}  // namespace

AimState aim_init(const Objective& f, NoisyOracle& oracle, const Vec& x0, const FeasibleSet& Q,
                  double L_s, const DeltaRule& rule, double p) {
  if (!(L_s > 0.0)) throw std::invalid_argument("L_s must be positive");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  if (x0.size() != f.n) throw std::invalid_argument("x0 dimension mismatch with objective");

  AimState st;
  st.p = p;
  st.x0 = Q.project(x0);
  st.x = st.x0;
  st.fx = f.value(st.x0);

  const Vec g = oracle.gradient(st.x0);
  const double delta0 = rule(g);

  double L = L_s;
  Vec y;
  while (true) {
    y = Q.project(st.x0 - g / L);
    const Vec d = y - st.x0;
    if (f.value(y) <= st.fx + g.dot(d) + 0.5 * L * d.squaredNorm() + delta0) break;
    if (st.doublings >= kMaxDoublings)
      throw std::runtime_error(
          "initial smoothness search exceeded 60 doublings (non-smooth or mis-specified "
          "objective)");
    L *= 2.0;
    ++st.doublings;
  }

  st.L = L;
  st.delta = delta0;
  st.alphas = {1.0 / L};
  st.Bs = {1.0 / L};
  st.As = {1.0 / L};
  st.M = delta0 / L;  // B_0 delta_0
  st.max_L = L;
  st.max_delta = delta0;
  st.dual_sum = (1.0 / L) * g;
  st.y = y;  // y^0 and z^0 coincide: alpha_0 = 1/L_0
  st.z = y;
  st.w = y;
  return st;
}

void aim_iteration(AimState& st, const Objective& f, NoisyOracle& oracle, const FeasibleSet& Q,
                   const DeltaRule& rule) {
  const std::int64_t k = st.k + 1;
  const Vec y_prev = st.y;
  double L_trial = st.L;
  std::int64_t loop_doublings = 0;
  while (true) {
    const auto [alpha, B] = aim_alpha_B(k, st.p, L_trial);
    const double tau = alpha / B;  // 1 / (alpha L) in (0, 1]
    const Vec x = tau * st.z + (1.0 - tau) * y_prev;
    const Vec g = oracle.gradient(x);
    const double delta = rule(g);
    const Vec z = Q.project(st.x0 - (st.dual_sum + alpha * g));
    const Vec w = tau * z + (1.0 - tau) * y_prev;
    const double fx = f.value(x);
    const Vec d = w - x;
    if (f.value(w) <= fx + g.dot(d) + 0.5 * L_trial * d.squaredNorm() + delta) {
      st.k = k;
      st.L = L_trial;
      st.alphas.push_back(alpha);
      st.Bs.push_back(B);
      st.As.push_back(st.As.back() + alpha);
      st.delta = delta;
      st.M += B * delta;
      st.max_L = std::max(st.max_L, L_trial);
      st.max_delta = std::max(st.max_delta, delta);
      st.dual_sum += alpha * g;
      st.x = x;
      st.fx = fx;
      st.z = z;
      st.w = w;
      const double ratio = B / st.As.back();
      st.y = ratio * w + (1.0 - ratio) * y_prev;
      return;
    }
    if (++loop_doublings > kMaxDoublings)
      throw std::runtime_error(
          "backtracking exceeded 60 doublings (non-smooth or mis-specified objective)");
    L_trial *= 2.0;
    ++st.doublings;
  }
}

double certificate_estimate1(double h_star, double A_k, double M_k) {
  if (!(A_k > 0.0)) throw std::invalid_argument("A_k must be positive");
  if (!(h_star >= 0.0)) throw std::invalid_argument("h_star must be nonnegative");
  if (!(M_k >= 0.0)) throw std::invalid_argument("M_k must be nonnegative");
  return (h_star + M_k) / A_k;
}

double certificate_estimate1(const RunTrace& trace, std::int64_t k, double h_star) {
  if (k < 0 || k >= static_cast<std::int64_t>(trace.rows.size()))
    throw std::invalid_argument("k is outside the trace");
  double M = 0.0;
  for (std::int64_t i = 0; i <= k; ++i) {
    const TraceRow& row = trace.rows[static_cast<std::size_t>(i)];
    if (row.k != i) throw std::invalid_argument("trace rows are not consecutive from 0");
    M += row.alpha_k * row.alpha_k * row.L_k * row.delta_k;
  }
  return certificate_estimate1(h_star, trace.rows[static_cast<std::size_t>(k)].A_k, M);
}

double certificate_estimate2(std::int64_t k, double R0, double max_L, double max_delta,
                             double p) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(R0 >= 0.0)) throw std::invalid_argument("R0 must be nonnegative");
  if (!(max_L > 0.0)) throw std::invalid_argument("max_L must be positive");
  if (!(max_delta >= 0.0)) throw std::invalid_argument("max_delta must be nonnegative");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  const double kk = static_cast<double>(k);
  return 4.0 * R0 * R0 * max_L / std::pow(kk + 2.0, p) +
         2.0 * max_delta * std::pow(kk, p - 1.0);
}

namespace {

void fill_aim_row(TraceRow& row, const AimState& st, const Objective& f,
                  const NoisyOracle& oracle, double h_star, double R0) {
  row.k = st.k;
  row.f_gap = f.gap(st.y);
  row.grad_norm = f.gradient(st.x).norm();
  if (f.x_star) row.dist_sq_to_opt = (st.z - *f.x_star).squaredNorm();
  row.L_k = st.L;
  row.p_k = st.p;
  row.alpha_k = st.alphas.back();
  row.A_k = st.As.back();
  row.delta_k = st.delta;
  row.oracle_calls_cum = oracle.calls();
  if (!std::isnan(h_star)) row.bound_est1 = certificate_estimate1(h_star, st.As.back(), st.M);
  if (st.k >= 1 && !std::isnan(R0))
    row.bound_est2 = certificate_estimate2(st.k, R0, st.max_L, st.max_delta, st.p);
}

}  // namespace

RunTrace aim_run(const Objective& f, const NoisePolicy& policy, const Vec& x0,
                 const FeasibleSet& Q, std::int64_t iters, double L_s, double p, double c_hat,
                 bool record_triplets) {
  check_common(L_s, p, c_hat);
  if (iters < 0) throw std::invalid_argument("iters must be nonnegative");
  if (policy.kind != NoiseKind::exact && policy.epsilon_hat >= 1.0 - 1e-9)
    throw std::invalid_argument("epsilon_hat must be < 1 for noisy policies");

  NoisyOracle oracle(f, policy, f.x_star);
  const DeltaRule rule{policy.epsilon_hat, c_hat};
  AimState st = aim_init(f, oracle, x0, Q, L_s, rule, p);

  const double h_star = f.x_star ? 0.5 * (st.x0 - *f.x_star).squaredNorm() : kNaN;
  const double R0 = f.x_star ? (st.x0 - *f.x_star).norm() : kNaN;

  RunTrace trace;
  trace.meta.solver = "aim";
  trace.meta.objective = f.name;
  trace.meta.n = f.n;
  trace.meta.L = f.L;
  trace.meta.mu = f.mu;
  trace.meta.epsilon_hat = policy.epsilon_hat;
  trace.meta.p = p;
  trace.meta.seed = policy.seed;
  trace.meta.policy = noise_kind_name(policy.kind);
  trace.meta.c_hat = c_hat;

  trace.rows.reserve(static_cast<std::size_t>(iters) + 1);
  TraceRow row0;
  fill_aim_row(row0, st, f, oracle, h_star, R0);
  trace.rows.push_back(row0);
  if (record_triplets) trace.triplets.push_back(Triplet{st.x0, st.fx, f.gradient(st.x0)});

  for (std::int64_t k = 1; k <= iters; ++k) {
    aim_iteration(st, f, oracle, Q, rule);
    TraceRow row;
    fill_aim_row(row, st, f, oracle, h_star, R0);
    trace.rows.push_back(row);
    if (record_triplets) trace.triplets.push_back(Triplet{st.x, st.fx, f.gradient(st.x)});
  }

  if (record_triplets && f.x_star && f.f_star)
    trace.triplets.push_back(Triplet{*f.x_star, *f.f_star, Vec::Zero(f.n)});
  return trace;
}

}  // namespace igm
