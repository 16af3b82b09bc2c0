#include "igm/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace igm {

NoiseKind noise_kind_from_name(const std::string& name) {
  if (name == "exact") return NoiseKind::exact;
  if (name == "shrink") return NoiseKind::shrink;
  if (name == "random") return NoiseKind::random_sphere;
  if (name == "anti") return NoiseKind::anti_progress;
  throw std::invalid_argument("unknown noise policy: " + name);
}

std::string noise_kind_name(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::exact: return "exact";
    case NoiseKind::shrink: return "shrink";
    case NoiseKind::random_sphere: return "random";
    case NoiseKind::anti_progress: return "anti";
  }
  return "?";
}

namespace {

void check_policy(const NoisePolicy& policy, const std::optional<Vec>& target) {
  if (!(policy.epsilon_hat >= 0.0) || !(policy.epsilon_hat <= 1.0))
    throw std::invalid_argument("epsilon_hat must lie in [0, 1]");
  if (policy.kind == NoiseKind::anti_progress && !target)
    throw std::invalid_argument("anti_progress policy requires a target point");
}

Vec apply_policy(const NoisePolicy& policy, const std::optional<Vec>& target, CounterRng& rng,
                 const Vec& x, const Vec& g) {
  const double eps = policy.epsilon_hat;
  const double gn = g.norm();
  if (policy.kind == NoiseKind::exact || eps == 0.0 || gn == 0.0) return g;
  switch (policy.kind) {
    case NoiseKind::shrink:
      return (1.0 - eps) * g;
    case NoiseKind::random_sphere:
      return g + eps * gn * random_unit_vector(rng, g.size());
    case NoiseKind::anti_progress: {
      // push the iterate away from the target: the update subtracts the
      // gradient, so the noise must point toward it
      Vec d = *target - x;
      const double dn = d.norm();
      if (dn == 0.0) return (1.0 - eps) * g;  // direction undefined; stay on the ball
      return g + (eps * gn / dn) * d;
    }
    default:
      return g;
  }
}

}  // namespace

NoisyOracle::NoisyOracle(const Objective& f, NoisePolicy policy, std::optional<Vec> target)
    : f_(f), policy_(policy), target_(std::move(target)), rng_(policy.seed) {
  check_policy(policy_, target_);
}

Vec NoisyOracle::gradient(const Vec& x) {
  ++calls_;
  Vec g = f_.gradient(x);
  Vec gt = apply_policy(policy_, target_, rng_, x, g);
  if (recording_) records_.push_back(NoiseRecord{x, g, gt, gt - g});
  return gt;
}

std::pair<Vec, NoiseRecord> noisy_gradient(const Objective& f, const NoisePolicy& policy,
                                           const Vec& x, const std::optional<Vec>& target) {
  check_policy(policy, target);
  CounterRng rng(policy.seed);
  Vec g = f.gradient(x);
  Vec gt = apply_policy(policy, target, rng, x, g);
  NoiseRecord rec{x, g, gt, gt - g};
  return {gt, rec};
}

bool verify_relative_bound(const NoiseRecord& record, double epsilon_hat) {
  const double gn = record.true_gradient.norm();
  const double tol = 1e-12 * (1.0 + gn);
  if (record.theta.norm() > epsilon_hat * gn + tol) return false;
  const double rn = record.returned_gradient.norm();
  return rn >= (1.0 - epsilon_hat) * gn - tol && rn <= (1.0 + epsilon_hat) * gn + tol;
}

}  // namespace igm
