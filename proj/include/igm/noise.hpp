#ifndef IGM_NOISE_HPP
#define IGM_NOISE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "igm/objective.hpp"
#include "igm/rng.hpp"

namespace igm {

enum class NoiseKind { exact, shrink, random_sphere, anti_progress };

NoiseKind noise_kind_from_name(const std::string& name);
std::string noise_kind_name(NoiseKind kind);

struct NoisePolicy {
  NoiseKind kind = NoiseKind::exact;
  double epsilon_hat = 0.0;  // relative radius, in [0, 1]
  std::uint64_t seed = 0;    // random_sphere stream
};

struct NoiseRecord {
  Vec query_point;
  Vec true_gradient;
  Vec returned_gradient;
  Vec theta;  // returned - true
};

// Stateful oracle: owns the policy's random stream, counts calls, and can log
// them. Single-threaded per solver run; distinct runs construct distinct
// oracles.
class NoisyOracle {
 public:
  // target is the anti_progress push destination (normally x_star; the
  // policy is a test-only adversary and needs it up front)
  NoisyOracle(const Objective& f, NoisePolicy policy, std::optional<Vec> target = std::nullopt);

  Vec gradient(const Vec& x);

  const NoisePolicy& policy() const { return policy_; }
  std::int64_t calls() const { return calls_; }
  const std::vector<NoiseRecord>& records() const { return records_; }
  void set_recording(bool on) { recording_ = on; }

 private:
  const Objective& f_;
  NoisePolicy policy_;
  std::optional<Vec> target_;
  CounterRng rng_;
  std::int64_t calls_ = 0;
  bool recording_ = false;
  std::vector<NoiseRecord> records_;
};

// One-shot form of the oracle call (fresh stream each time for random_sphere).
std::pair<Vec, NoiseRecord> noisy_gradient(const Objective& f, const NoisePolicy& policy,
                                           const Vec& x,
                                           const std::optional<Vec>& target = std::nullopt);

// true iff ||theta|| <= eps*||g|| and (1-eps)||g|| <= ||g~|| <= (1+eps)||g||,
// each within additive tolerance 1e-12 * (1 + ||g||)
bool verify_relative_bound(const NoiseRecord& record, double epsilon_hat);

}  // namespace igm

#endif
