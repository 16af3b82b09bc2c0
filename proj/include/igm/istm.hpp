#ifndef IGM_ISTM_HPP
#define IGM_ISTM_HPP

#include <array>
#include <cstdint>

#include "igm/noise.hpp"
#include "igm/objective.hpp"
#include "igm/schedule.hpp"
#include "igm/trace.hpp"

namespace igm {

// Similar-triangles iteration with inexact gradients. One oracle call per
// step, made at the extrapolated point x^{k+1}.
struct IstmState {
  IstmSchedule schedule;
  std::int64_t k = 0;
  Vec x;  // last query point
  Vec y;  // primal output sequence
  Vec z;  // dual (mirror) sequence

  IstmState(IstmSchedule sched, Vec x0)
      : schedule(std::move(sched)), x(x0), y(x0), z(std::move(x0)) {}
};

// Extrapolated query point x^{k+1} = (A_k y^k + alpha_{k+1} z^k) / A_{k+1}.
Vec istm_next_x(IstmState& state);

// Advance one step given the (possibly inexact) gradient at istm_next_x.
IstmState istm_step(IstmState state, const Vec& g_tilde);

// N steps against a shared oracle, appending rows at global indices
// k_offset+1 .. k_offset+N. bound_istm uses 2 * dist0_sq / A_k where dist0_sq
// is the squared distance from this segment's start to the optimum (NaN
// disables the column). Returns the final state.
IstmState istm_run_segment(const Objective& f, NoisyOracle& oracle, const Vec& x0,
                           std::int64_t N, double a, double p, std::vector<TraceRow>& rows,
                           TraceTriplets* triplets, double dist0_sq, std::int64_t k_offset);

// Full run from x0 with a fresh oracle; row 0 describes the starting point.
RunTrace istm_run(const Objective& f, const NoisePolicy& policy, const Vec& x0, std::int64_t N,
                  double a, double p, bool record_triplets = false);

// A priori gap bound 16 a L R0^2 / (N+1)^p for the fixed-a schedule.
double istm_bound(std::int64_t N, double a, double L, double R0, double p);

inline constexpr std::array<double, 4> kIstmBoundProperMultipliers{16.0, 16.0, 16.0, 16.0};

// Gap bound when a = proper_a(N, p, eps_hat): the largest of the four regime
// terms, each scaled by its multiplier.
double istm_bound_proper(std::int64_t N, double L, double R0, double p, double eps_hat,
                         const std::array<double, 4>& multipliers = kIstmBoundProperMultipliers);

}  // namespace igm

#endif
