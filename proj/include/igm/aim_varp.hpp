#ifndef IGM_AIM_VARP_HPP
#define IGM_AIM_VARP_HPP

#include <cstdint>

#include "igm/aim.hpp"

namespace igm {

// Certificate value steering the p schedule: estimate 2 one iteration ahead,
// 4 R0^2 max_L / (k+3)^p + 2 max_delta (k+1)^{p-1}.
double compute_E(std::int64_t k, double R0, double max_L, double max_delta, double p);

struct VarPState {
  double p_k = 2.0;   // nonincreasing, floor 1
  double E = 0.0;     // last accepted certificate value, starts at L_0 R0^2
  double eta = 0.05;
  AimState aim;
};

// Variable-p variant: each outer step runs one continued AIM iteration under
// the current p_k and accepts it only if the certificate E does not increase;
// otherwise it rolls the iteration back, lowers p_k by eta (floor 1, where
// acceptance becomes unconditional), and re-executes the same iteration
// index. Accepted alpha/B/A history keeps the values computed under the p in
// force at the time. R0 <= 0 falls back to the distance to f.x_star. With
// restart_on_decrement the method instead re-initializes at the last accepted
// y after each decrement, seeding L_s with the current L_k (an alternative
// reading, no certificate claims attach to it). eps_hat = 0 reproduces
// aim_run with p = 2 iterate for iterate.
RunTrace aimvp_run(const Objective& f, const NoisePolicy& policy, const Vec& x0,
                   const FeasibleSet& Q, double L_s, double eta, double R0, std::int64_t budget,
                   double c_hat = 1000.0, bool restart_on_decrement = false,
                   bool record_triplets = false);

}  // namespace igm

#endif
