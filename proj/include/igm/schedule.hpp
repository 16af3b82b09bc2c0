#ifndef IGM_SCHEDULE_HPP
#define IGM_SCHEDULE_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace igm {

// alpha_{k+1} = (k+2)^{p-1} / (2aL), index k >= 0
double istm_alpha(std::int64_t k, double p, double a, double L);

// A_k = sum of the first k alphas (A_0 = 0); fresh compensated sum, O(k)
double istm_A(std::int64_t k, double p, double a, double L);

// step-parameter rule: max{m0, m1 N^{p/4} sqrt(eps), m2 N^{p/2} eps,
// m3 N^p eps^2}, clamped to >= 1. The m3 default of 20 comes from the fitted
// divergence-onset constant C ~ 4.5 (m3 ~ C^2).
inline constexpr std::array<double, 4> kProperAMultipliers{1.0, 1.0, 1.0, 20.0};
double proper_a(std::int64_t N, double p, double epsilon_hat,
                const std::array<double, 4>& multipliers = kProperAMultipliers);

// alpha_k = (1/L_k)((k+2p)/(2p))^{p-1} and B_k = alpha_k^2 L_k, for k >= 1
std::pair<double, double> aim_alpha_B(std::int64_t k, double p, double L_k);

// Incremental coefficient table for ISTM; caches the compensated prefix sums
// so solvers extend it one term per iteration.
class IstmSchedule {
 public:
  IstmSchedule(double p, double a, double L);

  double p() const { return p_; }
  double a() const { return a_; }
  double L() const { return L_; }

  double alpha(std::int64_t k) const { return istm_alpha(k, p_, a_, L_); }
  double A(std::int64_t k);  // extends the cache as needed

 private:
  double p_, a_, L_;
  std::vector<double> A_;  // A_[k] = A_k
  double comp_ = 0.0;      // running compensation term
};

// Coefficient chain for AIM under a realized (nondecreasing) L_k sequence;
// push one L per accepted iteration, starting with L_0.
class AimSchedule {
 public:
  explicit AimSchedule(double p);

  void push(double L_k);  // k = size(); k = 0 sets alpha_0 = B_0 = A_0 = 1/L_0

  std::int64_t size() const { return static_cast<std::int64_t>(alpha_.size()); }
  double alpha(std::int64_t k) const { return alpha_.at(k); }
  double B(std::int64_t k) const { return B_.at(k); }
  double A(std::int64_t k) const { return A_.at(k); }

 private:
  double p_;
  std::vector<double> alpha_, B_, A_;
};

}  // namespace igm

#endif
