#include "igm/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace igm {

namespace {

void check_domain(double p, double a, double L) {
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  if (!(a >= 1.0)) throw std::invalid_argument("a must be >= 1");
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
}

}  // namespace

double istm_alpha(std::int64_t k, double p, double a, double L) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  check_domain(p, a, L);
  return std::pow(static_cast<double>(k + 2), p - 1.0) / (2.0 * a * L);
}

double istm_A(std::int64_t k, double p, double a, double L) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  check_domain(p, a, L);
  double sum = 0.0, comp = 0.0;
  for (std::int64_t j = 0; j < k; ++j) {
    // Kahan step
    const double y = istm_alpha(j, p, a, L) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double proper_a(std::int64_t N, double p, double epsilon_hat,
                const std::array<double, 4>& m) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  if (!(epsilon_hat >= 0.0) || !(epsilon_hat <= 1.0))
    throw std::invalid_argument("epsilon_hat must lie in [0, 1]");
  for (double mi : m)
    if (!(mi >= 0.0)) throw std::invalid_argument("proper_a multipliers must be nonnegative");
  const double n = static_cast<double>(N);
  double a = m[0];
  a = std::max(a, m[1] * std::pow(n, p / 4.0) * std::sqrt(epsilon_hat));
  a = std::max(a, m[2] * std::pow(n, p / 2.0) * epsilon_hat);
  a = std::max(a, m[3] * std::pow(n, p) * epsilon_hat * epsilon_hat);
  return std::max(a, 1.0);
}

std::pair<double, double> aim_alpha_B(std::int64_t k, double p, double L_k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1 (k = 0 is the 1/L_0 case)");
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
  if (!(L_k > 0.0)) throw std::invalid_argument("L_k must be positive");
  const double alpha =
      std::pow((static_cast<double>(k) + 2.0 * p) / (2.0 * p), p - 1.0) / L_k;
  return {alpha, alpha * alpha * L_k};
}

IstmSchedule::IstmSchedule(double p, double a, double L) : p_(p), a_(a), L_(L) {
  check_domain(p, a, L);
  A_.push_back(0.0);
}

double IstmSchedule::A(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  while (static_cast<std::int64_t>(A_.size()) <= k) {
    const std::int64_t j = static_cast<std::int64_t>(A_.size()) - 1;
    const double y = alpha(j) - comp_;
    const double t = A_.back() + y;
    comp_ = (t - A_.back()) - y;
    A_.push_back(t);
  }
  return A_[static_cast<std::size_t>(k)];
}

AimSchedule::AimSchedule(double p) : p_(p) {
  if (!(p >= 1.0) || !(p <= 2.0)) throw std::invalid_argument("p must lie in [1, 2]");
}

void AimSchedule::push(double L_k) {
  if (!(L_k > 0.0)) throw std::invalid_argument("L_k must be positive");
  if (alpha_.empty()) {
    alpha_.push_back(1.0 / L_k);
    B_.push_back(1.0 / L_k);
    A_.push_back(1.0 / L_k);
    return;
  }
  auto [al, B] = aim_alpha_B(size(), p_, L_k);
  alpha_.push_back(al);
  B_.push_back(B);
  A_.push_back(A_.back() + al);
}

}  // namespace igm
