#include "igm/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace igm {

double CounterRng::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  while (true) {
    double u = 2.0 * next_unit() - 1.0;
    double v = 2.0 * next_unit() - 1.0;
    double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      double m = std::sqrt(-2.0 * std::log(s) / s);
      spare_ = v * m;
      has_spare_ = true;
      return u * m;
    }
  }
}

Eigen::VectorXd random_unit_vector(CounterRng& rng, Eigen::Index n) {
  if (n <= 0) throw std::invalid_argument("random_unit_vector: n must be positive");
  Eigen::VectorXd u(n);
  do {
    for (Eigen::Index i = 0; i < n; ++i) u[i] = rng.next_normal();
  } while (u.norm() == 0.0);
  return u / u.norm();
}

}  // namespace igm
