#ifndef IGM_OBJECTIVE_HPP
#define IGM_OBJECTIVE_HPP

#include <functional>
#include <optional>
#include <string>

#include <Eigen/Core>

namespace igm {

using Vec = Eigen::VectorXd;

// Smooth convex objective with known constants and (for the shipped test
// functions) a closed-form minimizer. Immutable after construction;
// evaluation is side-effect-free and thread-safe.
struct Objective {
  std::string name;
  Eigen::Index n = 0;
  double L = 0.0;   // smoothness (upper bound)
  double mu = 0.0;  // strong convexity (lower bound, 0 = merely convex)
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  std::optional<Vec> x_star;
  std::optional<double> f_star;

  double gap(const Vec& x) const { return value(x) - *f_star; }
};

// Tridiagonal quadratic lower-bound instance:
//   f(x) = L/8 (x_1^2 + sum_i (x_i - x_{i+1})^2 + x_n^2) - L/4 x_1,
// minimized at x*_i = 1 - i/(n+1). Gradient is the O(n) stencil
// L/4 (A x - e_1), A = tridiag(-1, 2, -1). f_star is evaluated at x_star
// rather than hard-coded.
Objective worst_case_function(Eigen::Index n, double L);

// f(x) = 1/2 sum_i d_i (x_i - b_i)^2 with mu = min d, L = max d, x* = b.
Objective quadratic(const Vec& d, const Vec& b);

// Strongly convex test instance: the worst-case stencil at parameter (L - mu)
// plus (mu/2)||x||^2. Stored L/mu are valid smoothness / strong-convexity
// bounds; the minimizer solves a tridiagonal system at construction.
Objective regularized_worst_case(Eigen::Index n, double mu, double L);

// Central differences, step h per coordinate; O(h^2) error on smooth f.
Vec finite_difference_gradient(const Objective& f, const Vec& x, double h);

}  // namespace igm

#endif
