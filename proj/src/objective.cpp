#include "igm/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace igm {

namespace {

double stencil_value(const Vec& x, double L) {
  const Eigen::Index n = x.size();
  double s = x[0] * x[0] + x[n - 1] * x[n - 1];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double d = x[i] - x[i + 1];
    s += d * d;
  }
  return L / 8.0 * s - L / 4.0 * x[0];
}

Vec stencil_gradient(const Vec& x, double L) {
  const Eigen::Index n = x.size();
  Vec g(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = 2.0 * x[i];
    if (i > 0) v -= x[i - 1];
    if (i + 1 < n) v -= x[i + 1];
    g[i] = L / 4.0 * v;
  }
  g[0] -= L / 4.0;
  return g;
}

}  // namespace

Objective worst_case_function(Eigen::Index n, double L) {
  if (n < 1) throw std::invalid_argument("worst_case_function: n must be >= 1");
  if (!(L > 0.0)) throw std::invalid_argument("worst_case_function: L must be positive");
  Objective f;
  f.name = "worst-case";
  f.n = n;
  f.L = L;
  f.mu = 0.0;
  f.value = [L](const Vec& x) { return stencil_value(x, L); };
  f.gradient = [L](const Vec& x) { return stencil_gradient(x, L); };
  Vec xs(n);
  for (Eigen::Index i = 0; i < n; ++i)
    xs[i] = 1.0 - static_cast<double>(i + 1) / static_cast<double>(n + 1);
  f.x_star = xs;
  f.f_star = f.value(xs);
  return f;
}

Objective quadratic(const Vec& d, const Vec& b) {
  if (d.size() != b.size()) throw std::invalid_argument("quadratic: d and b sizes differ");
  if (d.size() == 0) throw std::invalid_argument("quadratic: empty diagonal");
  if ((d.array() <= 0.0).any())
    throw std::invalid_argument("quadratic: diagonal entries must be positive");
  Objective f;
  f.name = "quadratic";
  f.n = d.size();
  f.L = d.maxCoeff();
  f.mu = d.minCoeff();
  f.value = [d, b](const Vec& x) { return 0.5 * (d.array() * (x - b).array().square()).sum(); };
  f.gradient = [d, b](const Vec& x) { return (d.array() * (x - b).array()).matrix().eval(); };
  f.x_star = b;
  f.f_star = 0.0;
  return f;
}

Objective regularized_worst_case(Eigen::Index n, double mu, double L) {
  if (n < 1) throw std::invalid_argument("regularized_worst_case: n must be >= 1");
  if (!(mu > 0.0) || !(mu < L))
    throw std::invalid_argument("regularized_worst_case: need 0 < mu < L");
  const double Lw = L - mu;
  Objective f;
  f.name = "quadratic-reg";
  f.n = n;
  f.L = L;
  f.mu = mu;
  f.value = [Lw, mu](const Vec& x) {
    return stencil_value(x, Lw) + mu / 2.0 * x.squaredNorm();
  };
  f.gradient = [Lw, mu](const Vec& x) {
    return (stencil_gradient(x, Lw) + mu * x).eval();
  };
  // minimizer solves (Lw/4 A + mu I) x = Lw/4 e_1, A = tridiag(-1,2,-1);
  // Thomas algorithm on the constant-band system
  const double diag = Lw / 2.0 + mu, off = -Lw / 4.0;
  Vec c(n), r(n);
  c[0] = off / diag;
  r[0] = (Lw / 4.0) / diag;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double m = diag - off * c[i - 1];
    c[i] = off / m;
    r[i] = (0.0 - off * r[i - 1]) / m;
  }
  Vec xs(n);
  xs[n - 1] = r[n - 1];
  for (Eigen::Index i = n - 2; i >= 0; --i) xs[i] = r[i] - c[i] * xs[i + 1];
  f.x_star = xs;
  f.f_star = f.value(xs);
  return f;
}

Vec finite_difference_gradient(const Objective& f, const Vec& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_difference_gradient: h must be positive");
  if (x.size() != f.n)
    throw std::invalid_argument("finite_difference_gradient: dimension mismatch");
  Vec g(f.n), e = x;
  for (Eigen::Index i = 0; i < f.n; ++i) {
    const double xi = e[i];
    e[i] = xi + h;
    const double fp = f.value(e);
    e[i] = xi - h;
    const double fm = f.value(e);
    e[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace igm
