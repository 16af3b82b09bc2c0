#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "igm/objective.hpp"
#include "igm/rng.hpp"

using namespace igm;

namespace {

Vec vec1(double a) {
  Vec v(1);
  v << a;
  return v;
}

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Vec random_point(CounterRng& rng, Eigen::Index n, double scale = 1.0) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = scale * rng.next_normal();
  return v;
}

}  // namespace

TEST_CASE("quadratic examples") {
  const Objective f = quadratic(vec1(1.0), vec1(0.0));
  CHECK(f.n == 1);
  CHECK(f.L == 1.0);
  CHECK(f.mu == 1.0);
  CHECK(f.value(vec1(1.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f.gradient(vec1(1.0))[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK((*f.x_star)[0] == 0.0);
  CHECK(*f.f_star == 0.0);

  const Objective g = quadratic(vec2(2.0, 0.5), vec2(0.0, 0.0));
  CHECK(g.L == 2.0);
  CHECK(g.mu == 0.5);

  const Objective h = quadratic(vec2(1.0, 1.0), vec2(3.0, 4.0));
  CHECK(h.value(vec2(0.0, 0.0)) == doctest::Approx(12.5).epsilon(1e-15));
  CHECK(h.gap(vec2(3.0, 4.0)) == 0.0);
}

TEST_CASE("worst case instance") {
  const Objective f = worst_case_function(3, 1.0);
  CHECK(f.n == 3);
  CHECK(f.L == 1.0);
  CHECK(f.mu == 0.0);
  const Vec g0 = f.gradient(Vec::Zero(3));
  CHECK(g0[0] == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(g0[1] == 0.0);
  CHECK(g0[2] == 0.0);
  REQUIRE(f.x_star.has_value());
  CHECK((*f.x_star)[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK((*f.x_star)[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK((*f.x_star)[2] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(f.gradient(*f.x_star).norm() <= 1e-14);
  CHECK(f.gap(*f.x_star) == 0.0);
  CHECK(f.gap(Vec::Zero(3)) > 0.0);
}

TEST_CASE("worst case gradient matches value differences") {
  const Objective f = worst_case_function(20, 2.5);
  CounterRng rng(42);
  for (int t = 0; t < 20; ++t) {
    const Vec x = random_point(rng, 20);
    const Vec g = f.gradient(x);
    const Vec fd = finite_difference_gradient(f, x, 1e-5);
    CHECK((g - fd).norm() <= 1e-8 * (1.0 + g.norm()));
  }
}

TEST_CASE("regularized worst case") {
  const Objective f = regularized_worst_case(8, 0.1, 1.0);
  CHECK(f.mu == 0.1);
  CHECK(f.L == 1.0);
  REQUIRE(f.x_star.has_value());
  CHECK(f.gradient(*f.x_star).norm() <= 1e-12);

  // strong convexity: f(y) >= f(x) + <g(x), y-x> + mu/2 ||y-x||^2
  CounterRng rng(7);
  for (int t = 0; t < 40; ++t) {
    const Vec x = random_point(rng, 8, 2.0);
    const Vec y = random_point(rng, 8, 2.0);
    const double lhs = f.value(y);
    const double rhs = f.value(x) + f.gradient(x).dot(y - x) + 0.5 * f.mu * (y - x).squaredNorm();
    CHECK(lhs >= rhs - 1e-10 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("smoothness and convexity properties") {
  CounterRng rng(3);
  const Vec d = (Vec(4) << 0.5, 1.0, 2.0, 4.0).finished();
  const Objective fs[] = {worst_case_function(12, 1.0), quadratic(d, Vec::Ones(4)),
                          regularized_worst_case(12, 0.05, 1.0)};
  for (const Objective& f : fs) {
    for (int t = 0; t < 30; ++t) {
      const Vec x = random_point(rng, f.n, 3.0);
      const Vec y = random_point(rng, f.n, 3.0);
      // gradient Lipschitz bound
      CHECK((f.gradient(x) - f.gradient(y)).norm() <=
            f.L * (x - y).norm() * (1.0 + 1e-12) + 1e-12);
      // convexity via first-order lower bound
      CHECK(f.value(y) >=
            f.value(x) + f.gradient(x).dot(y - x) - 1e-10 * (1.0 + std::abs(f.value(y))));
    }
    // optimum is a global lower bound on sampled values
    for (int t = 0; t < 10; ++t)
      CHECK(f.value(random_point(rng, f.n, 2.0)) >= *f.f_star - 1e-12);
  }
}

TEST_CASE("finite difference gradient") {
  const Objective f = quadratic(vec1(1.0), vec1(0.0));
  const Vec fd = finite_difference_gradient(f, vec1(1.0), 1e-5);
  CHECK(std::abs(fd[0] - 1.0) <= 1e-9);
}

TEST_CASE("objective domain errors") {
  CHECK_THROWS_AS(worst_case_function(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(worst_case_function(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(quadratic(Vec::Ones(2), Vec::Ones(3)), std::invalid_argument);
  CHECK_THROWS_AS(quadratic(Vec(0), Vec(0)), std::invalid_argument);
  CHECK_THROWS_AS(quadratic(vec2(1.0, -1.0), vec2(0.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(regularized_worst_case(5, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regularized_worst_case(5, 0.0, 1.0), std::invalid_argument);
  const Objective f = worst_case_function(3, 1.0);
  CHECK_THROWS_AS(finite_difference_gradient(f, Vec::Zero(3), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(finite_difference_gradient(f, Vec::Zero(4), 1e-5), std::invalid_argument);
}
