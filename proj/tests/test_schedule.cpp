#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "igm/schedule.hpp"

using namespace igm;

TEST_CASE("istm alpha examples") {
  CHECK(istm_alpha(0, 2.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(istm_alpha(1, 2.0, 1.0, 1.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(istm_alpha(0, 1.0, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  // p = 1 is a constant step 1/(2aL)
  for (int k = 0; k < 50; ++k) CHECK(istm_alpha(k, 1.0, 2.0, 4.0) == 1.0 / 16.0);
  // scaling in a and L
  CHECK(istm_alpha(3, 2.0, 2.0, 1.0) == doctest::Approx(istm_alpha(3, 2.0, 1.0, 1.0) / 2.0));
  CHECK(istm_alpha(3, 2.0, 1.0, 10.0) == doctest::Approx(istm_alpha(3, 2.0, 1.0, 1.0) / 10.0));
}

TEST_CASE("istm A prefix sums") {
  CHECK(istm_A(0, 2.0, 1.0, 1.0) == 0.0);
  CHECK(istm_A(1, 2.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(istm_A(2, 2.0, 1.0, 1.0) == doctest::Approx(2.5).epsilon(1e-15));
  // p = 1: A_k = k/(2aL) exactly (equal summands)
  CHECK(istm_A(100, 1.0, 1.0, 1.0) == doctest::Approx(50.0).epsilon(1e-14));
}

TEST_CASE("recursive A matches closed form for p = 2") {
  // A_k = k(k+3)/(4aL); relative agreement to 1e-12 out to k = 10^4
  for (double a : {1.0, 2.0, 10.0}) {
    for (double L : {0.5, 1.0, 10.0}) {
      IstmSchedule sched(2.0, a, L);
      double worst = 0.0;
      for (std::int64_t k = 1; k <= 10000; ++k) {
        const double closed = static_cast<double>(k) * static_cast<double>(k + 3) / (4.0 * a * L);
        worst = std::max(worst, std::abs(sched.A(k) - closed) / closed);
      }
      CHECK(worst <= 1e-12);
    }
  }
}

TEST_CASE("schedule growth inequalities on a parameter grid") {
  // A_{k+1} >= a L alpha_{k+1}^2 and A_{k+1} >= (k+2)^p / (4aL)
  const double slack = 1.0 - 1e-12;
  for (double p : {1.0, 1.25, 1.5, 1.75, 2.0}) {
    for (double a : {1.0, 2.0, 10.0}) {
      for (double L : {0.5, 1.0, 10.0}) {
        IstmSchedule sched(p, a, L);
        bool ok = true;
        for (std::int64_t k = 0; k < 2000 && ok; ++k) {
          const double A_next = sched.A(k + 1);
          const double al = sched.alpha(k);
          ok = A_next >= slack * a * L * al * al &&
               A_next >= slack * std::pow(static_cast<double>(k + 2), p) / (4.0 * a * L);
        }
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("IstmSchedule caches consistently") {
  IstmSchedule sched(1.5, 2.0, 3.0);
  const double a10 = sched.A(10);
  CHECK(sched.A(5) == istm_A(5, 1.5, 2.0, 3.0));
  CHECK(sched.A(10) == a10);
  CHECK(sched.A(0) == 0.0);
  CHECK(sched.p() == 1.5);
  CHECK(sched.a() == 2.0);
  CHECK(sched.L() == 3.0);
}

TEST_CASE("proper_a examples and clamps") {
  CHECK(proper_a(100, 2.0, 0.1) == doctest::Approx(2000.0).epsilon(1e-12));
  CHECK(proper_a(16, 2.0, 1.0, {1.0, 1.0, 1.0, 1.0}) == doctest::Approx(256.0).epsilon(1e-12));
  CHECK(proper_a(1000, 2.0, 0.0) == 1.0);
  CHECK(proper_a(1, 1.0, 1e-9) == 1.0);  // clamp to >= 1
  // monotone in eps_hat and in N
  double prev = 0.0;
  for (double e : {0.0, 0.01, 0.1, 0.5, 1.0}) {
    const double v = proper_a(500, 2.0, e);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(proper_a(2000, 2.0, 0.3) >= proper_a(200, 2.0, 0.3));
}

TEST_CASE("aim alpha and B examples") {
  {
    auto [al, B] = aim_alpha_B(1, 2.0, 1.0);
    CHECK(al == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(B == doctest::Approx(25.0 / 16.0).epsilon(1e-15));
  }
  {
    auto [al, B] = aim_alpha_B(2, 2.0, 2.0);
    CHECK(al == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(B == doctest::Approx(1.125).epsilon(1e-15));
  }
  // p = 1: alpha = 1/L and B = 1/L for every k
  for (int k = 1; k < 20; ++k) {
    auto [al, B] = aim_alpha_B(k, 1.0, 1.0);
    CHECK(al == 1.0);
    CHECK(B == 1.0);
  }
}

TEST_CASE("AimSchedule chain") {
  AimSchedule sched(2.0);
  sched.push(1.0);
  CHECK(sched.alpha(0) == 1.0);
  CHECK(sched.B(0) == 1.0);
  CHECK(sched.A(0) == 1.0);
  sched.push(1.0);
  CHECK(sched.alpha(1) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(sched.A(1) == doctest::Approx(2.25).epsilon(1e-15));

  // with nondecreasing L the certificate chain keeps B_k <= A_k
  AimSchedule chain(1.5);
  double L = 0.5;
  for (int k = 0; k < 200; ++k) {
    if (k % 7 == 3) L *= 2.0;
    chain.push(L);
    CHECK(chain.B(k) <= chain.A(k) * (1.0 + 1e-12));
  }
}

TEST_CASE("schedule domain errors") {
  CHECK_THROWS_AS(istm_alpha(-1, 2.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(istm_alpha(0, 0.5, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(istm_alpha(0, 2.5, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(istm_alpha(0, 2.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(istm_alpha(0, 2.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(istm_A(-2, 2.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(proper_a(0, 2.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(proper_a(10, 2.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(proper_a(10, 2.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(proper_a(10, 2.0, 0.1, {-1.0, 1.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(aim_alpha_B(0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(aim_alpha_B(1, 2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(IstmSchedule(3.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AimSchedule(0.0), std::invalid_argument);
}
