#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "igm/istm.hpp"
#include "igm/trace.hpp"

using namespace igm;

namespace {

RunTrace sample_trace() {
  RunTrace trace;
  trace.meta.solver = "istm";
  trace.meta.objective = "worst_case";
  trace.meta.n = 3;
  trace.meta.L = 1.0;
  trace.meta.mu = 0.0;
  trace.meta.epsilon_hat = 0.25;
  trace.meta.a = 2.0;
  trace.meta.p = 1.5;
  trace.meta.seed = 42;
  trace.meta.policy = "random";
  trace.meta.timestamp = "2024-01-02T03:04:05Z";

  TraceRow r0;
  r0.k = 0;
  r0.f_gap = 1.0 / 3.0;
  r0.grad_norm = 0.1234567890123456789;
  r0.dist_sq_to_opt = 2.0;
  r0.L_k = 1.0;
  r0.p_k = 1.5;
  r0.A_k = 0.0;
  trace.rows.push_back(r0);

  TraceRow r1;
  r1.k = 1;
  r1.f_gap = 1e-300;
  r1.grad_norm = 3.0;
  r1.dist_sq_to_opt = 1.9999999999999998;
  r1.L_k = 1.0;
  r1.p_k = 1.5;
  r1.alpha_k = 0.25;
  r1.A_k = 0.25;
  r1.oracle_calls_cum = 1;
  r1.bound_istm = 16.0;
  trace.rows.push_back(r1);

  RestartSummary rs;
  rs.index = 0;
  rs.k_end = 1;
  rs.f_gap = 1e-300;
  rs.dist_sq_to_opt = 0.5;
  trace.restarts.push_back(rs);
  return trace;
}

bool rows_identical(const TraceRow& a, const TraceRow& b) {
  auto same = [](double x, double y) {
    return (std::isnan(x) && std::isnan(y)) || x == y;
  };
  return a.k == b.k && same(a.f_gap, b.f_gap) && same(a.grad_norm, b.grad_norm) &&
         same(a.dist_sq_to_opt, b.dist_sq_to_opt) && same(a.L_k, b.L_k) &&
         same(a.p_k, b.p_k) && same(a.alpha_k, b.alpha_k) && same(a.A_k, b.A_k) &&
         same(a.delta_k, b.delta_k) && a.oracle_calls_cum == b.oracle_calls_cum &&
         same(a.bound_est1, b.bound_est1) && same(a.bound_est2, b.bound_est2) &&
         same(a.bound_istm, b.bound_istm);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("format_double round trips bitwise") {
  for (double v : {1.0 / 3.0, 0.1, 1e-300, 1e300, 3.141592653589793, -0.0,
                   5e-324, 1.9999999999999998}) {
    const std::string s = format_double(v);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(back == v);
    CHECK(std::signbit(back) == std::signbit(v));
  }
}

TEST_CASE("csv round trip is exact") {
  const RunTrace trace = sample_trace();
  std::ostringstream out;
  write_csv(trace, out);
  const std::string text = out.str();

  // metadata, header, NaN-as-empty-cell conventions
  CHECK(text.find("# solver=istm\n") != std::string::npos);
  CHECK(text.find("# timestamp=2024-01-02T03:04:05Z\n") != std::string::npos);
  CHECK(text.find("# restart=0,1,") != std::string::npos);
  CHECK(text.find("k,f_gap,grad_norm,dist_sq_to_opt,L_k,p_k,alpha_k,A_k,delta_k,"
                  "oracle_calls_cum,bound_est1,bound_est2,bound_istm\n") != std::string::npos);
  CHECK(text.find(",,") != std::string::npos);  // alpha_k of row 0 is NaN

  std::istringstream in(text);
  const RunTrace back = read_csv(in);
  CHECK(back.meta.solver == trace.meta.solver);
  CHECK(back.meta.objective == trace.meta.objective);
  CHECK(back.meta.n == trace.meta.n);
  CHECK(back.meta.L == trace.meta.L);
  CHECK(back.meta.epsilon_hat == trace.meta.epsilon_hat);
  CHECK(back.meta.a == trace.meta.a);
  CHECK(back.meta.p == trace.meta.p);
  CHECK(back.meta.seed == trace.meta.seed);
  CHECK(back.meta.policy == trace.meta.policy);
  CHECK(std::isnan(back.meta.c_hat));
  CHECK(back.meta.timestamp == trace.meta.timestamp);
  REQUIRE(back.rows.size() == trace.rows.size());
  for (std::size_t i = 0; i < trace.rows.size(); ++i)
    CHECK(rows_identical(back.rows[i], trace.rows[i]));
  REQUIRE(back.restarts.size() == 1);
  CHECK(back.restarts[0].k_end == 1);
  CHECK(back.restarts[0].f_gap == 1e-300);
}

TEST_CASE("empty timestamp is filled at write time") {
  RunTrace trace = sample_trace();
  trace.meta.timestamp.clear();
  std::ostringstream out;
  write_csv(trace, out);
  const std::string text = out.str();
  const auto pos = text.find("# timestamp=");
  REQUIRE(pos != std::string::npos);
  CHECK(text[pos + 12] != '\n');  // something was written
}

TEST_CASE("json round trip is exact") {
  RunTrace trace = sample_trace();
  trace.triplets.push_back(Triplet{Vec::Ones(2), 0.5, -Vec::Ones(2)});
  const std::string text = write_json(trace);
  CHECK(text.find("null") != std::string::npos);  // NaN cell
  CHECK(text.find("\"solver\": \"istm\"") != std::string::npos);

  const RunTrace back = read_json(text);
  CHECK(back.meta.solver == trace.meta.solver);
  CHECK(back.meta.seed == trace.meta.seed);
  REQUIRE(back.rows.size() == trace.rows.size());
  for (std::size_t i = 0; i < trace.rows.size(); ++i)
    CHECK(rows_identical(back.rows[i], trace.rows[i]));
  REQUIRE(back.restarts.size() == 1);
  REQUIRE(back.triplets.size() == 1);
  CHECK(back.triplets[0].f == 0.5);
  CHECK((back.triplets[0].x - Vec::Ones(2)).norm() == 0.0);
  CHECK((back.triplets[0].g + Vec::Ones(2)).norm() == 0.0);
}

TEST_CASE("file round trip with triplet sidecar") {
  const Objective f = worst_case_function(5, 1.0);
  const RunTrace trace =
      istm_run(f, {NoiseKind::exact, 0.0, 0}, Vec::Zero(5), 8, 2.0, 2.0, true);
  const std::string path = temp_path("igm_trace_test.csv");
  write_csv_file(trace, path);
  const RunTrace back = read_csv_file(path);
  REQUIRE(back.rows.size() == trace.rows.size());
  for (std::size_t i = 0; i < trace.rows.size(); ++i)
    CHECK(rows_identical(back.rows[i], trace.rows[i]));
  REQUIRE(back.triplets.size() == trace.triplets.size());
  for (std::size_t i = 0; i < trace.triplets.size(); ++i) {
    CHECK((back.triplets[i].x - trace.triplets[i].x).norm() == 0.0);
    CHECK(back.triplets[i].f == trace.triplets[i].f);
    CHECK((back.triplets[i].g - trace.triplets[i].g).norm() == 0.0);
  }
  CHECK(std::filesystem::exists(temp_path("igm_trace_test.triplets.csv")));
  std::filesystem::remove(path);
  std::filesystem::remove(temp_path("igm_trace_test.triplets.csv"));

  const std::string jpath = temp_path("igm_trace_test.json");
  write_json_file(trace, jpath);
  const RunTrace jback = read_json_file(jpath);
  REQUIRE(jback.rows.size() == trace.rows.size());
  CHECK(jback.triplets.size() == trace.triplets.size());
  std::filesystem::remove(jpath);
}

TEST_CASE("triplet csv stream round trip") {
  TraceTriplets data;
  Triplet t;
  t.x = (Vec(3) << 0.1, -0.2, 1.0 / 3.0).finished();
  t.f = 1e-17;
  t.g = (Vec(3) << 0.0, 5e-324, -1.0).finished();
  data.push_back(t);
  std::ostringstream out;
  write_triplets_csv(data, out);
  CHECK(out.str().rfind("# n=3\n", 0) == 0);
  std::istringstream in(out.str());
  const TraceTriplets back = read_triplets_csv(in);
  REQUIRE(back.size() == 1);
  CHECK((back[0].x - t.x).norm() == 0.0);
  CHECK(back[0].f == t.f);
  CHECK((back[0].g - t.g).norm() == 0.0);
}

TEST_CASE("gap series helper") {
  const RunTrace trace = sample_trace();
  const std::vector<double> gaps = trace.gap_series();
  REQUIRE(gaps.size() == 2);
  CHECK(gaps[0] == trace.rows[0].f_gap);
  CHECK(gaps[1] == trace.rows[1].f_gap);
}

TEST_CASE("malformed input is rejected") {
  {
    std::istringstream in("# solver=istm\n# nonsense=1\nk,f_gap\n");
    CHECK_THROWS_AS(read_csv(in), std::invalid_argument);
  }
  {
    // wrong field count in a data row
    std::ostringstream out;
    write_csv(sample_trace(), out);
    std::string text = out.str();
    text += "1,2,3\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(read_csv(in), std::invalid_argument);
  }
  CHECK_THROWS_AS(read_csv_file("/nonexistent/igm.csv"), std::runtime_error);
  CHECK_THROWS_AS(read_json_file("/nonexistent/igm.json"), std::runtime_error);
  CHECK_THROWS_AS(read_json("{\"meta\": {}}"), std::exception);
}
