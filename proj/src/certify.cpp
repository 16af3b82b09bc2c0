#include "igm/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace igm {

namespace {

// rows = triplets as a matrix pair (G gradients, X points) for gemm batching
void pack(const TraceTriplets& t, Eigen::MatrixXd& X, Eigen::MatrixXd& G, Eigen::VectorXd& f) {
  const auto m = static_cast<Eigen::Index>(t.size());
  if (m == 0) throw std::invalid_argument("need at least one triplet");
  const Eigen::Index n = t[0].x.size();
  X.resize(m, n);
  G.resize(m, n);
  f.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (t[i].x.size() != n || t[i].g.size() != n)
      throw std::invalid_argument("triplet dimensions must agree");
    X.row(i) = t[i].x.transpose();
    G.row(i) = t[i].g.transpose();
    f[i] = t[i].f;
  }
}

}  // namespace

Eigen::MatrixXd interpolation_slack(const TraceTriplets& triplets, double L) {
  if (L <= 0) throw std::invalid_argument("L must be positive");
  Eigen::MatrixXd X, G;
  Eigen::VectorXd f;
  pack(triplets, X, G, f);
  const auto m = X.rows();

  const Eigen::MatrixXd GX = G * X.transpose();          // GX(j,i) = <g_j, x_i>
  const Eigen::MatrixXd GG = G * G.transpose();          // <g_i, g_j>
  const Eigen::VectorXd g2 = GG.diagonal();

  Eigen::MatrixXd slack(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double lhs = f[i] - f[j] - (GX(j, i) - GX(j, j));
      const double rhs = (g2[i] - 2.0 * GG(i, j) + g2[j]) / (2.0 * L);
      slack(i, j) = lhs - rhs;
    }
  }
  return slack;
}

InterpolationReport interpolation_check(const TraceTriplets& triplets, double L, double tol) {
  if (tol < 0) throw std::invalid_argument("tol must be nonnegative");
  const Eigen::MatrixXd slack = interpolation_slack(triplets, L);
  const auto m = slack.rows();

  InterpolationReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double allowance = tol * (1.0 + std::abs(triplets[i].f) + std::abs(triplets[j].f));
      const double violation = -slack(i, j) - allowance;
      if (violation > report.worst_violation) {
        report.worst_violation = violation;
        report.witness_i = i;
        report.witness_j = j;
      }
    }
  }
  report.pass = report.worst_violation <= 0.0;
  return report;
}

std::optional<Plateau> plateau_detect(const std::vector<double>& gap_series, std::int64_t W,
                                      double rtol) {
  if (W < 1) throw std::invalid_argument("window must be positive");
  if (rtol <= 0) throw std::invalid_argument("rtol must be positive");
  const auto len = static_cast<std::int64_t>(gap_series.size());
  if (len <= W) throw std::invalid_argument("series must be longer than the window");

  double prefix_min = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i + W < len; ++i) {
    prefix_min = std::min(prefix_min, gap_series[i]);
    double window_min = std::numeric_limits<double>::infinity();
    for (std::int64_t j = i; j <= i + W; ++j) window_min = std::min(window_min, gap_series[j]);
    if (window_min >= prefix_min * (1.0 - rtol)) {
      std::vector<double> window(gap_series.begin() + i, gap_series.begin() + i + W + 1);
      std::sort(window.begin(), window.end());
      const auto w = window.size();
      const double level =
          (w % 2 == 1) ? window[w / 2] : 0.5 * (window[w / 2 - 1] + window[w / 2]);
      return Plateau{i, level};
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> divergence_onset(const std::vector<double>& gap_series) {
  double running_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < gap_series.size(); ++i) {
    if (i > 0 && gap_series[i] > 2.0 * running_min) return static_cast<std::int64_t>(i);
    running_min = std::min(running_min, gap_series[i]);
  }
  return std::nullopt;
}

}  // namespace igm
