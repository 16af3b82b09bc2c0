#ifndef IGM_CERTIFY_HPP
#define IGM_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "igm/objective.hpp"

namespace igm {

struct Triplet {
  Vec x;
  double f = 0.0;
  Vec g;
};

// point/value/gradient samples of one function, optimum included when known
using TraceTriplets = std::vector<Triplet>;

struct InterpolationReport {
  bool pass = true;
  double worst_violation = 0.0;  // max over ordered pairs; <= 0 means pass
  std::int64_t witness_i = -1;
  std::int64_t witness_j = -1;
};

// Smooth-convex interpolation: data extends to an L-smooth convex function
// iff for all ordered pairs
//   f_i - f_j - <g_j, x_i - x_j> >= ||g_i - g_j||^2 / (2L).
// (The cited display omits the 1/L factor; it matches L = 1 only. The 1/(2L)
// form here is the standard condition and is what L != 1 requires.)
// Checked within tol * (1 + |f_i| + |f_j|) per pair.
InterpolationReport interpolation_check(const TraceTriplets& triplets, double L, double tol);

// slack(i,j) = lhs - rhs of the condition above, no tolerance applied;
// row i collects the pairs that constrain f_i from below
Eigen::MatrixXd interpolation_slack(const TraceTriplets& triplets, double L);

struct Plateau {
  std::int64_t index = 0;
  double level = 0.0;  // median of the series over [index, index + W]
};

// First index i where min over [i, i+W] fails to improve on min over [0, i]
// by a relative rtol; empty when the series keeps decreasing.
std::optional<Plateau> plateau_detect(const std::vector<double>& gap_series, std::int64_t W,
                                      double rtol);

// First index whose value exceeds twice the running minimum of the prefix.
std::optional<std::int64_t> divergence_onset(const std::vector<double>& gap_series);

}  // namespace igm

#endif
