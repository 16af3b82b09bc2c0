#ifndef IGM_TRACE_HPP
#define IGM_TRACE_HPP

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "igm/certify.hpp"

namespace igm {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// One record per outer iteration; columns that do not apply to a solver hold
// NaN (empty CSV cell, JSON null). All applicable entries must be finite.
struct TraceRow {
  std::int64_t k = 0;
  double f_gap = 0.0;
  double grad_norm = 0.0;       // true gradient norm at the query point
  double dist_sq_to_opt = kNaN;  // squared distance of the dual iterate to the optimum
  double L_k = kNaN;
  double p_k = kNaN;
  double alpha_k = kNaN;
  double A_k = kNaN;
  double delta_k = kNaN;
  std::int64_t oracle_calls_cum = 0;
  double bound_est1 = kNaN;
  double bound_est2 = kNaN;
  double bound_istm = kNaN;
};

struct RunMeta {
  std::string solver;
  std::string objective;
  std::int64_t n = 0;
  double L = kNaN;
  double mu = kNaN;
  double epsilon_hat = 0.0;
  double a = kNaN;
  double p = kNaN;
  std::uint64_t seed = 0;
  std::string policy = "exact";
  double c_hat = kNaN;
  double eta = kNaN;
  std::string timestamp;  // filled at write time when empty
};

struct RestartSummary {
  std::int64_t index = 0;
  std::int64_t k_end = 0;  // global row index at which the restart finished
  double f_gap = 0.0;
  double dist_sq_to_opt = kNaN;
};

struct RunTrace {
  RunMeta meta;
  std::vector<TraceRow> rows;
  std::vector<RestartSummary> restarts;
  TraceTriplets triplets;  // populated only when triplet recording is on

  std::vector<double> gap_series() const;
};

// printf %.17g: enough digits that strtod recovers the identical bits
std::string format_double(double v);

extern const std::vector<std::string> kTraceColumns;

// CSV: "# key=value" metadata lines, a fixed header, then one line per row.
// NaN serializes as an empty cell. Triplets go to a sidecar next to the file,
// named <stem>.triplets.csv.
void write_csv(const RunTrace& trace, std::ostream& out);
void write_csv_file(const RunTrace& trace, const std::string& path);
RunTrace read_csv(std::istream& in);
RunTrace read_csv_file(const std::string& path);

// JSON mirrors the CSV field names; NaN serializes as null. Triplets are
// embedded in the document.
std::string write_json(const RunTrace& trace);
void write_json_file(const RunTrace& trace, const std::string& path);
RunTrace read_json(const std::string& text);
RunTrace read_json_file(const std::string& path);

void write_triplets_csv(const TraceTriplets& triplets, std::ostream& out);
TraceTriplets read_triplets_csv(std::istream& in);

}  // namespace igm

#endif
