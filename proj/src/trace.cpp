#include "igm/trace.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace igm {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string cell(double v) { return std::isnan(v) ? std::string() : format_double(v); }

double parse_cell(const std::string& s) {
  if (s.empty()) return kNaN;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw std::invalid_argument("bad numeric cell: " + s);
  return v;
}

std::int64_t parse_int(const std::string& s) {
  return static_cast<std::int64_t>(std::strtoll(s.c_str(), nullptr, 10));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

OrderedJson json_num(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

double json_double(const OrderedJson& j) {
  if (j.is_null()) return kNaN;
  return j.get<double>();
}

}  // namespace

std::vector<double> RunTrace::gap_series() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.f_gap);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const std::vector<std::string> kTraceColumns = {
    "k",       "f_gap",   "grad_norm", "dist_sq_to_opt",   "L_k",        "p_k",      "alpha_k",
    "A_k",     "delta_k", "oracle_calls_cum", "bound_est1", "bound_est2", "bound_istm"};

void write_csv(const RunTrace& trace, std::ostream& out) {
  const RunMeta& m = trace.meta;
  out << "# solver=" << m.solver << "\n";
  out << "# objective=" << m.objective << "\n";
  out << "# n=" << m.n << "\n";
  out << "# L=" << cell(m.L) << "\n";
  out << "# mu=" << cell(m.mu) << "\n";
  out << "# epsilon_hat=" << cell(m.epsilon_hat) << "\n";
  out << "# a=" << cell(m.a) << "\n";
  out << "# p=" << cell(m.p) << "\n";
  out << "# seed=" << m.seed << "\n";
  out << "# policy=" << m.policy << "\n";
  out << "# c_hat=" << cell(m.c_hat) << "\n";
  out << "# eta=" << cell(m.eta) << "\n";
  out << "# timestamp=" << (m.timestamp.empty() ? utc_now() : m.timestamp) << "\n";
  for (const auto& r : trace.restarts) {
    out << "# restart=" << r.index << "," << r.k_end << "," << format_double(r.f_gap) << ","
        << cell(r.dist_sq_to_opt) << "\n";
  }
  for (std::size_t c = 0; c < kTraceColumns.size(); ++c)
    out << kTraceColumns[c] << (c + 1 < kTraceColumns.size() ? "," : "\n");
  for (const auto& r : trace.rows) {
    out << r.k << "," << cell(r.f_gap) << "," << cell(r.grad_norm) << ","
        << cell(r.dist_sq_to_opt) << "," << cell(r.L_k) << "," << cell(r.p_k) << ","
        << cell(r.alpha_k) << "," << cell(r.A_k) << "," << cell(r.delta_k) << ","
        << r.oracle_calls_cum << "," << cell(r.bound_est1) << "," << cell(r.bound_est2) << ","
        << cell(r.bound_istm) << "\n";
  }
}

RunTrace read_csv(std::istream& in) {
  RunTrace trace;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const std::string body = line.substr(2);
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("malformed metadata line: " + line);
      const std::string key = body.substr(0, eq);
      const std::string value = body.substr(eq + 1);
      RunMeta& m = trace.meta;
      if (key == "solver") m.solver = value;
      else if (key == "objective") m.objective = value;
      else if (key == "n") m.n = parse_int(value);
      else if (key == "L") m.L = parse_cell(value);
      else if (key == "mu") m.mu = parse_cell(value);
      else if (key == "epsilon_hat") m.epsilon_hat = parse_cell(value);
      else if (key == "a") m.a = parse_cell(value);
      else if (key == "p") m.p = parse_cell(value);
      else if (key == "seed") m.seed = static_cast<std::uint64_t>(std::strtoull(value.c_str(), nullptr, 10));
      else if (key == "policy") m.policy = value;
      else if (key == "c_hat") m.c_hat = parse_cell(value);
      else if (key == "eta") m.eta = parse_cell(value);
      else if (key == "timestamp") m.timestamp = value;
      else if (key == "restart") {
        const auto f = split(value, ',');
        if (f.size() != 4) throw std::invalid_argument("malformed restart line: " + line);
        trace.restarts.push_back(
            RestartSummary{parse_int(f[0]), parse_int(f[1]), parse_cell(f[2]), parse_cell(f[3])});
      } else {
        throw std::invalid_argument("unknown metadata key: " + key);
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;  // fixed column order; the header is informational
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != kTraceColumns.size())
      throw std::invalid_argument("row with wrong field count: " + line);
    TraceRow r;
    r.k = parse_int(f[0]);
    r.f_gap = parse_cell(f[1]);
    r.grad_norm = parse_cell(f[2]);
    r.dist_sq_to_opt = parse_cell(f[3]);
    r.L_k = parse_cell(f[4]);
    r.p_k = parse_cell(f[5]);
    r.alpha_k = parse_cell(f[6]);
    r.A_k = parse_cell(f[7]);
    r.delta_k = parse_cell(f[8]);
    r.oracle_calls_cum = parse_int(f[9]);
    r.bound_est1 = parse_cell(f[10]);
    r.bound_est2 = parse_cell(f[11]);
    r.bound_istm = parse_cell(f[12]);
    trace.rows.push_back(std::move(r));
  }
  return trace;
}

namespace {

std::string sidecar_path(const std::string& path) {
  const std::string suffix = ".csv";
  std::string stem = path;
  if (stem.size() > suffix.size() && stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0)
    stem.resize(stem.size() - suffix.size());
  return stem + ".triplets.csv";
}

}  // namespace

void write_triplets_csv(const TraceTriplets& triplets, std::ostream& out) {
  const std::int64_t n = triplets.empty() ? 0 : triplets[0].x.size();
  out << "# n=" << n << "\n";
  out << "f";
  for (std::int64_t i = 0; i < n; ++i) out << ",x" << i;
  for (std::int64_t i = 0; i < n; ++i) out << ",g" << i;
  out << "\n";
  for (const auto& t : triplets) {
    out << format_double(t.f);
    for (std::int64_t i = 0; i < n; ++i) out << "," << format_double(t.x[i]);
    for (std::int64_t i = 0; i < n; ++i) out << "," << format_double(t.g[i]);
    out << "\n";
  }
}

TraceTriplets read_triplets_csv(std::istream& in) {
  TraceTriplets out;
  std::string line;
  std::int64_t n = -1;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# n=", 0) == 0) {
      n = parse_int(line.substr(4));
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    if (n < 0) throw std::invalid_argument("triplets file missing the dimension line");
    const auto f = split(line, ',');
    if (static_cast<std::int64_t>(f.size()) != 1 + 2 * n)
      throw std::invalid_argument("triplet row with wrong field count");
    Triplet t;
    t.f = parse_cell(f[0]);
    t.x.resize(n);
    t.g.resize(n);
    for (std::int64_t i = 0; i < n; ++i) {
      t.x[i] = parse_cell(f[1 + i]);
      t.g[i] = parse_cell(f[1 + n + i]);
    }
    out.push_back(std::move(t));
  }
  return out;
}

void write_csv_file(const RunTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(trace, out);
  if (!trace.triplets.empty()) {
    std::ofstream side(sidecar_path(path));
    if (!side) throw std::runtime_error("cannot open for writing: " + sidecar_path(path));
    write_triplets_csv(trace.triplets, side);
  }
}

RunTrace read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  RunTrace trace = read_csv(in);
  std::ifstream side(sidecar_path(path));
  if (side) trace.triplets = read_triplets_csv(side);
  return trace;
}

std::string write_json(const RunTrace& trace) {
  const RunMeta& m = trace.meta;
  OrderedJson j;
  j["meta"] = {{"solver", m.solver},
               {"objective", m.objective},
               {"n", m.n},
               {"L", json_num(m.L)},
               {"mu", json_num(m.mu)},
               {"epsilon_hat", json_num(m.epsilon_hat)},
               {"a", json_num(m.a)},
               {"p", json_num(m.p)},
               {"seed", m.seed},
               {"policy", m.policy},
               {"c_hat", json_num(m.c_hat)},
               {"eta", json_num(m.eta)},
               {"timestamp", m.timestamp.empty() ? utc_now() : m.timestamp}};
  j["rows"] = OrderedJson::array();
  for (const auto& r : trace.rows) {
    j["rows"].push_back({{"k", r.k},
                         {"f_gap", json_num(r.f_gap)},
                         {"grad_norm", json_num(r.grad_norm)},
                         {"dist_sq_to_opt", json_num(r.dist_sq_to_opt)},
                         {"L_k", json_num(r.L_k)},
                         {"p_k", json_num(r.p_k)},
                         {"alpha_k", json_num(r.alpha_k)},
                         {"A_k", json_num(r.A_k)},
                         {"delta_k", json_num(r.delta_k)},
                         {"oracle_calls_cum", r.oracle_calls_cum},
                         {"bound_est1", json_num(r.bound_est1)},
                         {"bound_est2", json_num(r.bound_est2)},
                         {"bound_istm", json_num(r.bound_istm)}});
  }
  j["restarts"] = OrderedJson::array();
  for (const auto& r : trace.restarts) {
    j["restarts"].push_back({{"index", r.index},
                             {"k_end", r.k_end},
                             {"f_gap", json_num(r.f_gap)},
                             {"dist_sq_to_opt", json_num(r.dist_sq_to_opt)}});
  }
  j["triplets"] = OrderedJson::array();
  for (const auto& t : trace.triplets) {
    OrderedJson x = OrderedJson::array(), g = OrderedJson::array();
    for (Eigen::Index i = 0; i < t.x.size(); ++i) x.push_back(t.x[i]);
    for (Eigen::Index i = 0; i < t.g.size(); ++i) g.push_back(t.g[i]);
    j["triplets"].push_back({{"f", t.f}, {"x", std::move(x)}, {"g", std::move(g)}});
  }
  return j.dump(2) + "\n";
}

RunTrace read_json(const std::string& text) {
  const OrderedJson j = OrderedJson::parse(text);
  RunTrace trace;
  const auto& jm = j.at("meta");
  RunMeta& m = trace.meta;
  m.solver = jm.at("solver").get<std::string>();
  m.objective = jm.at("objective").get<std::string>();
  m.n = jm.at("n").get<std::int64_t>();
  m.L = json_double(jm.at("L"));
  m.mu = json_double(jm.at("mu"));
  m.epsilon_hat = json_double(jm.at("epsilon_hat"));
  m.a = json_double(jm.at("a"));
  m.p = json_double(jm.at("p"));
  m.seed = jm.at("seed").get<std::uint64_t>();
  m.policy = jm.at("policy").get<std::string>();
  m.c_hat = json_double(jm.at("c_hat"));
  m.eta = json_double(jm.at("eta"));
  m.timestamp = jm.at("timestamp").get<std::string>();
  for (const auto& jr : j.at("rows")) {
    TraceRow r;
    r.k = jr.at("k").get<std::int64_t>();
    r.f_gap = json_double(jr.at("f_gap"));
    r.grad_norm = json_double(jr.at("grad_norm"));
    r.dist_sq_to_opt = json_double(jr.at("dist_sq_to_opt"));
    r.L_k = json_double(jr.at("L_k"));
    r.p_k = json_double(jr.at("p_k"));
    r.alpha_k = json_double(jr.at("alpha_k"));
    r.A_k = json_double(jr.at("A_k"));
    r.delta_k = json_double(jr.at("delta_k"));
    r.oracle_calls_cum = jr.at("oracle_calls_cum").get<std::int64_t>();
    r.bound_est1 = json_double(jr.at("bound_est1"));
    r.bound_est2 = json_double(jr.at("bound_est2"));
    r.bound_istm = json_double(jr.at("bound_istm"));
    trace.rows.push_back(std::move(r));
  }
  for (const auto& jr : j.at("restarts")) {
    trace.restarts.push_back(RestartSummary{jr.at("index").get<std::int64_t>(),
                                            jr.at("k_end").get<std::int64_t>(),
                                            json_double(jr.at("f_gap")),
                                            json_double(jr.at("dist_sq_to_opt"))});
  }
  for (const auto& jt : j.at("triplets")) {
    Triplet t;
    t.f = jt.at("f").get<double>();
    const auto& x = jt.at("x");
    const auto& g = jt.at("g");
    t.x.resize(static_cast<Eigen::Index>(x.size()));
    t.g.resize(static_cast<Eigen::Index>(g.size()));
    for (std::size_t i = 0; i < x.size(); ++i) t.x[static_cast<Eigen::Index>(i)] = x[i].get<double>();
    for (std::size_t i = 0; i < g.size(); ++i) t.g[static_cast<Eigen::Index>(i)] = g[i].get<double>();
    trace.triplets.push_back(std::move(t));
  }
  return trace;
}

void write_json_file(const RunTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << write_json(trace);
}

RunTrace read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_json(buf.str());
}

}  // namespace igm
