// Experiment runner for the inexact-gradient method library: single runs,
// parameter sweeps, trace verification, and bound curves.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "igm/aim.hpp"
#include "igm/aim_varp.hpp"
#include "igm/certify.hpp"
#include "igm/istm.hpp"
#include "igm/objective.hpp"
#include "igm/ristm.hpp"
#include "igm/schedule.hpp"
#include "igm/trace.hpp"

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string solver = "istm";
  std::string fn = "worst-case";
  std::int64_t n = 100;
  double L = 1.0;
  double mu = 0.0;  // 0 = unset
  double p = 2.0;
  double a = 2.0;
  bool auto_a = false;
  double eps_hat = 0.0;
  std::string noise = "exact";
  std::uint64_t seed = 0;
  std::int64_t iters = 300;
  double eps_target = 1e-6;
  double c_hat = 1000.0;
  double eta = 0.05;
  double L_s = 1.0;
  std::string set = "all";
  double box_lower = -1.0;
  double box_upper = 1.0;
  double ball_radius = 1.0;
  double ball_center = 0.0;
  bool vp_restart = false;
  bool record_triplets = false;
  std::string out;
  std::string format = "csv";
};

std::string out_dir_default() {
  const char* env = std::getenv("IGM_OUT_DIR");
  return (env && *env) ? env : ".";
}

std::string trim_zeros(double v) {
  std::string s = igm::format_double(v);
  return s;
}

igm::Objective build_objective(const RunConfig& cfg) {
  if (cfg.fn == "worst-case") return igm::worst_case_function(cfg.n, cfg.L);
  if (cfg.fn == "quadratic") {
    igm::Vec d(cfg.n);
    if (cfg.mu > 0.0) {
      for (std::int64_t i = 0; i < cfg.n; ++i)
        d[i] = cfg.n == 1 ? cfg.L
                          : cfg.mu + (cfg.L - cfg.mu) * static_cast<double>(i) /
                                         static_cast<double>(cfg.n - 1);
    } else {
      d.setConstant(cfg.L);
    }
    return igm::quadratic(d, igm::Vec::Ones(cfg.n));
  }
  if (cfg.fn == "quadratic-reg") {
    if (!(cfg.mu > 0.0))
      throw CLI::ValidationError("--mu: quadratic-reg requires a positive --mu");
    return igm::regularized_worst_case(cfg.n, cfg.mu, cfg.L);
  }
  throw CLI::ValidationError("--fn: unknown objective " + cfg.fn);
}

igm::FeasibleSet build_set(const RunConfig& cfg) {
  if (cfg.set == "all") return igm::FeasibleSet::whole_space();
  if (cfg.set == "box") {
    if (!(cfg.box_lower <= cfg.box_upper))
      throw CLI::ValidationError("--box-lower: must not exceed --box-upper");
    return igm::FeasibleSet::box(igm::Vec::Constant(cfg.n, cfg.box_lower),
                                 igm::Vec::Constant(cfg.n, cfg.box_upper));
  }
  if (cfg.set == "ball") {
    if (!(cfg.ball_radius > 0.0))
      throw CLI::ValidationError("--ball-radius: must be positive");
    return igm::FeasibleSet::ball(igm::Vec::Constant(cfg.n, cfg.ball_center), cfg.ball_radius);
  }
  throw CLI::ValidationError("--set: unknown feasible set " + cfg.set);
}

void validate(const RunConfig& cfg) {
  if (cfg.solver != "istm" && cfg.solver != "ristm" && cfg.solver != "aim" &&
      cfg.solver != "aimvp")
    throw CLI::ValidationError("--solver: unknown solver " + cfg.solver);
  if (!(cfg.eta > 0.0) || !(cfg.eta <= 1.0))
    throw CLI::ValidationError("--eta: must lie in (0, 1]");
  if ((cfg.solver == "istm" || cfg.solver == "ristm") && cfg.set != "all")
    throw CLI::ValidationError("--set: " + cfg.solver + " supports the whole space only");
  if (cfg.solver == "ristm" && !(cfg.mu > 0.0))
    throw CLI::ValidationError("--mu: ristm requires a positive --mu");
  if ((cfg.solver == "aim" || cfg.solver == "aimvp") && cfg.noise != "exact" &&
      cfg.eps_hat >= 1.0 - 1e-9)
    throw CLI::ValidationError("--eps-hat: must be < 1 for noisy " + cfg.solver + " runs");
  if (cfg.format != "csv" && cfg.format != "json")
    throw CLI::ValidationError("--format: unknown format " + cfg.format);
}

double effective_a(const RunConfig& cfg) {
  return cfg.auto_a ? igm::proper_a(cfg.iters, cfg.p, cfg.eps_hat) : cfg.a;
}

igm::RunTrace execute(const RunConfig& cfg) {
  validate(cfg);
  const igm::Objective f = build_objective(cfg);
  const igm::NoisePolicy policy{igm::noise_kind_from_name(cfg.noise), cfg.eps_hat, cfg.seed};
  const igm::Vec x0 = igm::Vec::Zero(cfg.n);

  if (cfg.solver == "istm")
    return igm::istm_run(f, policy, x0, cfg.iters, effective_a(cfg), cfg.p,
                         cfg.record_triplets);
  if (cfg.solver == "ristm") {
    const double R0 = (x0 - *f.x_star).norm();
    const igm::RestartPlan plan =
        igm::restart_schedule(cfg.mu, f.L, R0, cfg.eps_target, cfg.p, cfg.eps_hat);
    if (!plan.admissible)
      std::cerr << "warning: --eps-hat " << cfg.eps_hat
                << " exceeds the restart admissibility threshold "
                << 0.5 * std::sqrt(cfg.mu / f.L) << "\n";
    return igm::ristm_run(f, policy, x0, plan, cfg.record_triplets);
  }
  const igm::FeasibleSet Q = build_set(cfg);
  if (cfg.solver == "aim")
    return igm::aim_run(f, policy, x0, Q, cfg.iters, cfg.L_s, cfg.p, cfg.c_hat,
                        cfg.record_triplets);
  return igm::aimvp_run(f, policy, x0, Q, cfg.L_s, cfg.eta, 0.0, cfg.iters, cfg.c_hat,
                        cfg.vp_restart, cfg.record_triplets);
}

std::string default_filename(const RunConfig& cfg) {
  std::ostringstream name;
  name << cfg.solver << "-" << cfg.fn << "-n" << cfg.n << "-p" << trim_zeros(cfg.p);
  if (cfg.solver == "istm") name << "-a" << trim_zeros(effective_a(cfg));
  name << "-eps" << trim_zeros(cfg.eps_hat) << "-" << cfg.noise << "-seed" << cfg.seed << "."
       << cfg.format;
  return name.str();
}

void write_trace(const igm::RunTrace& trace, const std::string& path,
                 const std::string& format) {
  if (format == "json")
    igm::write_json_file(trace, path);
  else
    igm::write_csv_file(trace, path);
}

void print_run_summary(const igm::RunTrace& trace, const std::string& path) {
  const igm::TraceRow& last = trace.rows.back();
  std::cout << "trace=" << path << "\n";
  std::cout << "iterations=" << last.k << " oracle_calls=" << last.oracle_calls_cum << "\n";
  std::cout << "final_gap=" << igm::format_double(last.f_gap);
  if (!std::isnan(last.bound_istm))
    std::cout << " bound_istm=" << igm::format_double(last.bound_istm);
  if (!std::isnan(last.bound_est1))
    std::cout << " bound_est1=" << igm::format_double(last.bound_est1);
  if (!std::isnan(last.bound_est2))
    std::cout << " bound_est2=" << igm::format_double(last.bound_est2);
  std::cout << "\n";
  for (const auto& r : trace.restarts)
    std::cout << "restart=" << r.index << " k_end=" << r.k_end
              << " gap=" << igm::format_double(r.f_gap)
              << " dist_sq=" << igm::format_double(r.dist_sq_to_opt) << "\n";
}

int cmd_run(const RunConfig& cfg) {
  igm::RunTrace trace = execute(cfg);
  std::string path = cfg.out;
  if (path.empty()) path = (fs::path(out_dir_default()) / default_filename(cfg)).string();
  write_trace(trace, path, cfg.format);
  print_run_summary(trace, path);
  return 0;
}

// sweep: comma-separated lists over solver, a, p, eps-hat, noise, seed
struct SweepLists {
  std::string solver = "istm";
  std::string a = "2";
  std::string p = "2";
  std::string eps_hat = "0";
  std::string noise = "exact";
  std::string seed = "0";
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct SweepCell {
  RunConfig cfg;
  std::string label;
};

struct CellResult {
  bool ok = false;
  std::string reason;
  double final_gap = igm::kNaN;
  std::optional<igm::Plateau> plateau;
  std::optional<std::int64_t> onset;
  std::string trace_file;
};

int cmd_sweep(const RunConfig& base, const SweepLists& lists, std::int64_t workers,
              std::int64_t plateau_window, double plateau_rtol, const std::string& out_dir_flag,
              const std::string& summary_flag) {
  const std::string out_dir = out_dir_flag.empty() ? out_dir_default() : out_dir_flag;
  fs::create_directories(out_dir);

  std::vector<SweepCell> cells;
  for (const auto& solver : split_list(lists.solver))
    for (const auto& a : split_list(lists.a))
      for (const auto& p : split_list(lists.p))
        for (const auto& eps : split_list(lists.eps_hat))
          for (const auto& noise : split_list(lists.noise))
            for (const auto& seed : split_list(lists.seed)) {
              SweepCell cell;
              cell.cfg = base;
              cell.cfg.solver = solver;
              cell.cfg.a = std::strtod(a.c_str(), nullptr);
              cell.cfg.p = std::strtod(p.c_str(), nullptr);
              cell.cfg.eps_hat = std::strtod(eps.c_str(), nullptr);
              cell.cfg.noise = noise;
              cell.cfg.seed = std::strtoull(seed.c_str(), nullptr, 10);
              cell.cfg.out.clear();
              cell.label = solver + ",a=" + a + ",p=" + p + ",eps=" + eps + "," + noise +
                           ",seed=" + seed;
              cells.push_back(std::move(cell));
            }

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      CellResult& res = results[i];
      try {
        RunConfig cfg = cells[i].cfg;
        igm::RunTrace trace = execute(cfg);
        const std::string path = (fs::path(out_dir) / default_filename(cfg)).string();
        write_trace(trace, path, cfg.format);
        const std::vector<double> gaps = trace.gap_series();
        res.final_gap = gaps.back();
        if (static_cast<std::int64_t>(gaps.size()) > plateau_window)
          res.plateau = igm::plateau_detect(gaps, plateau_window, plateau_rtol);
        res.onset = igm::divergence_onset(gaps);
        res.trace_file = path;
        res.ok = true;
      } catch (const std::exception& e) {
        res.ok = false;
        res.reason = e.what();
      }
    }
  };
  const std::int64_t thread_count =
      std::max<std::int64_t>(1, std::min<std::int64_t>(workers, static_cast<std::int64_t>(
                                                                    cells.size())));
  std::vector<std::thread> pool;
  for (std::int64_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  const std::string summary_path =
      summary_flag.empty() ? (fs::path(out_dir) / "summary.csv").string() : summary_flag;
  std::ofstream summary(summary_path);
  if (!summary) throw std::runtime_error("cannot open for writing: " + summary_path);
  summary << "solver,fn,n,L,mu,p,a,eps_hat,noise,seed,iters,status,final_gap,plateau_index,"
             "plateau_level,divergence_onset,trace_file\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const RunConfig& c = cells[i].cfg;
    const CellResult& r = results[i];
    summary << c.solver << "," << c.fn << "," << c.n << "," << igm::format_double(c.L) << ","
            << igm::format_double(c.mu) << "," << igm::format_double(c.p) << ","
            << igm::format_double(c.auto_a ? igm::proper_a(c.iters, c.p, c.eps_hat) : c.a)
            << "," << igm::format_double(c.eps_hat) << "," << c.noise << "," << c.seed << ","
            << c.iters << ",";
    if (!r.ok) {
      std::string reason = r.reason;
      for (auto& ch : reason)
        if (ch == ',' || ch == '\n') ch = ';';
      summary << "skipped:" << reason << ",,,,,\n";
      std::cerr << "skipped cell [" << cells[i].label << "]: " << r.reason << "\n";
      continue;
    }
    summary << "ok," << igm::format_double(r.final_gap) << ",";
    if (r.plateau) summary << r.plateau->index;
    summary << ",";
    if (r.plateau) summary << igm::format_double(r.plateau->level);
    summary << ",";
    if (r.onset) summary << *r.onset;
    summary << "," << r.trace_file << "\n";
  }
  std::cout << "summary=" << summary_path << " cells=" << cells.size() << "\n";
  return 0;
}

int cmd_check(const std::string& path, double L_flag, double tol) {
  igm::RunTrace trace;
  if (path.size() > 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    trace = igm::read_json_file(path);
  else
    trace = igm::read_csv_file(path);
  if (trace.triplets.empty())
    throw std::runtime_error(
        "trace has no triplets; produce one with run --record-triplets");
  double L = L_flag;
  if (!(L > 0.0)) L = trace.meta.L;
  if (!(L > 0.0)) throw CLI::ValidationError("--L: a positive smoothness constant is required");
  const igm::InterpolationReport report = igm::interpolation_check(trace.triplets, L, tol);
  std::cout << "pass=" << (report.pass ? "true" : "false")
            << " worst_violation=" << igm::format_double(report.worst_violation)
            << " witness_i=" << report.witness_i << " witness_j=" << report.witness_j
            << " pairs=" << trace.triplets.size() * trace.triplets.size() << "\n";
  return report.pass ? 0 : 1;
}

int cmd_bounds(std::int64_t N, double a, double L, double R0, double p, double eps_hat,
               double delta, const std::string& out_flag) {
  const std::string path =
      out_flag.empty() ? (fs::path(out_dir_default()) / "bounds.csv").string() : out_flag;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  igm::AimSchedule sched(p);
  sched.push(L);
  double M = delta / L;  // B_0 delta
  out << "k,bound_istm,bound_istm_proper,bound_est1,bound_est2\n";
  for (std::int64_t k = 1; k <= N; ++k) {
    sched.push(L);
    M += sched.B(k) * delta;
    out << k << "," << igm::format_double(igm::istm_bound(k, a, L, R0, p)) << ","
        << igm::format_double(igm::istm_bound_proper(k, L, R0, p, eps_hat)) << ","
        << igm::format_double(igm::certificate_estimate1(0.5 * R0 * R0, sched.A(k), M)) << ","
        << igm::format_double(igm::certificate_estimate2(k, R0, L, delta, p)) << "\n";
  }
  std::cout << "bounds=" << path << "\n";
  return 0;
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--fn", cfg.fn, "objective: worst-case, quadratic, quadratic-reg")
      ->check(CLI::IsMember({"worst-case", "quadratic", "quadratic-reg"}));
  sub->add_option("--n", cfg.n, "problem dimension")->check(CLI::Range(1, 100000));
  sub->add_option("--L", cfg.L, "smoothness constant")->check(CLI::PositiveNumber);
  sub->add_option("--mu", cfg.mu, "strong convexity constant (0 = none)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--iters", cfg.iters, "iteration budget")
      ->check(CLI::Range(1, 100000000));
  sub->add_option("--eps-hat", cfg.eps_hat, "relative gradient error level")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--noise", cfg.noise, "oracle policy: exact, shrink, random, anti")
      ->check(CLI::IsMember({"exact", "shrink", "random", "anti"}));
  sub->add_option("--seed", cfg.seed, "random stream seed");
  sub->add_option("--eps-target", cfg.eps_target, "restart target accuracy")
      ->check(CLI::PositiveNumber);
  sub->add_option("--c-hat", cfg.c_hat, "slack divisor in the delta rule")
      ->check(CLI::PositiveNumber);
  sub->add_option("--eta", cfg.eta, "p decrement per rejected certificate step");
  sub->add_option("--L-s", cfg.L_s, "starting smoothness estimate")->check(CLI::PositiveNumber);
  sub->add_option("--set", cfg.set, "feasible set: all, box, ball")
      ->check(CLI::IsMember({"all", "box", "ball"}));
  sub->add_option("--box-lower", cfg.box_lower, "box lower bound (same in every coordinate)");
  sub->add_option("--box-upper", cfg.box_upper, "box upper bound (same in every coordinate)");
  sub->add_option("--ball-radius", cfg.ball_radius, "ball radius");
  sub->add_option("--ball-center", cfg.ball_center, "ball center (same in every coordinate)");
  sub->add_flag("--vp-restart", cfg.vp_restart,
                "re-initialize after each p decrement instead of continuing");
  sub->add_flag("--record-triplets", cfg.record_triplets,
                "record point/value/gradient triplets for checking");
  sub->add_option("--format", cfg.format, "trace format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  static std::string config_placeholder;
  sub->add_option("--config", config_placeholder,
                  "key=value file; command-line flags take precedence");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Expands "--config FILE" into the equivalent flags, keeping any flag the
// command line already sets (flags override file values).
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      file = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (file.empty()) return args;
  std::ifstream in(file);
  if (!in) throw std::runtime_error("--config: cannot open " + file);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("--config: expected key=value, got: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config")
      throw std::runtime_error("--config: bad key in line: " + line);
    const std::string flag = "--" + key;
    bool on_command_line = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) {
        on_command_line = true;
        break;
      }
    if (on_command_line) continue;
    if (value == "true" || value == "yes") {
      args.push_back(flag);
    } else if (value == "false" || value == "no") {
      continue;
    } else {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-order convex solvers under relative gradient noise"};
  app.require_subcommand(1);

  RunConfig run_cfg;
  CLI::App* run = app.add_subcommand("run", "execute one solver run and write its trace");
  run->add_option("--solver", run_cfg.solver, "istm, ristm, aim, or aimvp")
      ->check(CLI::IsMember({"istm", "ristm", "aim", "aimvp"}));
  auto* a_opt = run->add_option("--a", run_cfg.a, "step damping parameter")
                    ->check(CLI::Range(1.0, 1e12));
  run->add_flag("--auto-a", run_cfg.auto_a, "choose a by the plateau-safe rule")
      ->excludes(a_opt);
  run->add_option("--p", run_cfg.p, "intermediate acceleration parameter")
      ->check(CLI::Range(1.0, 2.0));
  run->add_option("--out", run_cfg.out, "output trace path");
  add_common_options(run, run_cfg);

  RunConfig sweep_cfg;
  SweepLists lists;
  std::int64_t workers = static_cast<std::int64_t>(
      std::max(1u, std::thread::hardware_concurrency()));
  std::int64_t plateau_window = 20;
  double plateau_rtol = 1e-3;
  std::string sweep_out_dir, summary_path;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "run a Cartesian grid of configurations and summarize");
  sweep->add_option("--solver", lists.solver, "comma list of solvers");
  auto* a_list_opt = sweep->add_option("--a", lists.a, "comma list of a values");
  sweep->add_flag("--auto-a", sweep_cfg.auto_a, "choose a by the plateau-safe rule")
      ->excludes(a_list_opt);
  sweep->add_option("--p", lists.p, "comma list of p values");
  sweep->add_option("--eps-hat-list", lists.eps_hat, "comma list of eps-hat values");
  sweep->add_option("--noise-list", lists.noise, "comma list of noise policies");
  sweep->add_option("--seed-list", lists.seed, "comma list of seeds");
  sweep->add_option("--workers", workers, "concurrent cells")
      ->check(CLI::Range(1, 4096));
  sweep->add_option("--plateau-window", plateau_window, "plateau detection window")
      ->check(CLI::Range(1, 1000000));
  sweep->add_option("--plateau-rtol", plateau_rtol, "plateau detection tolerance")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out-dir", sweep_out_dir, "directory for traces and the summary");
  sweep->add_option("--summary", summary_path, "summary CSV path");
  add_common_options(sweep, sweep_cfg);

  std::string check_path;
  double check_L = 0.0, check_tol = 1e-8;
  CLI::App* check = app.add_subcommand("check", "verify a recorded trace against smooth convex "
                                                "interpolation");
  check->add_option("trace", check_path, "trace file (csv or json)")->required();
  check->add_option("--L", check_L, "smoothness constant (default: trace metadata)");
  check->add_option("--tol", check_tol, "relative tolerance")->check(CLI::NonNegativeNumber);

  std::int64_t bounds_N = 300;
  double bounds_a = 2.0, bounds_L = 1.0, bounds_R0 = 1.0, bounds_p = 2.0, bounds_eps = 0.0,
         bounds_delta = 0.0;
  std::string bounds_out;
  CLI::App* bounds = app.add_subcommand("bounds", "tabulate the gap-bound curves to CSV");
  bounds->add_option("--iters", bounds_N, "number of iterations to tabulate")
      ->check(CLI::Range(1, 100000000));
  bounds->add_option("--a", bounds_a, "step damping parameter")->check(CLI::Range(1.0, 1e12));
  bounds->add_option("--L", bounds_L, "smoothness constant")->check(CLI::PositiveNumber);
  bounds->add_option("--R0", bounds_R0, "distance from start to optimum")
      ->check(CLI::PositiveNumber);
  bounds->add_option("--p", bounds_p, "intermediate acceleration parameter")
      ->check(CLI::Range(1.0, 2.0));
  bounds->add_option("--eps-hat", bounds_eps, "relative gradient error level")
      ->check(CLI::Range(0.0, 1.0));
  bounds->add_option("--delta", bounds_delta, "constant per-step slack for the estimates")
      ->check(CLI::NonNegativeNumber);
  bounds->add_option("--out", bounds_out, "output CSV path");

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run->parsed()) return cmd_run(run_cfg);
    if (sweep->parsed())
      return cmd_sweep(sweep_cfg, lists, workers, plateau_window, plateau_rtol, sweep_out_dir,
                       summary_path);
    if (check->parsed()) return cmd_check(check_path, check_L, check_tol);
    if (bounds->parsed())
      return cmd_bounds(bounds_N, bounds_a, bounds_L, bounds_R0, bounds_p, bounds_eps,
                        bounds_delta, bounds_out);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
