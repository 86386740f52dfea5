// Copyright 2026 The cxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cxlab/cli_driver.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <locale>
#include <sstream>

#include "CLI11.hpp"
#include "cxlab/acceptance.hpp"
#include "cxlab/complexity_geometry.hpp"
#include "cxlab/counting_entropy.hpp"
#include "cxlab/gate_complexity.hpp"
#include "cxlab/holography.hpp"
#include "cxlab/linalg.hpp"
#include "cxlab/scrambling_model.hpp"
#include "cxlab/tfd_lab.hpp"

namespace cxlab {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      if (!trim(current).empty()) parts.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!trim(current).empty()) parts.push_back(trim(current));
  return parts;
}

std::optional<double> to_real(const std::string& s) {
  double value = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || std::isnan(value)) return std::nullopt;
  return value;
}

std::optional<std::uint64_t> to_uint(const std::string& s) {
  std::uint64_t value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string format_number(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

std::string format_fixed(double x, int digits) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

// ---- flag validators ----

constexpr double kHuge = std::numeric_limits<double>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

CLI::Validator uint_range(std::uint64_t lo, std::uint64_t hi, bool even = false) {
  std::string desc = hi == std::numeric_limits<std::uint64_t>::max()
                         ? "INT >= " + std::to_string(lo)
                         : "INT in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  if (even) desc = "EVEN " + desc;
  return CLI::Validator(
      [=](std::string& s) -> std::string {
        auto v = to_uint(s);
        if (!v || *v < lo || *v > hi || (even && *v % 2 != 0)) return "expected " + desc + ", got '" + s + "'";
        return "";
      },
      desc);
}

CLI::Validator real_range(double lo, double hi, bool open_lo = false) {
  std::string desc;
  if (lo == -kHuge && hi == kHuge) {
    desc = "REAL";
  } else if (hi >= kHuge) {
    desc = "REAL " + std::string(open_lo ? "> " : ">= ") + format_number(lo);
    if (hi == kInf) desc += " (inf allowed)";
  } else {
    desc = "REAL in " + std::string(open_lo ? "(" : "[") + format_number(lo) + "," + format_number(hi) + "]";
  }
  return CLI::Validator(
      [=](std::string& s) -> std::string {
        auto v = to_real(s);
        if (!v || *v < lo || *v > hi || (open_lo && *v == lo)) return "expected " + desc + ", got '" + s + "'";
        return "";
      },
      desc);
}

CLI::Validator list_of(const CLI::Validator& item) {
  return CLI::Validator(
      [item](std::string& s) -> std::string {
        auto parts = split(s, ",");
        if (parts.empty()) return "expected a comma-separated list, got '" + s + "'";
        for (auto& p : parts) {
          std::string copy = p;
          std::string msg = item(copy);
          if (!msg.empty()) return msg;
        }
        return "";
      },
      "LIST of " + item.get_description());
}

CLI::Validator one_of(std::vector<std::string> choices) {
  std::string desc;
  for (const auto& c : choices) desc += (desc.empty() ? "" : "|") + c;
  return CLI::Validator(
      [=](std::string& s) -> std::string {
        if (std::find(choices.begin(), choices.end(), s) == choices.end())
          return "expected one of " + desc + ", got '" + s + "'";
        return "";
      },
      desc);
}

CLI::Validator any_text() {
  return CLI::Validator([](std::string&) { return std::string(); }, "TEXT");
}

// ---- subcommand tables ----

struct FlagSpec {
  FlagSpec(std::string name_, std::optional<std::string> default_value_, CLI::Validator check_,
           std::string help_, bool required_ = false, std::string excludes_ = "")
      : name(std::move(name_)),
        default_value(std::move(default_value_)),
        check(std::move(check_)),
        help(std::move(help_)),
        required(required_),
        excludes(std::move(excludes_)) {}

  std::string name;
  std::optional<std::string> default_value;
  CLI::Validator check;
  std::string help;
  bool required;
  std::string excludes;
};

struct CommandSpec {
  std::string name;
  std::string summary;
  std::string formulas;
  std::vector<FlagSpec> flags;
};

const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> table = {
      {"scramble",
       "Monte-Carlo epidemic growth of a perturbation under random pairing circuits.",
       "Each step pairs all K qubits at random; a pair touching the infected set becomes\n"
       "fully infected. Starts from one infected qubit.\n"
       "  logistic:  s(tau)/K = e^(tau - tau*) / (1 + e^(tau - tau*)),  tau* = ln K\n"
       "  precursor: C(tau) = K ln(1 + e^(tau - tau*)),  dC/dtau = K s(tau)/K\n"
       "  mean-field increment: E[ds] = s (K - s) / (K - 1)\n"
       "CSV: tau,mc_mean,mc_stderr,logistic,precursor (mc_mean and mc_stderr as fractions of K).",
       {{"qubits", "10", uint_range(2, 4096, true), "number of qubits K"},
        {"trials", "10000", uint_range(1, 100000000), "Monte-Carlo trials"},
        {"steps", "25", uint_range(1, 100000), "circuit depth simulated"}}},
      {"bfs",
       "Exact word-length complexity on a small inverse-closed gate set.",
       "  C(U) = least n with U = g_n ... g_1 up to a global phase (tolerance eps)\n"
       "  C(U, V) = C(U V^dagger); sphere S_n = {U : C(U) = n}, ball B_n = union of S_0..S_n\n"
       "  capacity: |B_n| <= N(eps) = number of eps-distinguishable unitaries\n"
       "--target is the row-major list re,im,re,im,... of a 2^K x 2^K unitary.\n"
       "CSV: depth,sphere_size,ball_size.",
       {{"gateset", "clifford2", one_of({"clifford2", "cnot", "random"}), "gate set"},
        {"qubits", "2", uint_range(1, 3), "qubits for --gateset random"},
        {"pairs", "4", uint_range(1, 64), "gate/inverse pairs for --gateset random"},
        {"max-depth", "12", uint_range(0, 1000), "deepest layer explored"},
        {"max-elements", std::to_string(kDefaultBallBudget), uint_range(1, 100000000),
         "ball size budget"},
        {"target", std::nullopt, any_text(), "unitary whose complexity is reported"}}},
      {"curvature",
       "Ensemble-averaged sectional curvature of the complexity metric.",
       "  penalty: I(w) = 1 for w <= 2, c 4^(w - 2) above (I(3) = 4c)\n"
       "  R(H, D) = (1/3 - I(3)/4) * 2 Tr([H,D][D,H]) / (Tr D^2 Tr H^2)  (normalised traces)\n"
       "  H and D exactly 2-local Gaussian Hamiltonians with Tr(HD) = 0\n"
       "CSV: qubits,trials,mean_curvature,std_error,trace_ratio_mean.",
       {{"qubits", "4,6,8,10", list_of(uint_range(4, 10, true)), "list of even K"},
        {"trials", "100", uint_range(1, 1000000), "(H, D) pairs per K"},
        {"penalty", "1", real_range(0.0, kHuge, true), "penalty base c", false, "i3"},
        {"i3", std::nullopt, real_range(0.0, kHuge, true), "weight-3 penalty I(3)", false,
         "penalty"}}},
      {"counting",
       "Counting estimates for the number of distinguishable unitaries.",
       "  ln Vol SU(N) = sum_{k=1}^{N-1} [ln 2 + (k+1) ln pi - ln k!]\n"
       "  ln N(eps) ~ (4^K / 2) K ln 2 + 4^K ln(1/eps)\n"
       "  C_max = 4^K (1/2 + |ln eps| / ln K)\n"
       "  ln branching = (K/2) ln(2K/e); recurrence: ln ln t_recur ~ K ln 2\n"
       "CSV: qubits,epsilon,log_vol_su,log_ball,log_num_unitaries,log_branching,c_max,\n"
       "log_log_recurrence,params_2local.",
       {{"max-qubits", "10", uint_range(2, 20), "largest K tabulated"},
        {"epsilon", "0.1", real_range(0.0, 1.0, true), "distinguishability radius"}}},
      {"tfd",
       "Thermofield double state of a finite spectrum.",
       "  |TFD> = sum_i sqrt(e^(-beta E_i) / Z) |E_i>_L |E_i>_R\n"
       "  Tr_R |TFD><TFD| = e^(-beta H) / Z\n"
       "  minus: phases e^(-i E_i (t_l - t_r)), plus: phases e^(-i E_i (t_l + t_r))\n"
       "  distance: arccos |<TFD|psi(t)>|\n"
       "--spectrum is a file of numbers or an inline comma list. Rows sweep s = 0..points with\n"
       "times (s/points) t_l and (s/points) t_r.\n"
       "CSV: step,t_l,t_r,fidelity,fubini_distance.",
       {{"spectrum", std::nullopt, any_text(), "energies (file or comma list)", true},
        {"beta", "1", real_range(0.0, kInf), "inverse temperature"},
        {"tl", "0", real_range(-kHuge, kHuge), "left boundary time"},
        {"tr", "0", real_range(-kHuge, kHuge), "right boundary time"},
        {"sign", "plus", one_of({"minus", "plus"}), "H_L - H_R or H_L + H_R"},
        {"points", "20", uint_range(1, 100000), "time steps"}}},
      {"wormhole",
       "Maximal-slice volume of the eternal AdS-Schwarzschild wormhole.",
       "  f(r) = 1 - mu / r^(d-3) + r^2 / l^2,  M = (d-2) Omega mu / (16 pi G)\n"
       "  V(E) = 2 Omega int_{r_turn}^{r_h} r^(2d-4) / sqrt(E^2 + r^(2d-4) f) dr\n"
       "  t_l + t_r = -2 PV int E / (f sqrt(E^2 + r^(2d-4) f)) dr\n"
       "  late time: dV/d(t_l + t_r) -> V_d = Omega r_m^(d-2) sqrt|f(r_m)|\n"
       "  C = V / (G l),  compared with S T\n"
       "CSV: e,r_turn,volume_per_sphere,volume,t_sum.",
       {{"dim", "4", uint_range(4, 20), "bulk dimension d"},
        {"mu", std::nullopt, real_range(0.0, kHuge, true), "mass parameter (default 100)", false,
         "mass"},
        {"mass", std::nullopt, real_range(0.0, kHuge, true), "ADM mass M", false, "mu"},
        {"lads", "1", real_range(0.0, kHuge, true), "AdS radius l"},
        {"G", "1", real_range(0.0, kHuge, true), "Newton constant G"},
        {"egrid-points", "40", uint_range(3, 10000), "points on the E grid"}}},
      {"wdw",
       "Late-time Wheeler-DeWitt patch action rate and the Lloyd bound.",
       "  dA/dt = bulk + boundary = 2M for neutral static AdS black holes\n"
       "  Lloyd bound: dC/dt <= 2M / (pi hbar), C = A / (pi hbar)\n"
       "CSV: d,mu,M,bulk_rate,boundary_rate,total_rate,lloyd_saturation.",
       {{"dim", "4,5,6", list_of(uint_range(4, 20)), "list of bulk dimensions"},
        {"mu", "0.5,1,10,100", list_of(real_range(0.0, kHuge, true)), "list of mass parameters"},
        {"lads", "1", real_range(0.0, kHuge, true), "AdS radius l"},
        {"G", "1", real_range(0.0, kHuge, true), "Newton constant G"}}},
      {"paper-suite",
       "Runs every acceptance check and exits 0 iff all pass.",
       "Checks: WDW identity and Lloyd saturation; wormhole linear growth; high-temperature\n"
       "C = V; epidemic vs logistic; curvature sign and 1/K scaling; Loschmidt orders;\n"
       "geodesic residual order; metric axioms; thermofield double suite; counting.\n"
       "CSV: id,name,passed.",
       {}},
  };
  return table;
}

const CommandSpec* find_command(const std::string& name) {
  for (const auto& c : command_table())
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<FlagSpec> all_flags(const CommandSpec& cmd) {
  std::vector<FlagSpec> flags = cmd.flags;
  flags.push_back({"seed", std::to_string(kDefaultSeed),
                   uint_range(0, std::numeric_limits<std::uint64_t>::max()), "RNG seed"});
  flags.push_back({"output-dir", std::nullopt, any_text(),
                   std::string("output directory (else $") + kOutputDirEnv + ", else .)"});
  flags.push_back({"config", std::nullopt, any_text(), "key=value file; command-line flags win"});
  return flags;
}

std::string general_usage() {
  std::ostringstream os;
  os << "usage: cxlab <command> [--flag value ...]\n\ncommands:\n";
  for (const auto& c : command_table()) os << "  " << std::left << std::setw(12) << c.name << c.summary << "\n";
  os << "\nRun 'cxlab <command> --help' for flags and formulas.\n";
  return os.str();
}

bool flag_on_command_line(const std::vector<std::string>& args, const std::string& name) {
  const std::string flag = "--" + name;
  for (const auto& a : args)
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  return false;
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError(exit_code::kMalformedValue, "--config: missing file name");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

// Returns "--key value" pairs from the config file for keys absent on the
// command line.
std::vector<std::string> config_arguments(const std::string& path, const CommandSpec& cmd,
                                          const std::vector<std::string>& args) {
  std::ifstream in(path);
  if (!in) throw UsageError(exit_code::kMalformedValue, "--config: cannot read '" + path + "'");
  const auto flags = all_flags(cmd);
  std::vector<std::string> extra;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(exit_code::kMalformedValue,
                       "--config: " + path + ":" + std::to_string(line_no) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    const std::string value = trim(line.substr(eq + 1));
    const bool known = std::any_of(flags.begin(), flags.end(),
                                   [&](const FlagSpec& f) { return f.name == key && key != "config"; });
    if (!known)
      throw UsageError(exit_code::kUsage, "--" + key + ": unknown flag for '" + cmd.name +
                                              "' in config file " + path);
    if (flag_on_command_line(args, key)) continue;
    extra.push_back("--" + key);
    extra.push_back(value);
  }
  return extra;
}

int parse_error_code(const CLI::ParseError& e) {
  if (dynamic_cast<const CLI::RequiredError*>(&e)) return exit_code::kMissingFlag;
  if (dynamic_cast<const CLI::ValidationError*>(&e) || dynamic_cast<const CLI::ConversionError*>(&e) ||
      dynamic_cast<const CLI::ArgumentMismatch*>(&e))
    return exit_code::kMalformedValue;
  return exit_code::kUsage;
}

// ---- output helpers ----

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : columns_(header.size()) { add_row(header); }

  void add(std::vector<std::string> row) {
    if (row.size() != columns_) throw std::logic_error("csv row width mismatch");
    add_row(row);
  }

  const std::string& text() const { return text_; }

 private:
  void add_row(const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) text_ += (i ? "," : "") + row[i];
    text_ += '\n';
  }

  std::size_t columns_;
  std::string text_;
};

class Summary {
 public:
  void add(const std::string& key, const std::string& value) { text_ += key + ": " + value + "\n"; }
  void add(const std::string& key, double value) { add(key, format_number(value)); }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

std::string n(double x) { return format_number(x); }
std::string n(std::uint64_t x) { return std::to_string(x); }
std::string n(unsigned x) { return std::to_string(x); }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

struct Args {
  const RunConfig& config;

  bool has(const std::string& key) const { return config.flags.count(key) != 0; }
  const std::string& text(const std::string& key) const { return config.flags.at(key); }
  double real(const std::string& key) const { return *to_real(text(key)); }
  unsigned uint(const std::string& key) const { return static_cast<unsigned>(*to_uint(text(key))); }
  std::uint64_t uint64(const std::string& key) const { return *to_uint(text(key)); }
  std::vector<double> reals(const std::string& key) const {
    std::vector<double> out;
    for (const auto& p : split(text(key), ",")) out.push_back(*to_real(p));
    return out;
  }
  std::vector<unsigned> uints(const std::string& key) const {
    std::vector<unsigned> out;
    for (const auto& p : split(text(key), ",")) out.push_back(static_cast<unsigned>(*to_uint(p)));
    return out;
  }
};

struct Output {
  CsvTable csv;
  Summary summary;
};

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

// ---- subcommands ----

Output run_scramble(const Args& a) {
  const unsigned k = a.uint("qubits");
  const unsigned trials = a.uint("trials");
  const auto traj = simulate_epidemic(k, a.uint("steps"), trials, a.config.seed);
  Output o{CsvTable({"tau", "mc_mean", "mc_stderr", "logistic", "precursor"}), {}};
  double worst = 0.0;
  std::optional<unsigned> saturated;
  for (const auto& s : traj.steps) {
    const double frac = s.mean_infected / k;
    const double logistic = logistic_size(s.tau, k);
    worst = std::max(worst, std::abs(frac - logistic));
    if (!saturated && s.mean_infected == k) saturated = s.tau;
    o.csv.add({n(s.tau), n(frac), n(s.std_error / k), n(logistic), n(precursor_complexity(s.tau, k))});
  }
  o.summary.add("qubits", n(k));
  o.summary.add("trials", n(trials));
  o.summary.add("scrambling_time", scrambling_time(k));
  o.summary.add("max_abs_mc_minus_logistic", worst);
  o.summary.add("all_trials_saturated_at_tau", saturated ? n(*saturated) : "not within steps");
  return o;
}

Matrix parse_target(const std::string& text, std::size_t dim) {
  std::vector<double> values;
  for (const auto& p : split(text, ", \t")) {
    auto v = to_real(p);
    if (!v) throw UsageError(exit_code::kMalformedValue, "--target: '" + p + "' is not a number");
    values.push_back(*v);
  }
  if (values.size() != 2 * dim * dim)
    throw UsageError(exit_code::kMalformedValue,
                     "--target: expected " + std::to_string(2 * dim * dim) + " numbers (re,im pairs), got " +
                         std::to_string(values.size()));
  Matrix u(dim, dim);
  for (std::size_t i = 0; i < dim * dim; ++i) u(i / dim, i % dim) = Complex(values[2 * i], values[2 * i + 1]);
  if (!is_unitary(u, 1e-8)) throw UsageError(exit_code::kMalformedValue, "--target: matrix is not unitary");
  return u;
}

Output run_bfs(const Args& a) {
  const std::string name = a.text("gateset");
  const GateSet gs = name == "random"
                         ? GateSet::random_inverse_closed(a.uint("qubits"), a.uint("pairs"), a.config.seed)
                         : GateSet::by_name(name);
  std::optional<Matrix> target;
  if (a.has("target")) target = parse_target(a.text("target"), gs.dim());
  const unsigned max_depth = a.uint("max-depth");
  const ComplexityBall ball = sphere_growth(gs, max_depth, a.uint64("max-elements"));
  Output o{CsvTable({"depth", "sphere_size", "ball_size"}), {}};
  std::size_t cumulative = 0;
  for (std::size_t d = 0; d < ball.counts().size(); ++d) {
    cumulative += ball.counts()[d];
    o.csv.add({n(static_cast<std::uint64_t>(d)), n(static_cast<std::uint64_t>(ball.counts()[d])),
               n(static_cast<std::uint64_t>(cumulative))});
  }
  o.summary.add("gateset", name);
  o.summary.add("gates", n(static_cast<std::uint64_t>(gs.gates().size())));
  o.summary.add("qubits", n(gs.num_qubits()));
  o.summary.add("ball_size", n(static_cast<std::uint64_t>(ball.size())));
  o.summary.add("layers", n(static_cast<std::uint64_t>(ball.counts().size() - 1)));
  o.summary.add("saturated", ball.saturated() ? "true" : "false");
  o.summary.add("truncated", ball.truncated() ? "true" : "false");
  if (ball.counts().size() >= 3 && ball.counts()[1] > 0) {
    o.summary.add("sphere_ratio_2_over_1",
                  static_cast<double>(ball.counts()[2]) / static_cast<double>(ball.counts()[1]));
  }
  if (target) {
    const auto c = bfs_complexity(*target, gs, max_depth);
    o.summary.add("target_complexity", c ? n(*c) : "not reached within max-depth");
  }
  return o;
}

Output run_curvature(const Args& a) {
  const auto ks = a.uints("qubits");
  const unsigned trials = a.uint("trials");
  const PenaltySchedule ps =
      a.has("i3") ? PenaltySchedule::with_weight3_penalty(a.real("i3")) : PenaltySchedule(2, a.real("penalty"));
  Output o{CsvTable({"qubits", "trials", "mean_curvature", "std_error", "trace_ratio_mean"}), {}};
  std::vector<double> xs, ratios;
  o.summary.add("weight3_penalty", penalty(3, ps));
  for (unsigned k : ks) {
    const auto ens = curvature_ensemble(k, ps, trials, a.config.seed);
    o.csv.add({n(k), n(trials), n(ens.mean), n(ens.std_error), n(ens.trace_ratio_mean)});
    o.summary.add("mean_curvature_k" + n(k), ens.mean);
    o.summary.add("std_error_k" + n(k), ens.std_error);
    xs.push_back(k);
    ratios.push_back(ens.trace_ratio_mean);
  }
  std::vector<double> distinct = xs;
  std::sort(distinct.begin(), distinct.end());
  if (std::unique(distinct.begin(), distinct.end()) - distinct.begin() >= 2) {
    o.summary.add("trace_ratio_loglog_slope", loglog_slope(xs, ratios));
  }
  return o;
}

Output run_counting(const Args& a) {
  const double eps = a.real("epsilon");
  Output o{CsvTable({"qubits", "epsilon", "log_vol_su", "log_ball", "log_num_unitaries", "log_branching",
                     "c_max", "log_log_recurrence", "params_2local"}),
           {}};
  for (unsigned k = 2; k <= a.uint("max-qubits"); ++k) {
    const auto r = counting_report(k, eps);
    o.csv.add({n(k), n(eps), n(r.log_vol_su), n(r.log_ball), n(r.log_num_unitaries), n(r.log_branching),
               n(r.c_max), n(r.log_log_recurrence), n(parameter_count(k, 2))});
  }
  o.summary.add("epsilon", eps);
  o.summary.add("c_max_k2", max_complexity(2, eps));
  o.summary.add("log_num_unitaries_k2", log_num_unitaries(2, eps));
  o.summary.add("log_num_unitaries_exact_k2", log_num_unitaries_exact(2, eps));
  o.summary.add("params_2local_k4", n(parameter_count(4, 2)));
  return o;
}

std::vector<double> parse_spectrum(const std::string& value) {
  std::string text = value;
  std::error_code ec;
  if (std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  std::vector<double> out;
  for (const auto& p : split(text, ", \t\r\n")) {
    auto v = to_real(p);
    if (!v || !std::isfinite(*v))
      throw UsageError(exit_code::kMalformedValue, "--spectrum: '" + p + "' is not a finite number");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError(exit_code::kMalformedValue, "--spectrum: no energies given");
  return out;
}

Output run_tfd(const Args& a) {
  const auto spectrum = parse_spectrum(a.text("spectrum"));
  const double beta = a.real("beta");
  const TFDState state = tfd(spectrum, beta);
  const Vector v = state.vector();
  const TimeSign sign = a.text("sign") == "minus" ? TimeSign::Minus : TimeSign::Plus;
  const unsigned points = a.uint("points");
  const double tl = a.real("tl"), tr = a.real("tr");
  Output o{CsvTable({"step", "t_l", "t_r", "fidelity", "fubini_distance"}), {}};
  double fidelity = 1.0, distance = 0.0;
  for (unsigned s = 0; s <= points; ++s) {
    const double frac = static_cast<double>(s) / points;
    const Vector psi = evolve_tfd(state, frac * tl, frac * tr, sign);
    fidelity = std::min(1.0, std::abs(v.dot(psi)));
    distance = fubini_distance(v, psi);
    o.csv.add({n(s), n(frac * tl), n(frac * tr), n(fidelity), n(distance)});
  }
  const DensityMatrix reduced = partial_trace(state, Side::Right);
  o.summary.add("dim", n(static_cast<std::uint64_t>(spectrum.size())));
  o.summary.add("beta", beta);
  o.summary.add("entanglement_entropy", von_neumann_entropy(reduced));
  o.summary.add("ln_dim", std::log(static_cast<double>(spectrum.size())));
  o.summary.add("partial_trace_vs_thermal_max_err",
                max_norm(reduced.matrix() - thermal_state(spectrum, beta).matrix()));
  o.summary.add("final_fidelity", fidelity);
  o.summary.add("final_fubini_distance", distance);
  return o;
}

BlackHoleSpec wormhole_spec(const Args& a) {
  const unsigned d = a.uint("dim");
  const double l = a.real("lads"), g = a.real("G");
  if (a.has("mass")) return BlackHoleSpec::from_mass(d, a.real("mass"), l, g);
  return BlackHoleSpec::from_mu(d, a.has("mu") ? a.real("mu") : 100.0, l, g);
}

Output run_wormhole(const Args& a) {
  const BlackHoleSpec spec = wormhole_spec(a);
  const auto curve = volume_curve(spec, a.uint("egrid-points"));
  Output o{CsvTable({"e", "r_turn", "volume_per_sphere", "volume", "t_sum"}), {}};
  for (const auto& p : curve) {
    o.csv.add({n(p.e), n(p.r_turn), n(p.interior_volume_per_sphere), n(spec.omega() * p.interior_volume_per_sphere),
               n(p.boundary_time_sum)});
  }
  const CriticalSurface cs = critical_surface(spec);
  const double estimate = critical_radius_estimate(spec);
  const double slope = late_time_slope(spec, curve);
  const CvRate cv = cv_rate(spec);
  o.summary.add("dim", n(spec.d()));
  o.summary.add("mu", spec.mu());
  o.summary.add("mass", spec.mass());
  o.summary.add("l_ads", spec.l_ads());
  o.summary.add("g_newton", spec.g_newton());
  o.summary.add("horizon", horizon(spec));
  o.summary.add("temperature", hawking_temperature(spec));
  o.summary.add("entropy", bekenstein_entropy(spec));
  o.summary.add("r_m", cs.r_m);
  o.summary.add("r_m_high_temperature_estimate", estimate);
  o.summary.add("r_m_estimate_rel_diff", estimate / cs.r_m - 1.0);
  o.summary.add("e_c", cs.e_c);
  o.summary.add("v_d", cs.v_d);
  o.summary.add("late_time_slope", slope);
  o.summary.add("late_time_slope_rel_err", slope / cs.v_d - 1.0);
  o.summary.add("log_divergence_coefficient", log_divergence_coefficient(spec));
  o.summary.add("dc_dt", cv.dc_dt);
  o.summary.add("s_times_t", cv.s_times_t);
  o.summary.add("cv_ratio", cv.ratio);
  return o;
}

Output run_wdw(const Args& a) {
  const double l = a.real("lads"), g = a.real("G");
  Output o{CsvTable({"d", "mu", "M", "bulk_rate", "boundary_rate", "total_rate", "lloyd_saturation"}), {}};
  double worst = 0.0, worst_ratio = 1.0, worst_lloyd = 0.0;
  std::size_t count = 0;
  for (unsigned d : a.uints("dim")) {
    for (double mu : a.reals("mu")) {
      const auto spec = BlackHoleSpec::from_mu(d, mu, l, g);
      const WdwRate w = wdw_action_rate(spec);
      const LloydCheck lc = lloyd_bound(spec);
      const double ratio = w.total / (2.0 * spec.mass());
      if (std::abs(ratio - 1.0) >= worst) {
        worst = std::abs(ratio - 1.0);
        worst_ratio = ratio;
      }
      worst_lloyd = std::max(worst_lloyd, std::abs(lc.saturation - 1.0));
      o.csv.add({n(d), n(mu), n(spec.mass()), n(w.bulk), n(w.boundary), n(w.total), n(lc.saturation)});
      ++count;
    }
  }
  o.summary.add("grid_points", n(static_cast<std::uint64_t>(count)));
  o.summary.add("total_rate/2M", format_fixed(worst_ratio, 7));
  o.summary.add("max_rel_deviation_from_2M", worst);
  o.summary.add("max_lloyd_saturation_deviation", worst_lloyd);
  return o;
}

struct SuiteOutcome {
  Output output;
  bool all_passed;
};

SuiteOutcome run_suite_command(const Args& a, std::ostream& out) {
  SuiteOutcome s{{CsvTable({"id", "name", "passed"}), {}}, true};
  for (const auto& r : run_acceptance_suite(a.config.seed)) {
    out << format_result(r) << "\n" << std::flush;
    s.all_passed = s.all_passed && r.passed;
    s.output.csv.add({std::to_string(r.id), r.name, r.passed ? "true" : "false"});
    s.output.summary.add("criterion_" + std::to_string(r.id), std::string(r.passed ? "PASS " : "FAIL ") + r.detail);
  }
  s.output.summary.add("all_passed", s.all_passed ? "true" : "false");
  return s;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  if (args.empty()) throw UsageError(exit_code::kUsage, "missing command\n" + general_usage());
  if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    config.help_text = general_usage();
    return config;
  }
  const CommandSpec* cmd = find_command(args[0]);
  if (!cmd) throw UsageError(exit_code::kUsage, "unknown command '" + args[0] + "'\n" + general_usage());
  config.subcommand = cmd->name;

  std::vector<std::string> full = {args[0]};
  if (auto path = config_path(args)) {
    auto extra = config_arguments(*path, *cmd, args);
    full.insert(full.end(), extra.begin(), extra.end());
  }
  full.insert(full.end(), args.begin() + 1, args.end());

  CLI::App app{cmd->summary, "cxlab " + cmd->name};
  app.footer("\n" + cmd->formulas);
  const auto flags = all_flags(*cmd);
  std::map<std::string, CLI::Option*> options;
  for (const auto& f : flags) {
    CLI::Option* opt = app.add_option("--" + f.name, f.help);
    opt->check(f.check);
    if (f.default_value) opt->default_str(*f.default_value);
    if (f.required) opt->required();
    options[f.name] = opt;
  }
  for (const auto& f : flags) {
    if (!f.excludes.empty()) options[f.name]->excludes(options[f.excludes]);
  }

  std::vector<std::string> reversed(full.rbegin(), full.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    config.help_text = app.help();
    return config;
  } catch (const CLI::ParseError& e) {
    throw UsageError(parse_error_code(e), cmd->name + ": " + e.what());
  }

  for (const auto& f : flags) {
    CLI::Option* opt = options[f.name];
    if (opt->count() > 0) {
      config.flags[f.name] = opt->as<std::string>();
    } else if (f.default_value) {
      config.flags[f.name] = *f.default_value;
    }
  }
  config.seed = *to_uint(config.flags.at("seed"));
  if (config.flags.count("output-dir")) {
    config.output_dir = config.flags.at("output-dir");
  } else if (const char* env = std::getenv(kOutputDirEnv); env && *env) {
    config.output_dir = env;
  } else {
    config.output_dir = ".";
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.help_text) {
    out << *config.help_text;
    return exit_code::kOk;
  }
  const auto start = std::chrono::steady_clock::now();
  const Args a{config};
  const std::string& name = config.subcommand;
  try {
    Output o{CsvTable({}), {}};
    bool passed = true;
    if (name == "scramble") o = run_scramble(a);
    else if (name == "bfs") o = run_bfs(a);
    else if (name == "curvature") o = run_curvature(a);
    else if (name == "counting") o = run_counting(a);
    else if (name == "tfd") o = run_tfd(a);
    else if (name == "wormhole") o = run_wormhole(a);
    else if (name == "wdw") o = run_wdw(a);
    else if (name == "paper-suite") {
      auto s = run_suite_command(a, out);
      o = std::move(s.output);
      passed = s.all_passed;
    } else {
      err << "cxlab: unknown command '" << name << "'\n";
      return exit_code::kUsage;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Summary summary;
    summary.add("command", name);
    summary.add("seed", std::to_string(config.seed));
    summary.add("wall_time_seconds", format_fixed(wall, 3));
    std::filesystem::create_directories(config.output_dir);
    const auto csv_path = config.output_dir / (name + ".csv");
    const auto summary_path = config.output_dir / (name + "_summary.txt");
    write_file(csv_path, o.csv.text());
    write_file(summary_path, summary.text() + o.summary.text());
    out << "wrote " << csv_path.string() << " and " << summary_path.string() << "\n";
    return passed ? exit_code::kOk : exit_code::kNumericFailure;
  } catch (const UsageError& e) {
    err << "cxlab " << name << ": " << e.what() << "\n";
    return e.code();
  } catch (const NumericError& e) {
    err << "cxlab " << name << ": numeric failure: " << e.what() << "\n";
    return exit_code::kNumericFailure;
  } catch (const std::invalid_argument& e) {
    err << "cxlab " << name << ": invalid parameters: " << e.what() << "\n";
    return exit_code::kMalformedValue;
  } catch (const std::exception& e) {
    err << "cxlab " << name << ": " << e.what() << "\n";
    return exit_code::kNumericFailure;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const UsageError& e) {
    err << "cxlab: " << e.what() << "\n";
    return e.code();
  }
  return run(config, out, err);
}

}  // namespace cxlab
