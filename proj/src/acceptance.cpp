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

#include "cxlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "cxlab/complexity_geometry.hpp"
#include "cxlab/counting_entropy.hpp"
#include "cxlab/gate_complexity.hpp"
#include "cxlab/holography.hpp"
#include "cxlab/pauli_algebra.hpp"
#include "cxlab/scrambling_model.hpp"
#include "cxlab/tfd_lab.hpp"

namespace cxlab {
namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_ = Clock::now();
};

std::ostringstream detail_stream() {
  std::ostringstream os;
  os << std::setprecision(6);
  return os;
}

double observed_order(double coarse, double fine) { return std::log2(coarse / fine); }

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

// Average new infections over every perfect pairing of K qubits with the
// first s infected.
void enumerate_pairings(std::vector<int>& free, int s, int infected, double& total, long& count) {
  if (free.empty()) {
    total += infected - s;
    ++count;
    return;
  }
  const int first = free.front();
  for (std::size_t i = 1; i < free.size(); ++i) {
    const int second = free[i];
    std::vector<int> rest;
    for (std::size_t j = 1; j < free.size(); ++j)
      if (j != i) rest.push_back(free[j]);
    const bool mixed = (first < s) != (second < s);
    enumerate_pairings(rest, s, infected + (mixed ? 1 : 0), total, count);
  }
}

double exhaustive_increment(int k, int s) {
  std::vector<int> free(k);
  for (int i = 0; i < k; ++i) free[i] = i;
  double total = 0.0;
  long count = 0;
  enumerate_pairings(free, s, s, total, count);
  return total / count;
}

std::vector<double> spectrum_of(const KLocalHamiltonian& h) {
  const Propagator prop(h.matrix());
  const RealVector& e = prop.energies();
  return {e.data(), e.data() + e.size()};
}

}  // namespace

CriterionResult check_wdw_identity() {
  Stopwatch sw;
  double worst_wdw = 0.0, worst_lloyd = 0.0;
  for (unsigned d : {4u, 5u, 6u}) {
    for (double mu : {0.5, 1.0, 10.0, 100.0}) {
      const auto spec = BlackHoleSpec::from_mu(d, mu);
      const double two_m = 2.0 * spec.mass();
      worst_wdw = std::max(worst_wdw, std::abs(wdw_action_rate(spec).total - two_m) / two_m);
      worst_lloyd = std::max(worst_lloyd, std::abs(lloyd_bound(spec).saturation - 1.0));
    }
  }
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "max |dA/dt-2M|/2M=" << worst_wdw << " (<1e-8), max |saturation-1|=" << worst_lloyd
     << " (<1e-8), runtime<1s";
  return {1, "WDW action rate and Lloyd saturation",
          worst_wdw < 1e-8 && worst_lloyd < 1e-8 && t < 1.0, os.str(), t};
}

CriterionResult check_wormhole_growth() {
  Stopwatch sw;
  const auto spec = BlackHoleSpec::from_mu(4, 100.0);
  const auto curve = volume_curve(spec, 40, 1e-10);
  const double slope = late_time_slope(spec, curve);
  const double v_d = critical_surface(spec).v_d;
  const double rel = std::abs(slope / v_d - 1.0);
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "slope=" << slope << " V_d=" << v_d << " rel.err=" << rel << " (<0.02), runtime<10s";
  return {2, "wormhole volume linear growth", rel < 0.02 && t < 10.0, os.str(), t};
}

CriterionResult check_high_temperature_cv() {
  Stopwatch sw;
  const auto spec = BlackHoleSpec::from_mu(4, 1e4);
  const CriticalSurface cs = critical_surface(spec);
  const double e_rel = std::abs(cs.e_c / (spec.mu() / 2.0) - 1.0);
  const double vd_rel =
      std::abs(cs.v_d / (8.0 * std::numbers::pi * spec.l_ads() * spec.g_newton() * spec.mass() /
                         (spec.d() - 2.0)) - 1.0);
  double lo = 1e300, hi = 0.0;
  for (double mu : {1e3, 1e4, 1e5}) {
    const double r = cv_rate(BlackHoleSpec::from_mu(4, mu)).ratio;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  const double spread = hi / lo - 1.0;
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "E_c/(mu/2)-1=" << e_rel << " V_d rel.err=" << vd_rel << " (<0.01), cv ratio spread="
     << spread << " (<0.02), ratio=" << hi;
  return {3, "high-temperature complexity=volume", e_rel < 0.01 && vd_rel < 0.01 && spread < 0.02,
          os.str(), t};
}

CriterionResult check_epidemic(std::uint64_t seed) {
  Stopwatch sw;
  const unsigned k = 10;
  const auto traj = simulate_epidemic(k, 25, 100000, seed);
  double worst = 0.0;
  for (const auto& step : traj.steps) {
    worst = std::max(worst, std::abs(step.mean_infected / k - logistic_size(step.tau, k)));
  }
  const double exact = exhaustive_increment(4, 1);
  const bool exact_ok = exact == 1.0 && expected_increment(4, 1.0) == 1.0;
  double worst_fd = 0.0;
  const double h = 1e-5;
  for (double tau = -2.0; tau <= 10.0; tau += 0.25) {
    const double fd = (precursor_complexity(tau + h, k) - precursor_complexity(tau - h, k)) / (2 * h);
    worst_fd = std::max(worst_fd, std::abs(fd - precursor_growth_rate(tau, k)) / k);
  }
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "max|mc/K-logistic|=" << worst << " (<0.05), exact E[ds](K=4,s=1)=" << exact
     << ", precursor FD err/K=" << worst_fd << " (<1e-8)";
  return {4, "epidemic model vs logistic curve", worst < 0.05 && exact_ok && worst_fd < 1e-8,
          os.str(), t};
}

CriterionResult check_curvature(std::uint64_t seed) {
  Stopwatch sw;
  const auto boundary =
      curvature_ensemble(6, PenaltySchedule::with_weight3_penalty(4.0 / 3.0), 100, seed);
  const bool boundary_ok = std::abs(boundary.mean) <= 3.0 * boundary.std_error;
  const auto negative = curvature_ensemble(8, PenaltySchedule(2, 1.0), 200, seed + 1);
  const bool negative_ok = negative.mean + 5.0 * negative.std_error < 0.0;
  std::vector<double> ks, ratios;
  for (unsigned k : {4u, 6u, 8u, 10u}) {
    ks.push_back(k);
    ratios.push_back(curvature_ensemble(k, PenaltySchedule(2, 1.0), 50, seed + 2).trace_ratio_mean);
  }
  const double slope = loglog_slope(ks, ratios);
  const bool slope_ok = slope >= -1.3 && slope <= -0.7;
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "I3=4/3 mean=" << boundary.mean << "+-" << boundary.std_error << "; c=1 K=8 mean="
     << negative.mean << "+-" << negative.std_error << "; trace-ratio slope=" << slope
     << " (in [-1.3,-0.7]), runtime<60s";
  return {5, "sectional curvature sign and 1/K scaling",
          boundary_ok && negative_ok && slope_ok && t < 60.0, os.str(), t};
}

CriterionResult check_loschmidt(std::uint64_t seed) {
  Stopwatch sw;
  const KLocalHamiltonian hk = sample_klocal(3, 2, true, 1.0, seed);
  const Matrix h = hk.matrix();
  const Matrix delta = sample_orthogonal_direction(hk, seed, 1).matrix();
  auto exact = [&](double t, double dtheta) -> Matrix {
    return hermitian_evolution(h, -t) * hermitian_evolution(h + dtheta * delta, t);
  };
  auto expm = [](const Matrix& lambda) -> Matrix {
    Matrix herm = Complex(0, 1) * lambda;
    herm = 0.5 * (herm + herm.adjoint()).eval();
    return hermitian_evolution(herm, 1.0);
  };
  std::vector<double> et;
  for (double t : {0.2, 0.1, 0.05, 0.025}) {
    et.push_back(max_norm(expm(loschmidt(h, delta, t, 1e-3)) - exact(t, 1e-3)));
  }
  double min_t_order = 1e300;
  for (std::size_t i = 0; i + 1 < et.size(); ++i) {
    min_t_order = std::min(min_t_order, observed_order(et[i], et[i + 1]));
  }
  std::vector<double> ed;
  for (double dtheta : {0.08, 0.04, 0.02, 0.01}) {
    ed.push_back(max_norm(expm(loschmidt_series(h, delta, 0.5, dtheta)) - exact(0.5, dtheta)));
  }
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 0; i + 1 < ed.size(); ++i) {
    const double p = observed_order(ed[i], ed[i + 1]);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "t-order min=" << min_t_order << " (>=3.7); dtheta-order range=[" << lo << "," << hi
     << "] (in [1.8,2.2])";
  return {6, "Loschmidt echo expansion orders", min_t_order >= 3.7 && lo >= 1.8 && hi <= 2.2,
          os.str(), t};
}

CriterionResult check_geodesic(std::uint64_t seed) {
  Stopwatch sw;
  const KLocalHamiltonian h = sample_klocal(3, 2, false, 1.0, seed);
  std::vector<double> r;
  for (double step : {0.04, 0.02, 0.01, 0.005}) r.push_back(geodesic_residual(h, 0.7, step));
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double p = observed_order(r[i], r[i + 1]);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "observed order range=[" << lo << "," << hi << "] (2.0 +- 0.2)";
  return {7, "geodesic residual convergence", lo >= 1.8 && hi <= 2.2, os.str(), t};
}

CriterionResult check_metric_axioms(std::uint64_t seed) {
  Stopwatch sw;
  const GateSet gs = GateSet::clifford2();
  const ComplexityBall ball = sphere_growth(gs, 64);
  auto rng = stream_rng(seed, 0);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  auto dist = [&](const Matrix& u, const Matrix& v) { return relative_complexity(u, v, ball); };
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const Matrix& u = ball.element(pick(rng));
    const Matrix& v = ball.element(pick(rng));
    const Matrix& w = ball.element(pick(rng));
    const Matrix& r = ball.element(pick(rng));
    const auto uv = dist(u, v), vu = dist(v, u), uu = dist(u, u);
    const auto uw = dist(u, w), vw = dist(v, w), right = dist(u * r, v * r);
    if (!uv || !vu || !uu || !uw || !vw || !right) {
      ++violations;
      continue;
    }
    const bool same = phase_insensitive_distance(u, v) < 1e-9;
    if (*uu != 0) ++violations;
    if ((*uv == 0) != same) ++violations;
    if (*uv != *vu) ++violations;
    if (*uw > *uv + *vw) ++violations;
    if (*uv != *right) ++violations;
  }
  int switchback_violations = 0;
  std::uniform_int_distribution<std::size_t> pick_gate(0, gs.gates().size() - 1);
  std::uniform_int_distribution<unsigned> pick_len(0, 5);
  std::uniform_int_distribution<std::size_t> pick_w(0, 5);
  for (int i = 0; i < 50; ++i) {
    const unsigned len = pick_len(rng);
    Matrix u = Matrix::Identity(4, 4);
    for (unsigned j = 0; j < len; ++j) u = gs.gates()[pick_gate(rng)].matrix * u;
    const auto c = ball.depth_of(u * gs.gates()[pick_w(rng)].matrix * u.adjoint());
    if (!c || *c > 2 * len + 1) ++switchback_violations;
  }
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "ball size=" << ball.size() << ", axiom violations=" << violations
     << " over 200 pairs, switchback violations=" << switchback_violations << " over 50";
  return {8, "complexity metric axioms and switchback",
          ball.saturated() && violations == 0 && switchback_violations == 0, os.str(), t};
}

CriterionResult check_tfd_suite(std::uint64_t seed) {
  Stopwatch sw;
  const auto spec = spectrum_of(sample_klocal(3, 2, false, 3.0, seed));
  const double inf = std::numeric_limits<double>::infinity();
  double trace_err = 0.0;
  for (double beta : {0.0, 0.5, 2.0, inf}) {
    const TFDState s = tfd(spec, beta);
    const Matrix thermal = thermal_state(spec, beta).matrix();
    for (Side side : {Side::Left, Side::Right}) {
      trace_err = std::max(trace_err, max_norm(partial_trace(s, side).matrix() - thermal));
    }
  }
  const TFDState s = tfd(spec, 0.7);
  const Vector v = s.vector();
  double minus_err = 0.0, max_fidelity = 0.0;
  for (double time : {0.3, 2.0, 10.0}) {
    minus_err = std::max(minus_err, (evolve_tfd(s, time, time, TimeSign::Minus) - v).norm());
    max_fidelity = std::max(max_fidelity, std::abs(v.dot(evolve_tfd(s, time, time, TimeSign::Plus))));
  }
  const double hot_err = std::abs(von_neumann_entropy(partial_trace(tfd(spec, 0.0), Side::Right)) -
                                  std::log(static_cast<double>(spec.size())));
  const int samples = 200;
  double page_sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    page_sum += subsystem_entropy(random_circuit_state(4, 40, seed + 1000 + i), 4, 2);
  }
  const double page_mean = page_sum / samples;
  const double page_rel = std::abs(page_mean / std::log(4.0) - 1.0);
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "partial-trace err=" << trace_err << " (<1e-12); H_L-H_R err=" << minus_err
     << " (<1e-10); H_L+H_R max fidelity=" << max_fidelity << " (<1); beta=0 entropy err="
     << hot_err << " (<1e-12); deep-circuit S(2 of 4 qubits)=" << page_mean
     << " vs ln4=" << std::log(4.0) << " rel.dev=" << page_rel << " (<0.10; Haar average is "
     << page_entropy(4, 4) << ")";
  const bool passed = trace_err < 1e-12 && minus_err < 1e-10 && max_fidelity < 1.0 &&
                      hot_err < 1e-12 && page_rel < 0.10;
  return {9, "thermofield double suite", passed, os.str(), t};
}

CriterionResult check_counting() {
  Stopwatch sw;
  const double cmax = max_complexity(2, 0.1);
  const bool cmax_ok = std::abs(cmax - 61.15) <= 0.01;
  const bool params_ok = parameter_count(4, 2) == 54;
  bool slope_ok = true;
  for (unsigned k = 1; k <= 6; ++k) {
    const double slope = log_num_unitaries(k, std::exp(-3.0)) - log_num_unitaries(k, std::exp(-2.0));
    slope_ok = slope_ok && slope == std::ldexp(1.0, 2 * static_cast<int>(k));
  }
  double worst = 0.0;
  for (unsigned k : {2u, 3u}) {
    worst = std::max(worst, std::abs(log_num_unitaries(k, 0.1) / log_num_unitaries_exact(k, 0.1) - 1.0));
  }
  const double t = sw.seconds();
  auto os = detail_stream();
  os << "C_max(2,0.1)=" << std::setprecision(8) << cmax << std::setprecision(6)
     << " (61.15+-0.01), parameter_count(4,2)=" << parameter_count(4, 2)
     << ", d lnN/d ln(1/eps)=4^K " << (slope_ok ? "exact" : "MISMATCH")
     << ", max |approx/exact-1|=" << worst << " (<0.2)";
  return {10, "counting estimates", cmax_ok && params_ok && slope_ok && worst < 0.2, os.str(), t};
}

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed) {
  return {check_wdw_identity(),      check_wormhole_growth(),   check_high_temperature_cv(),
          check_epidemic(seed),      check_curvature(seed),     check_loschmidt(seed),
          check_geodesic(seed),      check_metric_axioms(seed), check_tfd_suite(seed),
          check_counting()};
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " ("
     << std::fixed << std::setprecision(3) << r.seconds << " s) " << r.detail;
  return os.str();
}

}  // namespace cxlab
