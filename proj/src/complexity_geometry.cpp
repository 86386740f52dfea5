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

#include "cxlab/complexity_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace cxlab {
namespace {

constexpr double kDropBelow = 1e-12;
constexpr double kOrthogonalityTol = 1e-10;

Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

void check_square_pair(const Matrix& h, const Matrix& delta, const char* who) {
  if (h.rows() != h.cols() || delta.rows() != h.rows() || delta.cols() != h.cols()) {
    throw std::invalid_argument(std::string(who) + ": H and Δ must be square and equal size");
  }
}

void check_orthogonal(const Matrix& h, const Matrix& delta) {
  const double overlap = std::abs(normalized_trace_product(delta, h));
  const double scale = std::sqrt(std::abs(normalized_trace_product(h, h)) *
                                 std::abs(normalized_trace_product(delta, delta)));
  if (overlap > kOrthogonalityTol * std::max(1.0, scale)) {
    throw std::invalid_argument("loschmidt: Tr(ΔH) must vanish");
  }
}

double inner(const KLocalHamiltonian& a, const KLocalHamiltonian& b) {
  double s = 0.0;
  for (const auto& [p, j] : a.terms()) {
    auto it = b.terms().find(p);
    if (it != b.terms().end()) s += j * it->second;
  }
  return s;
}

double trapezoid(const std::vector<PathSample>& samples, const PenaltySchedule& ps,
                 double (*integrand)(double)) {
  if (samples.size() < 2) throw std::invalid_argument("path integral: need at least 2 samples");
  double total = 0.0;
  double prev = integrand(metric_norm_sq(samples[0].velocity, ps));
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double dt = samples[i].t - samples[i - 1].t;
    if (!(dt > 0.0)) throw std::invalid_argument("path integral: t must be strictly increasing");
    const double cur = integrand(metric_norm_sq(samples[i].velocity, ps));
    total += 0.5 * dt * (prev + cur);
    prev = cur;
  }
  return total;
}

}  // namespace

PenaltySchedule::PenaltySchedule(unsigned locality, double base) : k(locality), c(base) {
  if (locality < 1) throw std::invalid_argument("PenaltySchedule: k must be positive");
  if (!(base > 0.0) || !std::isfinite(base)) {
    throw std::invalid_argument("PenaltySchedule: c must be positive and finite");
  }
}

PenaltySchedule PenaltySchedule::with_weight3_penalty(double i3) { return {2, i3 / 4.0}; }

double penalty(std::size_t weight, const PenaltySchedule& ps) {
  if (weight == 0) throw std::invalid_argument("penalty: weight must be positive");
  if (weight <= ps.k) return 1.0;
  return ps.c * std::ldexp(1.0, 2 * static_cast<int>(weight - ps.k));
}

double metric_norm_sq(const TangentVector& v, const PenaltySchedule& ps) {
  double s = 0.0;
  for (const auto& [p, x] : v) s += penalty(p.weight(), ps) * x * x;
  return s;
}

TangentVector velocity_components(const UnitaryPath& path, double t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("velocity_components: h must be positive");
  const Matrix u = path(t), plus = path(t + h), minus = path(t - h);
  for (const Matrix* m : {&u, &plus, &minus}) {
    if (!is_unitary(*m, 1e-8)) throw NumericError("velocity_components: path sample is not unitary");
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < static_cast<std::size_t>(u.rows())) ++k;
  if ((std::size_t{1} << k) != static_cast<std::size_t>(u.rows())) {
    throw std::invalid_argument("velocity_components: dimension is not a power of two");
  }
  const Matrix generator = (plus - minus) / (2.0 * h) * u.adjoint();
  const double imag_tol = 1e-6 * std::max(1.0, max_norm(generator));
  TangentVector v;
  for (const PauliString& p : enumerate_pauli_strings(k, 1, k)) {
    const Complex j = Complex(0, 1) * pauli_component(p, generator);
    if (std::abs(j.imag()) > imag_tol) {
      throw NumericError("velocity_components: component " + p.str() + " is not real");
    }
    if (std::abs(j.real()) > kDropBelow) v.emplace(p, j.real());
  }
  return v;
}

double path_action(const std::vector<PathSample>& samples, const PenaltySchedule& ps) {
  return trapezoid(samples, ps, [](double n2) { return 0.5 * n2; });
}

double path_length(const std::vector<PathSample>& samples, const PenaltySchedule& ps) {
  return trapezoid(samples, ps, [](double n2) { return std::sqrt(n2); });
}

double geodesic_residual(const UnitaryPath& path, double t, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("geodesic_residual: step must be positive");
  const Matrix u = path(t), plus = path(t + step), minus = path(t - step);
  const Matrix du = (plus - minus) / (2.0 * step);
  const Matrix ddu = (plus - 2.0 * u + minus) / (step * step);
  return max_norm(ddu - du * u.adjoint() * du);
}

double geodesic_residual(const KLocalHamiltonian& h, double t, double step) {
  const Propagator prop(h.matrix());
  return geodesic_residual([&prop](double s) { return prop.at(s); }, t, step);
}

Matrix loschmidt(const Matrix& h, const Matrix& delta, double t, double dtheta) {
  check_square_pair(h, delta, "loschmidt");
  check_orthogonal(h, delta);
  const Complex i(0, 1);
  const Matrix hd = comm(h, delta);
  return -(i * t * delta - 0.5 * t * t * hd - i * (t * t * t / 6.0) * comm(h, hd)) * dtheta;
}

Matrix loschmidt_series(const Matrix& h, const Matrix& delta, double t, double dtheta) {
  check_square_pair(h, delta, "loschmidt_series");
  check_orthogonal(h, delta);
  const Propagator prop(h);
  const Matrix& v = prop.eigenvectors();
  const RealVector& e = prop.energies();
  Matrix d = v.adjoint() * delta * v;
  const Complex i(0, 1);
  for (Eigen::Index a = 0; a < d.rows(); ++a) {
    for (Eigen::Index b = 0; b < d.cols(); ++b) {
      const double w = e(a) - e(b);
      // ∫_0^t e^{iws} ds, with a short series when wt is tiny.
      const double x = w * t;
      Complex integral;
      if (std::abs(x) < 1e-4) {
        integral = t * (1.0 + i * x / 2.0 - x * x / 6.0 - i * x * x * x / 24.0);
      } else {
        integral = (std::exp(i * x) - 1.0) / (i * w);
      }
      d(a, b) *= -i * dtheta * integral;
    }
  }
  return v * d * v.adjoint();
}

double commutator_trace_ratio(const KLocalHamiltonian& h, const KLocalHamiltonian& delta) {
  const double hn = h.coupling_norm_sq(), dn = delta.coupling_norm_sq();
  if (!(hn > 0.0) || !(dn > 0.0)) {
    throw std::invalid_argument("commutator_trace_ratio: zero-norm direction");
  }
  // [H,Δ] is anti-Hermitian, so Tr([H,Δ][Δ,H]) = Tr(C C†) = Σ |c_I|².
  const double cc = pauli_norm_sq(commutator(h.pauli_sum(), delta.pauli_sum()));
  return 2.0 * cc / (dn * hn);
}

double sectional_curvature(const KLocalHamiltonian& h, const KLocalHamiltonian& delta,
                           const PenaltySchedule& ps) {
  for (const KLocalHamiltonian* x : {&h, &delta}) {
    if (!x->exactly_local() || x->locality() != 2) {
      throw std::invalid_argument("sectional_curvature: inputs must be exactly 2-local");
    }
  }
  if (h.num_qubits() != delta.num_qubits()) {
    throw std::invalid_argument("sectional_curvature: qubit counts differ");
  }
  const double hn = h.coupling_norm_sq(), dn = delta.coupling_norm_sq();
  if (!(hn > 0.0) || !(dn > 0.0)) {
    throw std::invalid_argument("sectional_curvature: zero-norm direction");
  }
  if (std::abs(inner(h, delta)) > kOrthogonalityTol * std::sqrt(hn * dn)) {
    throw std::invalid_argument("sectional_curvature: H and Δ are not orthogonal");
  }
  return (1.0 / 3.0 - penalty(3, ps) / 4.0) * commutator_trace_ratio(h, delta);
}

KLocalHamiltonian sample_orthogonal_direction(const KLocalHamiltonian& h, std::uint64_t seed,
                                              std::uint64_t draw) {
  const KLocalHamiltonian raw =
      sample_klocal(h.num_qubits(), 2, true, h.coupling_norm_sq(), seed, draw);
  const double hn = h.coupling_norm_sq();
  if (!(hn > 0.0)) throw std::invalid_argument("sample_orthogonal_direction: H is zero");
  const double coeff = inner(raw, h) / hn;
  KLocalHamiltonian::Terms terms = raw.terms();
  for (const auto& [p, j] : h.terms()) terms[p] -= coeff * j;
  return KLocalHamiltonian(h.num_qubits(), 2, true, std::move(terms), raw.coupling_variance());
}

CurvatureEnsemble curvature_ensemble(unsigned num_qubits, const PenaltySchedule& ps,
                                     unsigned trials, std::uint64_t seed) {
  if (num_qubits < 4 || num_qubits % 2 != 0) {
    throw std::invalid_argument("curvature_ensemble: K must be even and at least 4");
  }
  if (trials == 0) throw std::invalid_argument("curvature_ensemble: trials must be positive");
  double sum = 0.0, sum_sq = 0.0, ratio_sum = 0.0;
  for (unsigned i = 0; i < trials; ++i) {
    const KLocalHamiltonian h = sample_klocal(num_qubits, 2, true, 1.0, seed, 2 * std::uint64_t{i});
    const KLocalHamiltonian d = sample_orthogonal_direction(h, seed, 2 * std::uint64_t{i} + 1);
    const double ratio = commutator_trace_ratio(h, d);
    const double r = sectional_curvature(h, d, ps);
    sum += r;
    sum_sq += r * r;
    ratio_sum += ratio;
  }
  const double n = trials;
  const double mean = sum / n;
  double se = 0.0;
  if (trials > 1) se = std::sqrt(std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) / n);
  return {mean, se, ratio_sum / n};
}

}  // namespace cxlab
