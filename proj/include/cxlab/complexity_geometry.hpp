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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "cxlab/linalg.hpp"
#include "cxlab/pauli_algebra.hpp"

namespace cxlab {

/// Diagonal moment-of-inertia tensor of the complexity metric:
/// I(ω) = 1 for ω <= k and c·4^(ω−k) above the locality threshold.
struct PenaltySchedule {
  PenaltySchedule(unsigned locality, double base);

  /// Schedule with k = 2 whose weight-3 penalty equals `i3`.
  static PenaltySchedule with_weight3_penalty(double i3);

  unsigned k;
  double c;
};

/// Throws std::invalid_argument for ω = 0.
double penalty(std::size_t weight, const PenaltySchedule& ps);

/// Components along σ_I of a tangent vector at any point of SU(2^K).
using TangentVector = std::map<PauliString, double>;

/// Σ_I I(ω_I) v_I^2.
double metric_norm_sq(const TangentVector& v, const PenaltySchedule& ps);

using UnitaryPath = std::function<Matrix(double)>;

/// J_I = i·Tr(σ_I U̇ U†) with a central difference of width h. Components
/// below 1e-12 in magnitude are omitted. Throws NumericError if a sample is
/// not unitary or a component has a non-negligible imaginary part.
TangentVector velocity_components(const UnitaryPath& path, double t, double h = 1e-4);

struct PathSample {
  double t;
  TangentVector velocity;
};

/// Trapezoid rule for ∫ ½ ‖V‖² dt. Requires >= 2 samples with strictly
/// increasing t.
double path_action(const std::vector<PathSample>& samples, const PenaltySchedule& ps);

/// Trapezoid rule for ∫ ‖V‖ dt.
double path_length(const std::vector<PathSample>& samples, const PenaltySchedule& ps);

/// max |Ü − U̇ U† U̇| with second-order central differences of step h.
double geodesic_residual(const KLocalHamiltonian& h, double t, double step);
double geodesic_residual(const UnitaryPath& path, double t, double step);

/// Cubic-in-t generator Λ with exp(Λ) ≈ e^{iHt} e^{−i(H+Δ dθ)t}:
/// Λ = −(iΔt − (t²/2)[H,Δ] − (it³/6)[H,[H,Δ]])·dθ.
/// Throws std::invalid_argument unless Tr(ΔH) vanishes to 1e-10.
Matrix loschmidt(const Matrix& h, const Matrix& delta, double t, double dtheta);

/// Same generator to every order in t (first order in dθ):
/// Λ = −i dθ ∫_0^t e^{iHs} Δ e^{−iHs} ds, evaluated in the eigenbasis of H.
Matrix loschmidt_series(const Matrix& h, const Matrix& delta, double t, double dtheta);

/// 2·Tr([H,Δ][Δ,H]) / (Tr Δ² · Tr H²) with normalised traces.
double commutator_trace_ratio(const KLocalHamiltonian& h, const KLocalHamiltonian& delta);

/// Sectional curvature of the (H, Δ) plane at the identity:
/// (1/3 − I(3)/4)·commutator_trace_ratio. Both inputs must be exactly
/// 2-local, orthogonal and nonzero (std::invalid_argument otherwise).
double sectional_curvature(const KLocalHamiltonian& h, const KLocalHamiltonian& delta,
                           const PenaltySchedule& ps);

/// Draws an exactly 2-local Hamiltonian on the same qubits and removes its
/// component along H under the trace inner product.
KLocalHamiltonian sample_orthogonal_direction(const KLocalHamiltonian& h, std::uint64_t seed,
                                              std::uint64_t draw);

struct CurvatureEnsemble {
  double mean;
  double std_error;
  double trace_ratio_mean;
};

/// Averages over `trials` independent (H, Δ) pairs. Requires even K >= 4.
CurvatureEnsemble curvature_ensemble(unsigned num_qubits, const PenaltySchedule& ps,
                                     unsigned trials, std::uint64_t seed);

}  // namespace cxlab
