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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cxlab/linalg.hpp"

namespace cxlab {

/// Hermitian, unit-trace, positive semidefinite matrix (all to 1e-10).
class DensityMatrix {
 public:
  /// Throws std::invalid_argument if any of the three properties fails.
  explicit DensityMatrix(Matrix rho);

  const Matrix& matrix() const { return rho_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  RealVector eigenvalues() const;

 private:
  Matrix rho_;
};

/// Diagonal Gibbs state e^{−βE_i}/Z in the energy basis. beta may be
/// +infinity, giving the uniform mixture over ground states.
DensityMatrix thermal_state(const std::vector<double>& spectrum, double beta);

/// −Σ λ ln λ with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Σ_i √p_i |E_i⟩|E_i⟩ on two copies of the system. The mirror copy uses the
/// complex-conjugated energy basis, which coincides with the original one.
class TFDState {
 public:
  TFDState(std::vector<double> spectrum, double beta);

  const std::vector<double>& spectrum() const { return spectrum_; }
  double beta() const { return beta_; }
  const RealVector& amplitudes() const { return amplitudes_; }
  std::size_t left_dim() const { return spectrum_.size(); }
  std::size_t right_dim() const { return spectrum_.size(); }
  /// Vector on the product space with index i·right_dim + j.
  Vector vector() const;

 private:
  std::vector<double> spectrum_;
  double beta_;
  RealVector amplitudes_;
};

TFDState tfd(const std::vector<double>& spectrum, double beta);

/// Which factor gets traced out.
enum class Side { Left, Right };

DensityMatrix partial_trace(const Vector& psi, std::size_t left_dim, std::size_t right_dim,
                            Side traced);
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t left_dim,
                            std::size_t right_dim, Side traced);
DensityMatrix partial_trace(const TFDState& state, Side traced);

/// Minus: evolve with H_L − H_R, phases e^{−iE_i(t_l − t_r)}.
/// Plus: evolve with H_L + H_R, phases e^{−iE_i(t_l + t_r)}.
enum class TimeSign { Minus, Plus };

Vector evolve_tfd(const TFDState& state, double t_l, double t_r, TimeSign sign);

/// ⟨ψ| O_L ⊗ O_R |ψ⟩.
Complex two_sided_correlator(const Vector& psi, const Matrix& op_left, const Matrix& op_right);

/// arccos |⟨ψ|φ⟩|. Both inputs must be normalised to 1e-10.
double fubini_distance(const Vector& psi, const Vector& phi);

/// |0...0⟩ driven by `depth` brickwork layers of Haar-random two-qubit gates.
Vector random_circuit_state(unsigned num_qubits, unsigned depth, std::uint64_t seed);

/// Entropy of the leading `subsystem_qubits` qubits of a K-qubit pure state.
double subsystem_entropy(const Vector& psi, unsigned num_qubits, unsigned subsystem_qubits);

/// Mean entanglement entropy of an m-dimensional subsystem of a Haar-random
/// pure state on C^m ⊗ C^n (m <= n): Σ_{k=n+1}^{mn} 1/k − (m−1)/(2n).
double page_entropy(std::size_t m, std::size_t n);

}  // namespace cxlab
