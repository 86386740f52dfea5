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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cxlab/linalg.hpp"

namespace cxlab {

/// Dense matrices are capped at 10 qubits (dimension 1024).
inline constexpr std::size_t kMaxDenseQubits = 10;
inline constexpr std::size_t kMaxPauliQubits = 64;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// A tensor product of single-qubit Paulis. Letter 0 is the leftmost Kronecker
/// factor, i.e. the most significant bit of a computational-basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t num_qubits);

  /// Parses letters from {I, X, Y, Z} (also accepts '_' for identity).
  static PauliString parse(std::string_view letters);

  std::size_t num_qubits() const { return num_qubits_; }
  Pauli letter(std::size_t qubit) const;
  void set_letter(std::size_t qubit, Pauli p);

  /// Number of non-identity letters.
  std::size_t weight() const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool commutes_with(const PauliString& other) const;
  std::string str() const;

  /// Bit masks indexed like basis states: qubit q lives at bit (K-1-q).
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  auto operator<=>(const PauliString&) const = default;

 private:
  std::uint64_t bit(std::size_t qubit) const;

  std::size_t num_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept;
};

/// σ_a σ_b = phase · σ_c.
struct PauliProduct {
  Complex phase;
  PauliString string;
};
PauliProduct multiply(const PauliString& a, const PauliString& b);

/// Sparse operator in the Pauli basis, O = Σ_I c_I σ_I.
using PauliSum = std::unordered_map<PauliString, Complex, PauliStringHash>;

/// [A, B] computed term by term; only anticommuting pairs contribute.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Σ_I |c_I|^2, which equals the normalised trace Tr(O† O).
double pauli_norm_sq(const PauliSum& op);

/// Strings with min_weight <= weight <= max_weight, ordered by weight, then by
/// qubit support (lexicographic), then by letters X < Y < Z.
std::vector<PauliString> enumerate_pauli_strings(std::size_t num_qubits,
                                                 std::size_t min_weight,
                                                 std::size_t max_weight);

/// Dense 2^K x 2^K matrix of a Pauli string. K <= kMaxDenseQubits.
Matrix pauli_matrix(const PauliString& p);

/// Normalised trace Tr(A B) / dim, so that Tr(1) = 1 and Tr(σ_I σ_J) = δ_IJ.
Complex normalized_trace_product(const Matrix& a, const Matrix& b);

/// Tr(σ_p M) / dim without forming σ_p.
Complex pauli_component(const PauliString& p, const Matrix& m);

/// A k-local Hamiltonian H = Σ_I J_I σ_I with real couplings.
class KLocalHamiltonian {
 public:
  using Terms = std::map<PauliString, double>;

  /// Validates that every term acts on `num_qubits` qubits with
  /// 1 <= weight <= locality (weight == locality when exactly_local).
  KLocalHamiltonian(std::size_t num_qubits, std::size_t locality, bool exactly_local,
                    Terms terms, double coupling_variance = 1.0);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t locality() const { return locality_; }
  bool exactly_local() const { return exactly_local_; }
  /// Per-coupling Gaussian variance of the ensemble the couplings came from.
  double coupling_variance() const { return coupling_variance_; }
  const Terms& terms() const { return terms_; }

  /// Σ_I J_I^2, the energy variance (ΔH)^2 under the normalised trace.
  double coupling_norm_sq() const;
  Matrix matrix() const;
  PauliSum pauli_sum() const;

 private:
  std::size_t num_qubits_;
  std::size_t locality_;
  bool exactly_local_;
  double coupling_variance_;
  Terms terms_;
};

/// Draws independent zero-mean Gaussian couplings on every admissible string.
/// The per-coupling variance is target_energy_variance / N_terms, so that
/// E[Σ J_I^2] = target_energy_variance. Each (seed, draw) pair is its own
/// RNG stream.
KLocalHamiltonian sample_klocal(std::size_t num_qubits, std::size_t locality,
                                bool exactly_local, double target_energy_variance,
                                std::uint64_t seed, std::uint64_t draw = 0);

/// Number of admissible strings for sample_klocal.
std::size_t admissible_term_count(std::size_t num_qubits, std::size_t locality,
                                  bool exactly_local);

/// U(t) = exp(-i H t). Unitary to 1e-10.
Matrix evolve(const KLocalHamiltonian& h, double t);
Matrix evolve(const Matrix& h, double t);

}  // namespace cxlab
