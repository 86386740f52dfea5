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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cxlab/linalg.hpp"

namespace cxlab {

inline constexpr double kDefaultGateEpsilon = 1e-6;

/// Hashable fingerprint of a unitary up to global phase: the phase is fixed
/// so that the first largest-magnitude entry is real and nonnegative, then
/// every real/imaginary part is rounded to a grid of pitch epsilon / dim.
using CanonicalKey = std::vector<std::int64_t>;

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

CanonicalKey canonical_key(const Matrix& u, double epsilon = kDefaultGateEpsilon);

/// U multiplied by the global phase that makes its pivot entry real and
/// nonnegative. The pivot is the lowest row-major index among entries within
/// 1e-12 of the largest magnitude.
Matrix fix_global_phase(const Matrix& u);

/// Max-norm distance between U and V after fixing both global phases.
double phase_insensitive_distance(const Matrix& u, const Matrix& v);

struct LabeledGate {
  std::string label;
  Matrix matrix;
};

/// Finite gate set closed under inverses (up to global phase and epsilon).
class GateSet {
 public:
  /// Throws std::invalid_argument if a gate has the wrong dimension, is not
  /// unitary, or has no inverse in the set.
  GateSet(unsigned num_qubits, std::vector<LabeledGate> gates,
          double epsilon = kDefaultGateEpsilon);

  /// {CNOT_12, CNOT_21}.
  static GateSet cnot_pair();
  /// Two-qubit Clifford generators {H1, H2, S1, S1†, S2, S2†, CNOT_12, CNOT_21}.
  static GateSet clifford2();
  /// `pairs` Haar-random gates together with their inverses.
  static GateSet random_inverse_closed(unsigned num_qubits, unsigned pairs, std::uint64_t seed);
  static GateSet by_name(const std::string& name);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }
  double epsilon() const { return epsilon_; }
  const std::vector<LabeledGate>& gates() const { return gates_; }
  /// Index of the gate equal to gates()[i]† (within epsilon, up to phase).
  std::size_t inverse_of(std::size_t i) const { return inverse_[i]; }

 private:
  unsigned num_qubits_;
  double epsilon_;
  std::vector<LabeledGate> gates_;
  std::vector<std::size_t> inverse_;
};

/// Breadth-first Cayley ball around the identity. Words are composed in
/// series: a word g_n ... g_1 is reached at depth n.
class ComplexityBall {
 public:
  /// counts()[D] = number of distinct unitaries first reached at depth D.
  const std::vector<std::size_t>& counts() const { return counts_; }
  std::size_t size() const { return elements_.size(); }
  const Matrix& element(std::size_t i) const { return elements_[i]; }
  unsigned element_depth(std::size_t i) const { return depths_[i]; }

  /// Complexity of U if U lies inside the ball.
  std::optional<unsigned> depth_of(const Matrix& u) const;

  /// True when the last layer added nothing new (the whole group is inside).
  bool saturated() const { return saturated_; }
  /// True when expansion stopped early because the element budget ran out.
  bool truncated() const { return truncated_; }
  double epsilon() const { return epsilon_; }

 private:
  friend ComplexityBall sphere_growth(const GateSet&, unsigned, std::size_t);
  friend std::optional<unsigned> bfs_complexity(const Matrix&, const GateSet&, unsigned);

  double epsilon_ = kDefaultGateEpsilon;
  std::vector<std::size_t> counts_;
  std::vector<Matrix> elements_;
  std::vector<unsigned> depths_;
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> index_;
  bool saturated_ = false;
  bool truncated_ = false;
};

inline constexpr std::size_t kDefaultBallBudget = 2'000'000;

/// BFS layer sizes up to max_depth (fewer layers if the group saturates or
/// the element budget is exceeded; see ComplexityBall::truncated()).
ComplexityBall sphere_growth(const GateSet& gates, unsigned max_depth,
                             std::size_t max_elements = kDefaultBallBudget);

/// Least n with target ≈ g_n ... g_1, or nullopt if not reached by max_depth.
std::optional<unsigned> bfs_complexity(const Matrix& target, const GateSet& gates,
                                       unsigned max_depth);

/// C(U, V) := C(U V†).
std::optional<unsigned> relative_complexity(const Matrix& u, const Matrix& v,
                                            const GateSet& gates, unsigned max_depth);
std::optional<unsigned> relative_complexity(const Matrix& u, const Matrix& v,
                                            const ComplexityBall& ball);

}  // namespace cxlab
