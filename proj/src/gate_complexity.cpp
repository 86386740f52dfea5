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

#include "cxlab/gate_complexity.hpp"

#include <cmath>
#include <stdexcept>

namespace cxlab {
namespace {

constexpr double kPivotTieTolerance = 1e-12;

Matrix single_qubit(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix cnot(bool control_is_first) {
  Matrix m = Matrix::Zero(4, 4);
  for (int basis = 0; basis < 4; ++basis) {
    const int hi = basis >> 1, lo = basis & 1;
    const int out = control_is_first ? ((hi << 1) | (lo ^ hi)) : (((hi ^ lo) << 1) | lo);
    m(out, basis) = 1.0;
  }
  return m;
}

}  // namespace

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept {
  std::uint64_t h = key.size();
  for (std::int64_t v : key) h = mix_seed(h, static_cast<std::uint64_t>(v));
  return static_cast<std::size_t>(h);
}

Matrix fix_global_phase(const Matrix& u) {
  double largest = 0.0;
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) largest = std::max(largest, std::abs(u(i, j)));
  if (largest == 0.0) return u;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      const double mag = std::abs(u(i, j));
      if (mag >= largest - kPivotTieTolerance) {
        return u * (std::conj(u(i, j)) / mag);
      }
    }
  }
  return u;
}

double phase_insensitive_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("phase_insensitive_distance: dimension mismatch");
  }
  return max_norm(fix_global_phase(u) - fix_global_phase(v));
}

CanonicalKey canonical_key(const Matrix& u, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("canonical_key: epsilon must be positive");
  const Matrix fixed = fix_global_phase(u);
  const double pitch = epsilon / static_cast<double>(u.rows());
  CanonicalKey key;
  key.reserve(2 * static_cast<std::size_t>(u.size()) + 1);
  key.push_back(u.rows());
  for (Eigen::Index i = 0; i < fixed.rows(); ++i) {
    for (Eigen::Index j = 0; j < fixed.cols(); ++j) {
      key.push_back(std::llround(fixed(i, j).real() / pitch));
      key.push_back(std::llround(fixed(i, j).imag() / pitch));
    }
  }
  return key;
}

GateSet::GateSet(unsigned num_qubits, std::vector<LabeledGate> gates, double epsilon)
    : num_qubits_(num_qubits), epsilon_(epsilon), gates_(std::move(gates)) {
  if (num_qubits == 0 || num_qubits > 3) {
    throw std::invalid_argument("GateSet: supports 1 <= K <= 3");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("GateSet: epsilon must be positive");
  if (gates_.empty()) throw std::invalid_argument("GateSet: empty gate set");
  const auto d = static_cast<Eigen::Index>(dim());
  for (const auto& g : gates_) {
    if (g.matrix.rows() != d || g.matrix.cols() != d) {
      throw std::invalid_argument("GateSet: gate " + g.label + " has the wrong dimension");
    }
    if (!is_unitary(g.matrix, 1e-10)) {
      throw std::invalid_argument("GateSet: gate " + g.label + " is not unitary");
    }
  }
  inverse_.resize(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Matrix dagger = gates_[i].matrix.adjoint();
    bool found = false;
    for (std::size_t j = 0; j < gates_.size() && !found; ++j) {
      if (phase_insensitive_distance(dagger, gates_[j].matrix) <= epsilon_) {
        inverse_[i] = j;
        found = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("GateSet: set is not closed under inverses (no inverse for " +
                                  gates_[i].label + ")");
    }
  }
}

GateSet GateSet::cnot_pair() {
  return GateSet(2, {{"CNOT12", cnot(true)}, {"CNOT21", cnot(false)}});
}

GateSet GateSet::clifford2() {
  const double r = 1.0 / std::sqrt(2.0);
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix h = single_qubit(r, r, r, -r);
  const Matrix s = single_qubit(1, 0, 0, Complex(0, 1));
  const Matrix sdg = s.adjoint();
  return GateSet(2, {{"H1", kron(h, id)},
                     {"H2", kron(id, h)},
                     {"S1", kron(s, id)},
                     {"S1dg", kron(sdg, id)},
                     {"S2", kron(id, s)},
                     {"S2dg", kron(id, sdg)},
                     {"CNOT12", cnot(true)},
                     {"CNOT21", cnot(false)}});
}

GateSet GateSet::random_inverse_closed(unsigned num_qubits, unsigned pairs, std::uint64_t seed) {
  std::vector<LabeledGate> gates;
  for (unsigned i = 0; i < pairs; ++i) {
    auto rng = stream_rng(seed, i);
    Matrix u = haar_unitary(std::size_t{1} << num_qubits, rng);
    gates.push_back({"R" + std::to_string(i), u});
    gates.push_back({"R" + std::to_string(i) + "dg", u.adjoint()});
  }
  return GateSet(num_qubits, std::move(gates));
}

GateSet GateSet::by_name(const std::string& name) {
  if (name == "cnot") return cnot_pair();
  if (name == "clifford2") return clifford2();
  throw std::invalid_argument("unknown gate set '" + name + "' (expected cnot or clifford2)");
}

std::optional<unsigned> ComplexityBall::depth_of(const Matrix& u) const {
  auto it = index_.find(canonical_key(u, epsilon_));
  if (it == index_.end()) return std::nullopt;
  return depths_[it->second];
}

namespace {

// Shared BFS driver. Stops early when `target` is reached.
std::optional<unsigned> grow_ball(ComplexityBall& ball, std::vector<std::size_t>& counts,
                                  std::vector<Matrix>& elements, std::vector<unsigned>& depths,
                                  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash>& index,
                                  bool& saturated, bool& truncated, const GateSet& gates,
                                  unsigned max_depth, std::size_t budget,
                                  const CanonicalKey* target) {
  (void)ball;
  const double eps = gates.epsilon();
  const auto d = static_cast<Eigen::Index>(gates.dim());
  elements.push_back(Matrix::Identity(d, d));
  depths.push_back(0);
  index.emplace(canonical_key(elements.back(), eps), 0);
  counts.push_back(1);
  if (target && index.count(*target)) return 0u;

  std::size_t layer_begin = 0;
  for (unsigned depth = 1; depth <= max_depth; ++depth) {
    const std::size_t layer_end = elements.size();
    for (std::size_t e = layer_begin; e < layer_end; ++e) {
      for (const auto& g : gates.gates()) {
        Matrix next = g.matrix * elements[e];
        CanonicalKey key = canonical_key(next, eps);
        if (index.count(key)) continue;
        if (elements.size() >= budget) {
          // Drop the incomplete layer so counts only report finished depths.
          for (std::size_t i = layer_end; i < elements.size(); ++i) {
            index.erase(canonical_key(elements[i], eps));
          }
          elements.resize(layer_end);
          depths.resize(layer_end);
          truncated = true;
          return std::nullopt;
        }
        const bool hit = target && key == *target;
        index.emplace(std::move(key), elements.size());
        elements.push_back(std::move(next));
        depths.push_back(depth);
        if (hit) {
          counts.push_back(elements.size() - layer_end);
          return depth;
        }
      }
    }
    const std::size_t added = elements.size() - layer_end;
    if (added == 0) {
      saturated = true;
      return std::nullopt;
    }
    counts.push_back(added);
    layer_begin = layer_end;
  }
  return std::nullopt;
}

}  // namespace

ComplexityBall sphere_growth(const GateSet& gates, unsigned max_depth, std::size_t max_elements) {
  ComplexityBall ball;
  ball.epsilon_ = gates.epsilon();
  grow_ball(ball, ball.counts_, ball.elements_, ball.depths_, ball.index_, ball.saturated_,
            ball.truncated_, gates, max_depth, max_elements, nullptr);
  return ball;
}

std::optional<unsigned> bfs_complexity(const Matrix& target, const GateSet& gates,
                                       unsigned max_depth) {
  const auto d = static_cast<Eigen::Index>(gates.dim());
  if (target.rows() != d || target.cols() != d) {
    throw std::invalid_argument("bfs_complexity: target dimension does not match the gate set");
  }
  ComplexityBall ball;
  ball.epsilon_ = gates.epsilon();
  const CanonicalKey key = canonical_key(target, gates.epsilon());
  return grow_ball(ball, ball.counts_, ball.elements_, ball.depths_, ball.index_, ball.saturated_,
                   ball.truncated_, gates, max_depth, kDefaultBallBudget, &key);
}

std::optional<unsigned> relative_complexity(const Matrix& u, const Matrix& v,
                                            const GateSet& gates, unsigned max_depth) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("relative_complexity: dimension mismatch");
  }
  return bfs_complexity(u * v.adjoint(), gates, max_depth);
}

std::optional<unsigned> relative_complexity(const Matrix& u, const Matrix& v,
                                            const ComplexityBall& ball) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("relative_complexity: dimension mismatch");
  }
  return ball.depth_of(u * v.adjoint());
}

}  // namespace cxlab
