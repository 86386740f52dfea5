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

#include "cxlab/tfd_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cxlab {
namespace {

constexpr double kStateTol = 1e-10;

std::vector<double> boltzmann_weights(const std::vector<double>& spectrum, double beta) {
  if (spectrum.empty()) throw std::invalid_argument("thermal_state: empty spectrum");
  for (double e : spectrum) {
    if (!std::isfinite(e)) throw std::invalid_argument("thermal_state: non-finite energy");
  }
  if (std::isnan(beta) || beta < 0.0) {
    throw std::invalid_argument("thermal_state: beta must be >= 0 or +infinity");
  }
  const double e0 = *std::min_element(spectrum.begin(), spectrum.end());
  std::vector<double> p(spectrum.size());
  if (std::isinf(beta)) {
    const double tol = 1e-12 * std::max(1.0, std::abs(e0));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = spectrum[i] - e0 <= tol ? 1.0 : 0.0;
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::exp(-beta * (spectrum[i] - e0));
  }
  double z = 0.0;
  for (double w : p) z += w;
  for (double& w : p) w /= z;
  return p;
}

void check_normalized(const Vector& v, const char* who) {
  if (std::abs(v.norm() - 1.0) > kStateTol) {
    throw std::invalid_argument(std::string(who) + ": state is not normalised");
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
  }
  if (!is_hermitian(rho_, kStateTol)) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(rho_.trace() - 1.0) > kStateTol) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  if (eigenvalues().minCoeff() < -kStateTol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
}

RealVector DensityMatrix::eigenvalues() const {
  const Matrix sym = 0.5 * (rho_ + rho_.adjoint());
  return Eigen::SelfAdjointEigenSolver<Matrix>(sym, Eigen::EigenvaluesOnly).eigenvalues();
}

DensityMatrix thermal_state(const std::vector<double>& spectrum, double beta) {
  const auto p = boltzmann_weights(spectrum, beta);
  Matrix rho = Matrix::Zero(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) rho(i, i) = p[i];
  return DensityMatrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  const RealVector lambda = rho.eigenvalues();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > 0.0) s -= lambda(i) * std::log(lambda(i));
  }
  return s;
}

TFDState::TFDState(std::vector<double> spectrum, double beta)
    : spectrum_(std::move(spectrum)), beta_(beta) {
  const auto p = boltzmann_weights(spectrum_, beta_);
  amplitudes_.resize(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) amplitudes_(i) = std::sqrt(p[i]);
}

Vector TFDState::vector() const {
  const auto n = static_cast<Eigen::Index>(spectrum_.size());
  Vector v = Vector::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) v(i * n + i) = amplitudes_(i);
  return v;
}

TFDState tfd(const std::vector<double>& spectrum, double beta) { return {spectrum, beta}; }

DensityMatrix partial_trace(const Vector& psi, std::size_t left_dim, std::size_t right_dim,
                            Side traced) {
  if (left_dim == 0 || right_dim == 0 ||
      static_cast<std::size_t>(psi.size()) != left_dim * right_dim) {
    throw std::invalid_argument("partial_trace: state size does not match left_dim * right_dim");
  }
  check_normalized(psi, "partial_trace");
  // psi(i * right_dim + j) = M(i, j).
  const auto dl = static_cast<Eigen::Index>(left_dim), dr = static_cast<Eigen::Index>(right_dim);
  Matrix m(dl, dr);
  for (Eigen::Index i = 0; i < dl; ++i)
    for (Eigen::Index j = 0; j < dr; ++j) m(i, j) = psi(i * dr + j);
  Matrix rho = traced == Side::Right ? Matrix(m * m.adjoint())
                                     : Matrix(m.transpose() * m.conjugate());
  return DensityMatrix(std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t left_dim,
                            std::size_t right_dim, Side traced) {
  if (rho.dim() != left_dim * right_dim) {
    throw std::invalid_argument("partial_trace: density matrix size does not match the factors");
  }
  const auto dl = static_cast<Eigen::Index>(left_dim), dr = static_cast<Eigen::Index>(right_dim);
  const Matrix& r = rho.matrix();
  if (traced == Side::Right) {
    Matrix out = Matrix::Zero(dl, dl);
    for (Eigen::Index a = 0; a < dl; ++a)
      for (Eigen::Index b = 0; b < dl; ++b)
        for (Eigen::Index j = 0; j < dr; ++j) out(a, b) += r(a * dr + j, b * dr + j);
    return DensityMatrix(std::move(out));
  }
  Matrix out = Matrix::Zero(dr, dr);
  for (Eigen::Index a = 0; a < dr; ++a)
    for (Eigen::Index b = 0; b < dr; ++b)
      for (Eigen::Index i = 0; i < dl; ++i) out(a, b) += r(i * dr + a, i * dr + b);
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const TFDState& state, Side traced) {
  return partial_trace(state.vector(), state.left_dim(), state.right_dim(), traced);
}

Vector evolve_tfd(const TFDState& state, double t_l, double t_r, TimeSign sign) {
  const double t = sign == TimeSign::Minus ? t_l - t_r : t_l + t_r;
  const auto n = static_cast<Eigen::Index>(state.spectrum().size());
  Vector v = Vector::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i * n + i) = state.amplitudes()(i) * std::polar(1.0, -state.spectrum()[i] * t);
  }
  return v;
}

Complex two_sided_correlator(const Vector& psi, const Matrix& op_left, const Matrix& op_right) {
  if (op_left.rows() != op_left.cols() || op_right.rows() != op_right.cols() ||
      psi.size() != op_left.rows() * op_right.rows()) {
    throw std::invalid_argument("two_sided_correlator: operator sizes do not match the state");
  }
  const Eigen::Index dl = op_left.rows(), dr = op_right.rows();
  Matrix m(dl, dr);
  for (Eigen::Index i = 0; i < dl; ++i)
    for (Eigen::Index j = 0; j < dr; ++j) m(i, j) = psi(i * dr + j);
  // (O_L ⊗ O_R) ψ reshapes to O_L M O_Rᵀ.
  const Matrix applied = op_left * m * op_right.transpose();
  return (m.conjugate().cwiseProduct(applied)).sum();
}

double fubini_distance(const Vector& psi, const Vector& phi) {
  if (psi.size() != phi.size()) throw std::invalid_argument("fubini_distance: size mismatch");
  check_normalized(psi, "fubini_distance");
  check_normalized(phi, "fubini_distance");
  return std::acos(std::min(1.0, std::abs(psi.dot(phi))));
}

Vector random_circuit_state(unsigned num_qubits, unsigned depth, std::uint64_t seed) {
  if (num_qubits < 2 || num_qubits > 16) {
    throw std::invalid_argument("random_circuit_state: K must lie in [2, 16]");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(dim));
  psi(0) = 1.0;
  std::uint64_t stream = 0;
  for (unsigned layer = 0; layer < depth; ++layer) {
    for (unsigned q = layer % 2; q + 1 < num_qubits; q += 2) {
      auto rng = stream_rng(seed, stream++);
      const Matrix g = haar_unitary(4, rng);
      // Qubit q sits at bit (K-1-q).
      const std::size_t hi = std::size_t{1} << (num_qubits - 1 - q);
      const std::size_t lo = hi >> 1;
      for (std::size_t base = 0; base < dim; ++base) {
        if (base & (hi | lo)) continue;
        const std::size_t idx[4] = {base, base | lo, base | hi, base | hi | lo};
        Complex in[4], out[4] = {};
        for (int a = 0; a < 4; ++a) in[a] = psi(static_cast<Eigen::Index>(idx[a]));
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) out[a] += g(a, b) * in[b];
        for (int a = 0; a < 4; ++a) psi(static_cast<Eigen::Index>(idx[a])) = out[a];
      }
    }
  }
  return psi;
}

double subsystem_entropy(const Vector& psi, unsigned num_qubits, unsigned subsystem_qubits) {
  if (subsystem_qubits > num_qubits) {
    throw std::invalid_argument("subsystem_entropy: subsystem larger than the system");
  }
  const std::size_t left = std::size_t{1} << subsystem_qubits;
  const std::size_t right = std::size_t{1} << (num_qubits - subsystem_qubits);
  return von_neumann_entropy(partial_trace(psi, left, right, Side::Right));
}

double page_entropy(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("page_entropy: dimensions must be positive");
  if (m > n) std::swap(m, n);
  double s = 0.0;
  for (std::size_t k = n + 1; k <= m * n; ++k) s += 1.0 / static_cast<double>(k);
  return s - static_cast<double>(m - 1) / (2.0 * static_cast<double>(n));
}

}  // namespace cxlab
