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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cxlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised when a numerical procedure fails or an internal consistency check
/// trips (non-Hermitian input, root bracketing failure, quadrature trouble).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest entry magnitude, max_ij |A_ij|.
double max_norm(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol = 1e-10);
bool is_unitary(const Matrix& u, double tol = 1e-10);

/// Kronecker product A ⊗ B (A acts on the more significant index bits).
Matrix kron(const Matrix& a, const Matrix& b);

/// Hermitian matrix exponential exp(-i H t) through the spectral decomposition.
/// Throws NumericError if H is not Hermitian to 1e-10.
Matrix hermitian_evolution(const Matrix& h, double t);

/// Caches the eigendecomposition of a Hermitian matrix so that e^{-iHt} can be
/// evaluated repeatedly for many t.
class Propagator {
 public:
  explicit Propagator(const Matrix& hamiltonian);

  Matrix at(double t) const;
  const RealVector& energies() const { return energies_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }

 private:
  RealVector energies_;
  Matrix eigenvectors_;
};

/// SplitMix64 finaliser; used to derive independent RNG streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic per-(seed, stream) generator. Results depend only on the
/// pair, never on the order in which streams are consumed.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream);

/// Haar-distributed unitary of the given dimension (QR of a complex Ginibre
/// matrix with the diagonal phase correction).
Matrix haar_unitary(std::size_t dim, std::mt19937_64& rng);

}  // namespace cxlab
