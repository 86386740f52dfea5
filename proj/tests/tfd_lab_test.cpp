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

#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "cxlab/pauli_algebra.hpp"

namespace cxlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void expect_valid(const DensityMatrix& rho) {
  EXPECT_TRUE(is_hermitian(rho.matrix(), 1e-10));
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-10);
  EXPECT_GE(rho.eigenvalues().minCoeff(), -1e-10);
}

std::vector<double> sampled_spectrum() {
  const Matrix h = sample_klocal(3, 2, false, 3.0, 77).matrix();
  const Propagator prop(h);
  const RealVector e = prop.energies();
  return {e.data(), e.data() + e.size()};
}

TEST(DensityMatrixTest, RejectsInvalid) {
  Matrix m = Matrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{m}, std::invalid_argument);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{m}, std::invalid_argument);
  Matrix nh = Matrix::Identity(2, 2) * 0.5;
  nh(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix{nh}, std::invalid_argument);
}

TEST(ThermalStateTest, Limits) {
  const auto hot = thermal_state({0.0, 1.0, 5.0, -2.0}, 0.0);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(hot.matrix()(i, i).real(), 0.25, 1e-15);
  const auto cold = thermal_state({0.0, 1.0, -2.0}, kInf);
  EXPECT_NEAR(cold.matrix()(2, 2).real(), 1.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(cold), 0.0, 1e-15);
  const auto degenerate = thermal_state({-1.0, 3.0, -1.0}, kInf);
  EXPECT_NEAR(von_neumann_entropy(degenerate), std::log(2.0), 1e-14);
  EXPECT_THROW(thermal_state({}, 1.0), std::invalid_argument);
  EXPECT_THROW(thermal_state({0.0}, -1.0), std::invalid_argument);
}

TEST(ThermalStateTest, TwoLevel) {
  const auto rho = thermal_state({0.0, 1.0}, 1.0);
  const double p0 = 1.0 / (1.0 + std::exp(-1.0));
  EXPECT_NEAR(rho.matrix()(0, 0).real(), p0, 1e-15);
  EXPECT_NEAR(p0, 0.7311, 1e-4);
  const double s = -p0 * std::log(p0) - (1 - p0) * std::log(1 - p0);
  EXPECT_NEAR(von_neumann_entropy(rho), s, 1e-14);
  EXPECT_NEAR(s, 0.5822, 1e-4);
  expect_valid(rho);
}

TEST(ThermalStateTest, LargeBetaDoesNotOverflow) {
  const auto rho = thermal_state({1000.0, 1001.0}, 800.0);
  EXPECT_NEAR(rho.matrix()(0, 0).real(), 1.0, 1e-15);
}

TEST(EntropyTest, PureMixedAndBasisInvariant) {
  Vector psi = Vector::Zero(3);
  psi(1) = 1.0;
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix(psi * psi.adjoint())), 0.0, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix(Matrix::Identity(5, 5) / 5.0)), std::log(5.0), 1e-14);
  const auto rho = thermal_state(sampled_spectrum(), 0.7);
  auto rng = stream_rng(5, 5);
  const Matrix u = haar_unitary(8, rng);
  const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
  expect_valid(rotated);
  EXPECT_NEAR(von_neumann_entropy(rotated), von_neumann_entropy(rho), 1e-9);
}

TEST(TfdTest, InfiniteTemperatureBellPair) {
  const TFDState s = tfd({0.0, 1.0}, 0.0);
  EXPECT_NEAR(s.amplitudes()(0), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.amplitudes()(1), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.vector().norm(), 1.0, 1e-15);
}

TEST(TfdTest, PartialTraceIsThermal) {
  const auto spec = sampled_spectrum();
  for (double beta : {0.0, 0.3, 2.0, 25.0, kInf}) {
    const TFDState s = tfd(spec, beta);
    const auto thermal = thermal_state(spec, beta);
    for (Side side : {Side::Left, Side::Right}) {
      const DensityMatrix reduced = partial_trace(s, side);
      expect_valid(reduced);
      EXPECT_LT(max_norm(reduced.matrix() - thermal.matrix()), 1e-12) << beta;
      EXPECT_NEAR(von_neumann_entropy(reduced), von_neumann_entropy(thermal), 1e-12);
    }
  }
}

TEST(TfdTest, EntropyDecreasesWithBeta) {
  const auto spec = sampled_spectrum();
  double prev = std::log(double(spec.size())) + 1e-12;
  for (double beta = 0.0; beta <= 10.0; beta += 0.25) {
    const double s = von_neumann_entropy(partial_trace(tfd(spec, beta), Side::Right));
    EXPECT_LE(s, prev + 1e-12);
    prev = s;
  }
  EXPECT_NEAR(von_neumann_entropy(partial_trace(tfd(spec, 0.0), Side::Left)),
              std::log(double(spec.size())), 1e-12);
}

TEST(PartialTraceTest, ProductStateIsPure) {
  auto rng = stream_rng(8, 0);
  const Matrix a = haar_unitary(2, rng), b = haar_unitary(4, rng);
  const Vector psi = kron(a.col(0), b.col(0));
  for (Side side : {Side::Left, Side::Right}) {
    EXPECT_NEAR(von_neumann_entropy(partial_trace(psi, 2, 4, side)), 0.0, 1e-12);
  }
  const DensityMatrix rl = partial_trace(psi, 2, 4, Side::Right);
  EXPECT_LT(max_norm(rl.matrix() - a.col(0) * a.col(0).adjoint()), 1e-14);
  EXPECT_THROW(partial_trace(psi, 3, 3, Side::Left), std::invalid_argument);
}

TEST(PartialTraceTest, DensityMatrixOverloadMatchesPureState) {
  const Vector psi = random_circuit_state(3, 6, 12);
  const DensityMatrix full(psi * psi.adjoint());
  for (Side side : {Side::Left, Side::Right}) {
    EXPECT_LT(max_norm(partial_trace(full, 2, 4, side).matrix() -
                       partial_trace(psi, 2, 4, side).matrix()),
              1e-14);
  }
}

TEST(EvolveTfdTest, MinusIsInvariantPlusIsNot) {
  const auto spec = sampled_spectrum();
  const TFDState s = tfd(spec, 0.8);
  const Vector v = s.vector();
  for (double t : {0.0, 0.4, 3.0, -7.5}) {
    EXPECT_LT((evolve_tfd(s, t, t, TimeSign::Minus) - v).norm(), 1e-12);
    const Vector moved = evolve_tfd(s, t, 0.7 * t, TimeSign::Minus);
    EXPECT_LT(max_norm(partial_trace(moved, 8, 8, Side::Right).matrix() -
                       partial_trace(s, Side::Right).matrix()),
              1e-12);
  }
  EXPECT_LT((evolve_tfd(s, 0, 0, TimeSign::Plus) - v).norm(), 1e-15);
  for (double t : {0.3, 1.1}) {
    const double fidelity = std::abs(v.dot(evolve_tfd(s, t, t, TimeSign::Plus)));
    EXPECT_LT(fidelity, 1.0 - 1e-6);
  }
}

TEST(CorrelatorTest, Examples) {
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  EXPECT_NEAR(std::abs(two_sided_correlator(tfd({0.0, 1.0}, 0.0).vector(), z, z) - 1.0), 0.0, 1e-15);
  Vector prod = Vector::Zero(4);
  prod(0) = 1.0;
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  EXPECT_NEAR(std::abs(two_sided_correlator(prod, x, z)), 0.0, 1e-15);

  const std::vector<double> spec{0.5, -1.0, 2.0};
  auto rng = stream_rng(6, 1);
  Matrix a = haar_unitary(3, rng), b = haar_unitary(3, rng);
  a = (a + a.adjoint()).eval();
  b = (b + b.adjoint()).eval();
  const Complex factored = a(1, 1) * b(1, 1);
  EXPECT_LT(std::abs(two_sided_correlator(tfd(spec, kInf).vector(), a, b) - factored), 1e-14);
  EXPECT_THROW(two_sided_correlator(prod, a, b), std::invalid_argument);
}

TEST(CorrelatorTest, MatchesKroneckerContraction) {
  const Vector psi = random_circuit_state(3, 5, 3);
  auto rng = stream_rng(6, 2);
  const Matrix a = haar_unitary(2, rng), b = haar_unitary(4, rng);
  const Complex direct = psi.dot(kron(a, b) * psi);
  EXPECT_LT(std::abs(two_sided_correlator(psi, a, b) - direct), 1e-14);
}

TEST(FubiniTest, Examples) {
  Vector a = Vector::Zero(4), b = Vector::Zero(4);
  a(0) = 1.0;
  b(1) = 1.0;
  EXPECT_NEAR(fubini_distance(a, a), 0.0, 1e-15);
  EXPECT_NEAR(fubini_distance(a, b), std::numbers::pi / 2, 1e-15);
  Vector c = (a + b) / std::sqrt(2.0);
  EXPECT_NEAR(fubini_distance(a, c), std::numbers::pi / 4, 1e-7);
  EXPECT_NEAR(fubini_distance(a, c * std::polar(1.0, 0.9)), std::numbers::pi / 4, 1e-7);
  EXPECT_THROW(fubini_distance(a, 2.0 * b), std::invalid_argument);
}

TEST(RandomCircuitTest, NormalisedAndReproducible) {
  const Vector a = random_circuit_state(4, 20, 1);
  EXPECT_NEAR(a.norm(), 1.0, 1e-12);
  EXPECT_EQ((a - random_circuit_state(4, 20, 1)).norm(), 0.0);
  EXPECT_GT((a - random_circuit_state(4, 20, 2)).norm(), 1e-3);
}

TEST(RandomCircuitTest, HalfSystemEntropyApproachesPageValue) {
  // Page: Σ_{k=5}^{16} 1/k − 3/8 for two qubits out of four.
  double harmonic = 0.0;
  for (int k = 5; k <= 16; ++k) harmonic += 1.0 / k;
  EXPECT_NEAR(page_entropy(4, 4), harmonic - 0.375, 1e-15);
  EXPECT_NEAR(page_entropy(4, 4), 0.9224, 1e-4);
  const int samples = 400;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double e = subsystem_entropy(random_circuit_state(4, 40, 1000 + s), 4, 2);
    EXPECT_LE(e, std::log(4.0) + 1e-12);
    sum += e;
    sum_sq += e * e;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum_sq / samples - mean * mean) / (samples - 1));
  EXPECT_NEAR(mean, page_entropy(4, 4), 4 * se);
}

}  // namespace
}  // namespace cxlab
