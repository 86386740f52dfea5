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
#include <random>

#include <gtest/gtest.h>

#include "cxlab/counting_entropy.hpp"

namespace cxlab {
namespace {

Matrix cnot12() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(3, 2) = m(2, 3) = 1.0;
  return m;
}

Matrix cnot21() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(2, 2) = m(3, 1) = m(1, 3) = 1.0;
  return m;
}

Matrix swap_gate() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = m(1, 2) = m(2, 1) = 1.0;
  return m;
}

const ComplexityBall& clifford_ball() {
  static const ComplexityBall ball = sphere_growth(GateSet::clifford2(), 64);
  return ball;
}

TEST(CanonicalKeyTest, GlobalPhaseIsIgnored) {
  auto rng = stream_rng(7, 0);
  const Matrix u = haar_unitary(4, rng);
  for (double theta : {0.3, 1.7, -2.9, 3.14159}) {
    EXPECT_EQ(canonical_key(u), canonical_key(u * std::polar(1.0, theta)));
  }
}

TEST(CanonicalKeyTest, LargePerturbationChangesKey) {
  auto rng = stream_rng(7, 1);
  const Matrix u = haar_unitary(4, rng);
  Matrix v = u;
  v(2, 1) += 1e-3;
  EXPECT_NE(canonical_key(u), canonical_key(v));
  EXPECT_NE(canonical_key(Matrix::Identity(4, 4)), canonical_key(cnot12()));
}

TEST(CanonicalKeyTest, PivotTieBreakUsesLowestRowMajorIndex) {
  // Permutation-like matrix with equal magnitudes: pivot is (0, 0).
  const double r = 1.0 / std::sqrt(2.0);
  Matrix h(2, 2);
  h << r, r, r, -r;
  const Matrix fixed = fix_global_phase(h * Complex(0, 1));
  EXPECT_NEAR(fixed(0, 0).real(), r, 1e-15);
  EXPECT_NEAR(fixed(0, 0).imag(), 0.0, 1e-15);
}

TEST(GateSetTest, RejectsSetWithoutInverses) {
  Matrix s = Matrix::Identity(2, 2);
  s(1, 1) = Complex(0, 1);
  EXPECT_THROW(GateSet(1, {{"S", s}}), std::invalid_argument);
  EXPECT_NO_THROW(GateSet(1, {{"S", s}, {"Sdg", s.adjoint()}}));
}

TEST(GateSetTest, RejectsWrongDimensionAndNonUnitary) {
  EXPECT_THROW(GateSet(2, {{"I", Matrix::Identity(2, 2)}}), std::invalid_argument);
  Matrix bad = Matrix::Identity(2, 2) * 2.0;
  EXPECT_THROW(GateSet(1, {{"bad", bad}}), std::invalid_argument);
}

TEST(GateSetTest, InverseIndexIsConsistent) {
  const GateSet gs = GateSet::clifford2();
  for (std::size_t i = 0; i < gs.gates().size(); ++i) {
    const Matrix prod = gs.gates()[gs.inverse_of(i)].matrix * gs.gates()[i].matrix;
    EXPECT_LT(phase_insensitive_distance(prod, Matrix::Identity(4, 4)), 1e-12);
  }
  EXPECT_THROW(GateSet::by_name("toffoli"), std::invalid_argument);
}

TEST(BfsComplexityTest, IdentityAndSingleGates) {
  const GateSet gs = GateSet::clifford2();
  EXPECT_EQ(bfs_complexity(Matrix::Identity(4, 4), gs, 3), 0u);
  for (const auto& g : gs.gates()) EXPECT_EQ(bfs_complexity(g.matrix, gs, 3), 1u);
}

TEST(BfsComplexityTest, CnotSwapWordHasLengthThree) {
  const GateSet gs = GateSet::cnot_pair();
  const Matrix word = cnot12() * cnot21() * cnot12();
  EXPECT_LT(max_norm(word - swap_gate()), 1e-15);
  EXPECT_EQ(bfs_complexity(word, gs, 10), 3u);
  EXPECT_EQ(bfs_complexity(word, gs, 2), std::nullopt);
}

TEST(BfsComplexityTest, DimensionMismatchThrows) {
  EXPECT_THROW(bfs_complexity(Matrix::Identity(2, 2), GateSet::cnot_pair(), 2),
               std::invalid_argument);
}

TEST(SphereGrowthTest, CnotPairGeneratesSixElements) {
  // {CNOT12, CNOT21} generate GL(2, F2), which has six elements in layers 1, 2, 2, 1.
  const ComplexityBall ball = sphere_growth(GateSet::cnot_pair(), 10);
  EXPECT_EQ(ball.counts(), (std::vector<std::size_t>{1, 2, 2, 1}));
  EXPECT_TRUE(ball.saturated());
  EXPECT_FALSE(ball.truncated());
}

TEST(SphereGrowthTest, CliffordGroupSaturates) {
  const ComplexityBall& ball = clifford_ball();
  EXPECT_TRUE(ball.saturated());
  // |C_2| / |U(1) phases| = 11520.
  EXPECT_EQ(ball.size(), 11520u);
  EXPECT_EQ(ball.counts()[0], 1u);
  EXPECT_EQ(ball.counts()[1], 8u);
}

TEST(SphereGrowthTest, BudgetTruncatesToCompleteLayers) {
  const ComplexityBall ball = sphere_growth(GateSet::clifford2(), 64, 100);
  EXPECT_TRUE(ball.truncated());
  std::size_t total = 0;
  for (auto c : ball.counts()) total += c;
  EXPECT_EQ(total, ball.size());
  EXPECT_LE(ball.size(), 100u);
}

TEST(SphereGrowthTest, DepthOneCountsDistinctNonIdentityGates) {
  Matrix s = Matrix::Identity(2, 2);
  s(1, 1) = Complex(0, 1);
  const Matrix z = s * s;
  // Z listed twice (second copy with a global phase) and the identity once.
  const GateSet gs(1, {{"S", s}, {"Sdg", s.adjoint()}, {"Z", z}, {"-Z", -z},
                       {"I", Matrix::Identity(2, 2)}});
  const ComplexityBall ball = sphere_growth(gs, 1);
  EXPECT_EQ(ball.counts()[1], 3u);
}

TEST(SphereGrowthTest, RandomGateSetGrowsLikeFreeGroup) {
  const GateSet gs = GateSet::random_inverse_closed(2, 4, 2026);
  const ComplexityBall ball = sphere_growth(gs, 5);
  ASSERT_EQ(ball.counts().size(), 6u);
  const double branching = static_cast<double>(ball.counts()[1]);
  EXPECT_EQ(ball.counts()[1], 8u);
  for (std::size_t d = 1; d + 1 < ball.counts().size(); ++d) {
    const double ratio = static_cast<double>(ball.counts()[d + 1]) / ball.counts()[d];
    EXPECT_NEAR(ratio, branching, 0.25 * branching) << "depth " << d;
  }
}

TEST(SphereGrowthTest, CountsStayBelowEpsilonBallCapacity) {
  const ComplexityBall& ball = clifford_ball();
  const double log_capacity = log_num_unitaries(2, ball.epsilon());
  EXPECT_LT(std::log(static_cast<double>(ball.size())), log_capacity);
  const ComplexityBall random_ball = sphere_growth(GateSet::random_inverse_closed(2, 4, 5), 4);
  EXPECT_LT(std::log(static_cast<double>(random_ball.size())), log_capacity);
}

class MetricAxiomsTest : public ::testing::Test {
 protected:
  const Matrix& sample(std::mt19937_64& rng) {
    const ComplexityBall& ball = clifford_ball();
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    return ball.element(pick(rng));
  }
  unsigned dist(const Matrix& u, const Matrix& v) {
    auto d = relative_complexity(u, v, clifford_ball());
    EXPECT_TRUE(d.has_value());
    return d.value_or(0);
  }
};

TEST_F(MetricAxiomsTest, HoldOnSampledPairs) {
  auto rng = stream_rng(99, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix& u = sample(rng);
    const Matrix& v = sample(rng);
    const Matrix& w = sample(rng);
    const Matrix& r = sample(rng);
    const unsigned uv = dist(u, v);
    EXPECT_EQ(dist(u, u), 0u);
    EXPECT_EQ(uv == 0, phase_insensitive_distance(u, v) < 1e-9);
    EXPECT_EQ(uv, dist(v, u));
    EXPECT_LE(dist(u, w), uv + dist(v, w));
    EXPECT_EQ(uv, dist(u * r, v * r));
  }
}

TEST_F(MetricAxiomsTest, SwitchbackBound) {
  const GateSet gs = GateSet::clifford2();
  auto rng = stream_rng(99, 1);
  std::uniform_int_distribution<std::size_t> pick_gate(0, gs.gates().size() - 1);
  std::uniform_int_distribution<unsigned> pick_len(0, 5);
  // Single-qubit generators: H1, H2, S1, S1dg, S2, S2dg.
  std::uniform_int_distribution<std::size_t> pick_w(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned len = pick_len(rng);
    Matrix u = Matrix::Identity(4, 4);
    for (unsigned i = 0; i < len; ++i) u = gs.gates()[pick_gate(rng)].matrix * u;
    const Matrix& w = gs.gates()[pick_w(rng)].matrix;
    const auto c = clifford_ball().depth_of(u * w * u.adjoint());
    ASSERT_TRUE(c.has_value());
    EXPECT_LE(*c, 2 * len + 1);
  }
}

TEST(RelativeComplexityTest, GateSetOverloadMatchesBall) {
  const GateSet gs = GateSet::clifford2();
  const ComplexityBall& ball = clifford_ball();
  auto rng = stream_rng(3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int i = 0; i < 10; ++i) {
    const Matrix& u = ball.element(pick(rng));
    const Matrix& v = ball.element(pick(rng));
    EXPECT_EQ(relative_complexity(u, v, gs, 64), relative_complexity(u, v, ball));
  }
}

}  // namespace
}  // namespace cxlab
