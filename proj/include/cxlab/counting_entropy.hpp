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

namespace cxlab {

// Counting estimates for the space of K-qubit unitaries. Everything is in
// natural-log space so that K up to 20 never overflows.

/// ln Vol SU(N) = Σ_{k=1}^{N-1} [ln 2 + (k+1) ln π − ln k!].
double log_vol_su(std::uint64_t n);

/// Log-volume of a radius-ε ball in R^n. Accepts 0 < ε ≤ 1.
double log_ball_volume(std::uint64_t n, double epsilon);

/// (4^K / 2)·K·ln 2 + 4^K·ln(1/ε): the large-K estimate of ln N(ε).
double log_num_unitaries(unsigned num_qubits, double epsilon);

/// Same count without the large-K approximation: ln Vol SU(2^K) − ln Vol B_ε^{4^K−1}.
double log_num_unitaries_exact(unsigned num_qubits, double epsilon);

struct LogBranching {
  double stirling;  // (K/2)·ln(2K/e)
  double exact;     // ln(K! / (K/2)!)
};

/// Log of the number of ways to pick a layer of K/2 disjoint two-qubit gates.
LogBranching log_branching(unsigned num_qubits);

/// 4^K·(1/2 + |ln ε| / ln K).
double max_complexity(unsigned num_qubits, double epsilon);

struct ComplexityEntropy {
  double exact;  // C·ln(2K/e)
  double log_k;  // C·ln K
};

ComplexityEntropy complexity_entropy(double complexity, unsigned num_qubits);

/// 3^k·binomial(K, k): independent couplings of an exactly k-local Hamiltonian.
std::uint64_t parameter_count(unsigned num_qubits, unsigned locality);

struct RecurrenceMagnitudes {
  double log_torus_recur;           // ln τ_recur ≈ 2^K
  double log_log_complexity_recur;  // ln ln t_recur ≈ K ln 2
};

RecurrenceMagnitudes recurrence_magnitudes(unsigned num_qubits);

struct CountingReport {
  unsigned num_qubits = 0;
  double epsilon = 0.0;
  double log_vol_su = 0.0;
  double log_ball = 0.0;
  double log_num_unitaries = 0.0;
  double log_branching = 0.0;
  double c_max = 0.0;
  double log_log_recurrence = 0.0;
};

/// Requires 2 ≤ K ≤ 20. log_branching uses the Stirling form, which is
/// defined for odd K as well.
CountingReport counting_report(unsigned num_qubits, double epsilon);

}  // namespace cxlab
