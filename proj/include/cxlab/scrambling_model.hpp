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

namespace cxlab {

/// Gate count of a depth-`depth` random pairing circuit on K qubits:
/// K/2 two-qubit gates per layer. K must be even.
double circuit_complexity_linear(unsigned num_qubits, unsigned depth);

struct EpidemicStep {
  unsigned tau;
  double mean_infected;
  double std_error;
};

struct EpidemicTrajectory {
  unsigned num_qubits;
  std::vector<EpidemicStep> steps;  // tau = 0 .. max_steps
  unsigned trials;
  std::uint64_t seed;
};

/// Monte-Carlo epidemic: each step draws a uniformly random perfect pairing,
/// and any pair touching the infected set becomes fully infected. Starts from
/// a single infected qubit. Trial i uses RNG stream (seed, i).
EpidemicTrajectory simulate_epidemic(unsigned num_qubits, unsigned max_steps, unsigned trials,
                                     std::uint64_t seed);

struct IncrementEstimate {
  double mean;
  double std_error;
};

/// Monte-Carlo estimate of the one-step growth E[Δs] starting from s infected.
IncrementEstimate sample_one_step_increment(unsigned num_qubits, unsigned infected,
                                            unsigned trials, std::uint64_t seed);

/// Mean-field increment s (K - s) / (K - 1).
double expected_increment(unsigned num_qubits, double infected);

/// Logistic fraction s(τ)/K = e^{τ-τ*} / (1 + e^{τ-τ*}), τ* = ln K.
double logistic_size(double tau, unsigned num_qubits);

/// τ* = ln K (natural log).
double scrambling_time(unsigned num_qubits);

/// K ln(1 + e^{τ-τ*}); ~e^τ before the scrambling time, ~K(τ-τ*) after.
/// The late branch is often written K/2 (2τ - 2τ*).
double precursor_complexity(double tau, unsigned num_qubits);

/// Closed-form derivative of precursor_complexity, K · logistic_size.
double precursor_growth_rate(double tau, unsigned num_qubits);

}  // namespace cxlab
