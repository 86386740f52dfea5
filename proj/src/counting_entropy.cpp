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

#include "cxlab/counting_entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cxlab {
namespace {

void check_epsilon(double epsilon, const char* who) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": epsilon must lie in (0, 1]");
  }
}

double four_pow(unsigned k) { return std::ldexp(1.0, 2 * static_cast<int>(k)); }

}  // namespace

double log_vol_su(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("log_vol_su: N must be at least 2");
  const double ln2 = std::numbers::ln2;
  const double lnpi = std::log(std::numbers::pi);
  double total = 0.0;
  for (std::uint64_t k = 1; k < n; ++k) {
    const auto kd = static_cast<double>(k);
    total += ln2 + (kd + 1.0) * lnpi - std::lgamma(kd + 1.0);
  }
  return total;
}

double log_ball_volume(std::uint64_t n, double epsilon) {
  if (n < 1) throw std::invalid_argument("log_ball_volume: dimension must be positive");
  check_epsilon(epsilon, "log_ball_volume");
  const auto nd = static_cast<double>(n);
  return 0.5 * nd * std::log(std::numbers::pi) - std::lgamma(0.5 * nd + 1.0) +
         nd * std::log(epsilon);
}

double log_num_unitaries(unsigned num_qubits, double epsilon) {
  if (num_qubits < 1) throw std::invalid_argument("log_num_unitaries: K must be positive");
  check_epsilon(epsilon, "log_num_unitaries");
  const double n = four_pow(num_qubits);
  return 0.5 * n * num_qubits * std::numbers::ln2 - n * std::log(epsilon);
}

double log_num_unitaries_exact(unsigned num_qubits, double epsilon) {
  if (num_qubits < 1 || num_qubits > 20) {
    throw std::invalid_argument("log_num_unitaries_exact: K must lie in [1, 20]");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  return log_vol_su(dim) - log_ball_volume(dim * dim - 1, epsilon);
}

LogBranching log_branching(unsigned num_qubits) {
  if (num_qubits < 2 || num_qubits % 2 != 0) {
    throw std::invalid_argument("log_branching: K must be even and at least 2");
  }
  const double k = num_qubits;
  return {0.5 * k * std::log(2.0 * k / std::numbers::e),
          std::lgamma(k + 1.0) - std::lgamma(0.5 * k + 1.0)};
}

double max_complexity(unsigned num_qubits, double epsilon) {
  if (num_qubits < 2) throw std::invalid_argument("max_complexity: K must be at least 2");
  check_epsilon(epsilon, "max_complexity");
  return four_pow(num_qubits) *
         (0.5 + std::abs(std::log(epsilon)) / std::log(static_cast<double>(num_qubits)));
}

ComplexityEntropy complexity_entropy(double complexity, unsigned num_qubits) {
  if (complexity < 0.0) throw std::invalid_argument("complexity_entropy: C must be nonnegative");
  if (num_qubits < 2) throw std::invalid_argument("complexity_entropy: K must be at least 2");
  const double k = num_qubits;
  return {complexity * std::log(2.0 * k / std::numbers::e), complexity * std::log(k)};
}

std::uint64_t parameter_count(unsigned num_qubits, unsigned locality) {
  if (locality < 1 || locality > num_qubits) {
    throw std::invalid_argument("parameter_count: need 1 <= k <= K");
  }
  std::uint64_t binom = 1;
  for (unsigned i = 1; i <= locality; ++i) binom = binom * (num_qubits - locality + i) / i;
  std::uint64_t pow3 = 1;
  for (unsigned i = 0; i < locality; ++i) pow3 *= 3;
  return pow3 * binom;
}

RecurrenceMagnitudes recurrence_magnitudes(unsigned num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("recurrence_magnitudes: K must be positive");
  return {std::ldexp(1.0, static_cast<int>(num_qubits)), num_qubits * std::numbers::ln2};
}

CountingReport counting_report(unsigned num_qubits, double epsilon) {
  if (num_qubits < 2 || num_qubits > 20) {
    throw std::invalid_argument("counting_report: K must lie in [2, 20]");
  }
  check_epsilon(epsilon, "counting_report");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  const double k = num_qubits;
  CountingReport r;
  r.num_qubits = num_qubits;
  r.epsilon = epsilon;
  r.log_vol_su = log_vol_su(dim);
  r.log_ball = log_ball_volume(dim * dim - 1, epsilon);
  r.log_num_unitaries = log_num_unitaries(num_qubits, epsilon);
  r.log_branching = 0.5 * k * std::log(2.0 * k / std::numbers::e);
  r.c_max = max_complexity(num_qubits, epsilon);
  r.log_log_recurrence = recurrence_magnitudes(num_qubits).log_log_complexity_recur;
  return r;
}

}  // namespace cxlab
