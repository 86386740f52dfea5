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

#include "cxlab/scrambling_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cxlab/linalg.hpp"

namespace cxlab {
namespace {

void require_even(unsigned k, const char* where) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument(std::string(where) + ": K must be even and >= 2, got " +
                                std::to_string(k));
  }
}

void require_at_least_two(unsigned k, const char* where) {
  if (k < 2) throw std::invalid_argument(std::string(where) + ": K must be >= 2");
}

// One layer of random pairings. Returns the new infected count.
unsigned spread_once(std::vector<unsigned>& order, std::vector<char>& infected,
                     std::mt19937_64& rng) {
  std::shuffle(order.begin(), order.end(), rng);
  unsigned count = 0;
  for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
    const unsigned a = order[i], b = order[i + 1];
    if (infected[a] || infected[b]) {
      infected[a] = infected[b] = 1;
      count += 2;
    }
  }
  return count;
}

}  // namespace

double circuit_complexity_linear(unsigned num_qubits, unsigned depth) {
  if (num_qubits % 2 != 0) {
    throw std::invalid_argument("circuit_complexity_linear: K must be even");
  }
  return 0.5 * num_qubits * static_cast<double>(depth);
}

EpidemicTrajectory simulate_epidemic(unsigned num_qubits, unsigned max_steps, unsigned trials,
                                     std::uint64_t seed) {
  require_even(num_qubits, "simulate_epidemic");
  if (trials == 0) throw std::invalid_argument("simulate_epidemic: trials must be >= 1");

  std::vector<double> sum(max_steps + 1, 0.0), sum_sq(max_steps + 1, 0.0);
  std::vector<unsigned> order(num_qubits);
  std::vector<char> infected(num_qubits);
  for (unsigned trial = 0; trial < trials; ++trial) {
    auto rng = stream_rng(seed, trial);
    std::iota(order.begin(), order.end(), 0u);
    std::fill(infected.begin(), infected.end(), 0);
    infected[0] = 1;  // qubits are exchangeable, so the seed qubit is arbitrary
    unsigned s = 1;
    sum[0] += 1.0;
    sum_sq[0] += 1.0;
    for (unsigned tau = 1; tau <= max_steps; ++tau) {
      if (s < num_qubits) s = spread_once(order, infected, rng);
      sum[tau] += s;
      sum_sq[tau] += static_cast<double>(s) * s;
    }
  }

  EpidemicTrajectory out{num_qubits, {}, trials, seed};
  out.steps.reserve(max_steps + 1);
  const double n = trials;
  for (unsigned tau = 0; tau <= max_steps; ++tau) {
    const double mean = sum[tau] / n;
    double se = 0.0;
    if (trials > 1) {
      const double var = std::max(0.0, (sum_sq[tau] - n * mean * mean) / (n - 1.0));
      se = std::sqrt(var / n);
    }
    out.steps.push_back({tau, mean, se});
  }
  return out;
}

IncrementEstimate sample_one_step_increment(unsigned num_qubits, unsigned infected_count,
                                            unsigned trials, std::uint64_t seed) {
  require_even(num_qubits, "sample_one_step_increment");
  if (infected_count < 1 || infected_count > num_qubits) {
    throw std::invalid_argument("sample_one_step_increment: need 1 <= s <= K");
  }
  if (trials < 2) throw std::invalid_argument("sample_one_step_increment: trials must be >= 2");
  std::vector<unsigned> order(num_qubits);
  std::vector<char> infected(num_qubits);
  double sum = 0.0, sum_sq = 0.0;
  for (unsigned trial = 0; trial < trials; ++trial) {
    auto rng = stream_rng(seed, trial);
    std::iota(order.begin(), order.end(), 0u);
    std::fill(infected.begin(), infected.end(), 0);
    std::fill(infected.begin(), infected.begin() + infected_count, 1);
    const double delta =
        static_cast<double>(spread_once(order, infected, rng)) - static_cast<double>(infected_count);
    sum += delta;
    sum_sq += delta * delta;
  }
  const double n = trials;
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

double expected_increment(unsigned num_qubits, double infected) {
  require_at_least_two(num_qubits, "expected_increment");
  return infected * (num_qubits - infected) / (num_qubits - 1.0);
}

double scrambling_time(unsigned num_qubits) {
  require_at_least_two(num_qubits, "scrambling_time");
  return std::log(static_cast<double>(num_qubits));
}

double logistic_size(double tau, unsigned num_qubits) {
  const double x = tau - scrambling_time(num_qubits);
  // Written so that neither branch overflows.
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double precursor_complexity(double tau, unsigned num_qubits) {
  const double x = tau - scrambling_time(num_qubits);
  const double softplus = (x > 0.0) ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
  return num_qubits * softplus;
}

double precursor_growth_rate(double tau, unsigned num_qubits) {
  return num_qubits * logistic_size(tau, num_qubits);
}

}  // namespace cxlab
