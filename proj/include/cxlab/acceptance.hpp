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
#include <string>
#include <vector>

namespace cxlab {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;  // measured values and thresholds
  double seconds;
};

CriterionResult check_wdw_identity();
CriterionResult check_wormhole_growth();
CriterionResult check_high_temperature_cv();
CriterionResult check_epidemic(std::uint64_t seed);
CriterionResult check_curvature(std::uint64_t seed);
CriterionResult check_loschmidt(std::uint64_t seed);
CriterionResult check_geodesic(std::uint64_t seed);
CriterionResult check_metric_axioms(std::uint64_t seed);
CriterionResult check_tfd_suite(std::uint64_t seed);
CriterionResult check_counting();

/// All ten checks in order.
std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed = kDefaultSeed);

/// "[PASS] criterion 3: <name> (0.410 s) <detail>".
std::string format_result(const CriterionResult& r);

}  // namespace cxlab
