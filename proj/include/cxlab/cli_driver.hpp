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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cxlab {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNumericFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kMalformedValue = 3;
inline constexpr int kMissingFlag = 4;
}  // namespace exit_code

/// Environment variable consulted for the output directory when no
/// --output-dir flag is given.
inline constexpr const char* kOutputDirEnv = "CXLAB_OUTPUT_DIR";

class UsageError : public std::runtime_error {
 public:
  UsageError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct RunConfig {
  std::string subcommand;
  /// Every flag of the subcommand that has a value, defaults included,
  /// keyed without the leading dashes.
  std::map<std::string, std::string> flags;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;
  /// Set when --help was requested; run() prints it and returns 0.
  std::optional<std::string> help_text;
};

/// Parses `args` (argv without the program name). `--config <file>` merges
/// key=value lines; flags on the command line win. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs one subcommand, writing <output_dir>/<subcommand>.csv and
/// <subcommand>_summary.txt. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with every error mapped to its exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cxlab
