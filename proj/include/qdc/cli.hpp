// Copyright 2026 The qdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qdc {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Seed used when neither --seed nor QDC_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 2017;

const char* version_string();

/**
 * Resolves the default seed from the QDC_SEED environment variable.
 *
 * Returns kDefaultSeed when QDC_SEED is unset and nullopt when it is not a
 * decimal unsigned 64-bit integer.
 */
std::optional<std::uint64_t> default_seed_from_env();

/// Runs the tool with `argv[0]` as program name; never calls std::exit.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qdc
