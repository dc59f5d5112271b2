// Copyright 2026 The bohrify Authors
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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bohrify/model.hpp"

namespace bohrify {

struct CommandOptions {
  std::optional<std::size_t> depth;
  bool partial = false;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  bool diffeo = false;
  bool gauge = false;
  std::vector<std::string> projections;  // empty: all declared projections
};

struct CommandOutput {
  std::string report;
  int exit_code = 0;  // 0 pass, 1 property violation
  std::vector<std::pair<std::string, std::string>> dot_files;  // file name, contents
};

inline constexpr std::uint64_t kDefaultSeed = 20260417;

// contexts | spectrum | sobriety | chain | invariance | logic | verify-all.
// verify-all accepts any number of models, the others exactly one.
CommandOutput run_command(std::string_view command, std::vector<ModelSpec> specs,
                          const CommandOptions& options);

const std::vector<std::string>& command_names();

}  // namespace bohrify
