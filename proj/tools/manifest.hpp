// Copyright 2026 The Rainbow Authors
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

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/io.hpp"

namespace rainbow::cli {

// Everything needed to rerun a command bit-exactly: the argument vector, the
// digests of the files it read, the seed and preset, plus an outcome summary.
class RunManifest {
 public:
  RunManifest(int argc, char** argv);

  void set_subcommand(std::string name) { subcommand_ = std::move(name); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_preset(std::string preset) { preset_ = std::move(preset); }
  void add_input(const std::string& path, const std::string& content);
  void add_output(const std::string& key, const std::string& value);

  // Writes the manifest; wall time is measured from construction.
  void write(const std::string& path, int exit_code, const std::string& outcome) const;

  const std::vector<std::string>& args() const { return args_; }

 private:
  std::vector<std::string> args_;
  std::string subcommand_;
  std::uint64_t seed_ = 0;
  std::string preset_;
  KeyValues inputs_;
  KeyValues outputs_;
  std::chrono::steady_clock::time_point start_;
};

// The argument vector recorded in a manifest (argv1..argvN, program excluded).
std::vector<std::string> manifest_args(const KeyValues& manifest);

std::string fnv1a_hex(const std::string& content);

}  // namespace rainbow::cli
