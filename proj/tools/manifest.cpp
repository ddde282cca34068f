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

#include "manifest.hpp"

#include <cstdio>
#include <sstream>

#include "rainbow/errors.hpp"

#ifndef RAINBOW_VERSION
#define RAINBOW_VERSION "unknown"
#endif

namespace rainbow::cli {

RunManifest::RunManifest(int argc, char** argv) : start_(std::chrono::steady_clock::now()) {
  for (int i = 1; i < argc; ++i) args_.emplace_back(argv[i]);
}

void RunManifest::add_input(const std::string& path, const std::string& content) {
  inputs_.emplace_back("input." + path, fnv1a_hex(content));
}

void RunManifest::add_output(const std::string& key, const std::string& value) {
  outputs_.emplace_back("outcome." + key, value);
}

void RunManifest::write(const std::string& path, int exit_code, const std::string& outcome) const {
  KeyValues kv;
  kv.emplace_back("tool", "rainbow");
  kv.emplace_back("version", RAINBOW_VERSION);
  kv.emplace_back("compiler", __VERSION__);
  kv.emplace_back("subcommand", subcommand_);
  kv.emplace_back("seed", std::to_string(seed_));
  kv.emplace_back("preset", preset_.empty() ? "none" : preset_);
  std::string line;
  for (const auto& a : args_) line += (line.empty() ? "" : " ") + a;
  kv.emplace_back("command", "rainbow " + line);
  kv.emplace_back("argc", std::to_string(args_.size()));
  for (std::size_t i = 0; i < args_.size(); ++i) kv.emplace_back("argv" + std::to_string(i + 1), args_[i]);
  kv.insert(kv.end(), inputs_.begin(), inputs_.end());
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start_;
  kv.emplace_back("wall_seconds", format_double(wall.count()));
  kv.emplace_back("exit_code", std::to_string(exit_code));
  kv.emplace_back("outcome", outcome);
  kv.insert(kv.end(), outputs_.begin(), outputs_.end());
  std::ostringstream out;
  write_key_values(out, kv);
  write_file(path, out.str());
}

std::vector<std::string> manifest_args(const KeyValues& manifest) {
  const std::string* argc = find_value(manifest, "argc");
  if (argc == nullptr) throw ParseError("manifest has no argc entry");
  const int count = std::stoi(*argc);
  std::vector<std::string> args;
  for (int i = 1; i <= count; ++i) {
    const std::string* a = find_value(manifest, "argv" + std::to_string(i));
    if (a == nullptr) throw ParseError("manifest is missing argv" + std::to_string(i));
    args.push_back(*a);
  }
  return args;
}

std::string fnv1a_hex(const std::string& content) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : content) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rainbow::cli
