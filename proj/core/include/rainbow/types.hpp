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

#include <compare>
#include <cstdint>
#include <vector>

namespace rainbow {

using Vertex = std::int32_t;
using Colour = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr Colour kNoColour = -1;

// Directed edge from -> to. Undirected edges are stored with from < to.
struct Edge {
  Vertex from = kNoVertex;
  Vertex to = kNoVertex;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Indexed by colour id; non-zero means "selected".
using ColourMask = std::vector<std::uint8_t>;

}  // namespace rainbow
