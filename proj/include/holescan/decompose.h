// Copyright 2026 The holescan Authors
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
#include <optional>
#include <utility>
#include <vector>

#include "holescan/boundary_trace.h"

namespace holescan {

enum class Complexity { kSimple, kComplex };

Complexity complexity(const Boundary& b);

struct RepeatedOccurrence {
  VertexId vertex = 0;
  std::size_t first = 0;   // position of the first half-edge leaving `vertex`
  std::size_t second = 0;  // position of the second one

  friend bool operator==(const RepeatedOccurrence&,
                         const RepeatedOccurrence&) = default;
};

/// Among the vertices that repeat, picks the one whose first occurrence is
/// earliest in the cycle, and returns its first two positions.
std::optional<RepeatedOccurrence> find_repeated_occurrence(const Boundary& b);

/**
 * Cuts `b` at two positions whose half-edges leave the same vertex:
 * the first result is b[:first] + b[second:], the second is
 * b[first:second]. Throws kInvalidSplit unless first < second < size and
 * both positions start at one vertex.
 */
std::pair<Boundary, Boundary> split_at(const Boundary& b, std::size_t first,
                                       std::size_t second);

/// Splits `b` repeatedly until no part repeats a vertex. The half-edges of
/// the results are exactly those of `b`.
std::vector<Boundary> decompose(const Boundary& b);

/// Rotates `b` so that its smallest vertex comes first; direction is kept.
Boundary canonicalize(Boundary b);

}  // namespace holescan
