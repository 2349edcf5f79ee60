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

#include "holescan/decompose.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "holescan/error.h"

namespace holescan {

Complexity complexity(const Boundary& b) {
  return b.is_simple() ? Complexity::kSimple : Complexity::kComplex;
}

std::optional<RepeatedOccurrence> find_repeated_occurrence(const Boundary& b) {
  std::unordered_map<VertexId, std::size_t> first_seen;
  first_seen.reserve(b.size());
  std::optional<RepeatedOccurrence> best;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const VertexId v = b.halfedges[i].from;
    auto [it, inserted] = first_seen.try_emplace(v, i);
    if (inserted) continue;
    // The first repeat seen for a vertex is its second occurrence; a later
    // repeat of the same vertex has an equal first position and is skipped.
    if (!best || it->second < best->first) best = {v, it->second, i};
  }
  return best;
}

std::pair<Boundary, Boundary> split_at(const Boundary& b, std::size_t first,
                                       std::size_t second) {
  if (first >= second || second >= b.size() ||
      b.halfedges[first].from != b.halfedges[second].from) {
    throw Error(ErrorCode::kInvalidSplit,
                "cannot split a boundary of " + std::to_string(b.size()) +
                    " half-edges at positions " + std::to_string(first) +
                    " and " + std::to_string(second));
  }
  const auto begin = b.halfedges.begin();
  Boundary outer;
  outer.halfedges.reserve(b.size() - (second - first));
  outer.halfedges.insert(outer.halfedges.end(), begin, begin + first);
  outer.halfedges.insert(outer.halfedges.end(), begin + second,
                         b.halfedges.end());
  Boundary inner;
  inner.halfedges.assign(begin + first, begin + second);
  return {std::move(outer), std::move(inner)};
}

std::vector<Boundary> decompose(const Boundary& b) {
  std::vector<Boundary> simples;
  // Depth-first with the outer part first, matching the recursive order.
  std::vector<Boundary> pending;
  pending.push_back(b);
  while (!pending.empty()) {
    Boundary current = std::move(pending.back());
    pending.pop_back();
    const auto repeat = find_repeated_occurrence(current);
    if (!repeat) {
      simples.push_back(std::move(current));
      continue;
    }
    auto [outer, inner] = split_at(current, repeat->first, repeat->second);
    pending.push_back(std::move(inner));
    pending.push_back(std::move(outer));
  }
  return simples;
}

Boundary canonicalize(Boundary b) {
  if (b.halfedges.empty()) return b;
  auto smallest = std::min_element(
      b.halfedges.begin(), b.halfedges.end(),
      [](const DirectedEdge& l, const DirectedEdge& r) { return l.from < r.from; });
  std::rotate(b.halfedges.begin(), smallest, b.halfedges.end());
  return b;
}

}  // namespace holescan
