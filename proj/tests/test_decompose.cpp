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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "fixtures.h"
#include "holescan/boundary_trace.h"
#include "holescan/decompose.h"
#include "holescan/error.h"
#include "holescan/meshgen.h"
#include "oracles.h"

using namespace holescan;

namespace {

Boundary cycle(std::vector<VertexId> v) { return Boundary::from_cycle(v); }

std::multiset<EdgeKey> keys_of(const Boundary& b) {
  std::multiset<EdgeKey> out;
  for (const DirectedEdge& h : b.halfedges) out.insert(h.key());
  return out;
}

bool distinct_vertices(const Boundary& b) {
  std::vector<VertexId> v = b.vertex_cycle();
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

/// Splits at a uniformly chosen repeated vertex instead of the fixed rule.
std::vector<Boundary> decompose_random(const Boundary& b, std::mt19937& rng) {
  std::map<VertexId, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < b.size(); ++i) at[b.halfedges[i].from].push_back(i);
  std::vector<VertexId> repeated;
  for (const auto& [v, pos] : at) {
    if (pos.size() > 1) repeated.push_back(v);
  }
  if (repeated.empty()) return {b};
  const VertexId v = repeated[std::uniform_int_distribution<std::size_t>(
      0, repeated.size() - 1)(rng)];
  auto [outer, inner] = split_at(b, at[v][0], at[v][1]);
  std::vector<Boundary> out = decompose_random(outer, rng);
  for (Boundary& part : decompose_random(inner, rng)) out.push_back(std::move(part));
  return out;
}

std::vector<Boundary> traced_complex_boundaries(int count) {
  std::vector<Boundary> out;
  for (int seed = 0; seed < count; ++seed) {
    const Mesh m = generate(gen::random_delete(gen::grid(20, 20), 0.5,
                                               static_cast<std::uint64_t>(seed)));
    for (Boundary& b : construct_boundaries(m)) {
      if (complexity(b) == Complexity::kComplex) out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("complexity") {
  CHECK(complexity(cycle({0, 1, 2})) == Complexity::kSimple);
  CHECK(complexity(testing::interleaved_boundary()) == Complexity::kComplex);
}

TEST_CASE("find_repeated_occurrence examples") {
  CHECK_FALSE(find_repeated_occurrence(cycle({0, 1, 2})).has_value());
  CHECK(find_repeated_occurrence(testing::interleaved_boundary()) ==
        RepeatedOccurrence{1, 1, 13});
  CHECK(find_repeated_occurrence(cycle({9, 10, 11, 9, 12, 13})) ==
        RepeatedOccurrence{9, 0, 3});
}

TEST_CASE("split_at on the running example") {
  const Boundary b = testing::interleaved_boundary();
  // Half-edges leaving v9 sit at positions 6, 9 and 12.
  const auto [outer, inner] = split_at(b, 6, 9);
  std::vector<DirectedEdge> expected_outer(b.halfedges.begin(), b.halfedges.begin() + 6);
  expected_outer.insert(expected_outer.end(), b.halfedges.begin() + 9, b.halfedges.end());
  CHECK(outer.halfedges == expected_outer);
  CHECK(inner.halfedges == std::vector<DirectedEdge>{{9, 10}, {10, 11}, {11, 9}});
}

TEST_CASE("split_at index arithmetic") {
  const auto [outer, inner] = split_at(cycle({0, 1, 2, 0, 3, 4}), 0, 3);
  CHECK(outer.vertex_cycle() == std::vector<VertexId>{0, 3, 4});
  CHECK(inner.vertex_cycle() == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("split_at rejects invalid positions") {
  const Boundary b = cycle({0, 1, 2, 0, 3, 4});
  for (auto [i, j] : std::vector<std::pair<std::size_t, std::size_t>>{
           {3, 3}, {3, 0}, {0, 6}, {0, 2}}) {
    try {
      split_at(b, i, j);
      FAIL("expected InvalidSplit");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidSplit);
    }
  }
}

TEST_CASE("decompose examples") {
  const auto parts = decompose(testing::interleaved_boundary());
  CHECK(parts.size() == 5);
  CHECK(oracle::undirected_forms(parts) ==
        std::multiset<std::vector<VertexId>>{
            oracle::undirected_form({5, 1, 2, 3, 4}), oracle::undirected_form({1, 6, 9}),
            oracle::undirected_form({10, 11, 9}), oracle::undirected_form({6, 7, 8}),
            oracle::undirected_form({9, 12, 13})});

  const Boundary simple = cycle({3, 1, 2});
  CHECK(decompose(simple) == std::vector<Boundary>{simple});

  CHECK(oracle::undirected_forms(decompose(cycle({0, 1, 2, 0, 3, 4}))) ==
        std::multiset<std::vector<VertexId>>{{0, 1, 2}, {0, 3, 4}});
}

TEST_CASE("canonicalize rotates the smallest vertex first") {
  CHECK(canonicalize(cycle({5, 1, 2, 3, 4})).vertex_cycle() ==
        std::vector<VertexId>{1, 2, 3, 4, 5});
  CHECK(canonicalize(cycle({9, 7, 8})).vertex_cycle() == std::vector<VertexId>{7, 8, 9});
  CHECK(canonicalize(cycle({1, 2, 3})) == cycle({1, 2, 3}));
}

TEST_CASE("each split conserves half-edges") {
  for (const Boundary& start : traced_complex_boundaries(30)) {
    std::vector<Boundary> stack{start};
    while (!stack.empty()) {
      Boundary b = std::move(stack.back());
      stack.pop_back();
      const auto rep = find_repeated_occurrence(b);
      if (!rep) continue;
      auto [outer, inner] = split_at(b, rep->first, rep->second);
      CHECK(outer.size() + inner.size() == b.size());
      std::multiset<EdgeKey> joined = keys_of(outer);
      for (EdgeKey k : keys_of(inner)) joined.insert(k);
      CHECK(joined == keys_of(b));
      stack.push_back(std::move(outer));
      stack.push_back(std::move(inner));
    }
  }
}

TEST_CASE("decompose yields simple, idempotent parts") {
  for (const Boundary& b : traced_complex_boundaries(30)) {
    const auto parts = decompose(b);
    std::size_t total = 0;
    std::multiset<EdgeKey> joined;
    for (const Boundary& p : parts) {
      total += p.size();
      for (EdgeKey k : keys_of(p)) joined.insert(k);
      CHECK(p.size() >= 3);
      CHECK(distinct_vertices(p));
      CHECK(complexity(p) == Complexity::kSimple);
      CHECK(decompose(p) == std::vector<Boundary>{p});
      for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p.halfedges[i].to == p.halfedges[(i + 1) % p.size()].from);
      }
    }
    CHECK(total == b.size());
    CHECK(joined == keys_of(b));
    CHECK(decompose(b) == parts);
  }
}

TEST_CASE("choice of repeated vertex (empirical)") {
  std::mt19937 rng(2026);
  std::size_t boundaries = 0;
  std::size_t differing = 0;
  for (const Boundary& b : traced_complex_boundaries(50)) {
    ++boundaries;
    const auto reference = oracle::undirected_forms(decompose(b));
    for (int trial = 0; trial < 5; ++trial) {
      const auto alternative = decompose_random(b, rng);
      std::size_t total = 0;
      for (const Boundary& p : alternative) {
        total += p.size();
        CHECK(distinct_vertices(p));
      }
      CHECK(total == b.size());
      if (oracle::undirected_forms(alternative) != reference) {
        ++differing;
        break;
      }
    }
  }
  MESSAGE(differing << " of " << boundaries
                    << " complex boundaries decompose differently under another vertex choice");
}
