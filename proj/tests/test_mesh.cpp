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

#include <cmath>
#include <limits>
#include <set>

#include "fixtures.h"
#include "holescan/error.h"
#include "holescan/mesh.h"
#include "holescan/meshgen.h"
#include "oracles.h"

using namespace holescan;
using holescan::testing::named_fixtures;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvariantViolation;
}

std::vector<std::pair<std::string, Mesh>> small_meshes() {
  auto out = named_fixtures();
  out.emplace_back("three_on_one_edge", testing::three_on_one_edge());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    out.emplace_back("fuzz" + std::to_string(seed),
                     generate(gen::random_delete(gen::grid(5, 5), 0.5, seed)));
  }
  return out;
}

}  // namespace

TEST_CASE("build_mesh accepts a single triangle") {
  const Mesh m = testing::single_triangle();
  CHECK(m.triangle_count() == 1);
  CHECK(half_edge_keys(m).size() == 3);
}

TEST_CASE("build_mesh rejects bad input") {
  CHECK(code_of([] { build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 1}}); }) ==
        ErrorCode::kDegenerateTriangle);
  CHECK(code_of([] { build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 3}}); }) ==
        ErrorCode::kIndexOutOfRange);
  CHECK(code_of([] {
          build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}, {2, 1, 0}});
        }) == ErrorCode::kDuplicateTriangle);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(code_of([&] { build_mesh({{0, 0, 0}, {1, nan, 0}, {0, 1, 0}}, {{0, 1, 2}}); }) ==
        ErrorCode::kNonFinitePosition);
}

TEST_CASE("unreferenced vertices are kept and ignored") {
  const Mesh m = build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 5, 5}}, {{0, 1, 2}});
  CHECK(m.vertex_count() == 4);
  CHECK(singular_vertices(m).empty());
  CHECK(one_ring(m, 3).empty());
}

TEST_CASE("tetrahedron has six full edges") {
  const Mesh m = generate(gen::tetrahedron());
  const auto classes = classify_edges(m);
  CHECK(classes.size() == 6);
  for (const auto& [key, cls] : classes) CHECK(cls == EdgeClass{EdgeClass::Kind::kFull, 2});
  CHECK(is_edge_manifold(m));
  CHECK(singular_vertices(m).empty());
}

TEST_CASE("classify_edges on small cases") {
  for (const auto& [key, cls] : classify_edges(testing::single_triangle())) {
    CHECK(cls.kind == EdgeClass::Kind::kHalf);
  }

  const auto quad = classify_edges(testing::quad_split());
  CHECK(quad.size() == 5);
  CHECK(quad.at(EdgeKey{0, 2}).kind == EdgeClass::Kind::kFull);
  for (EdgeKey k : {EdgeKey{0, 1}, EdgeKey{1, 2}, EdgeKey{2, 3}, EdgeKey{0, 3}}) {
    CHECK(quad.at(k).kind == EdgeClass::Kind::kHalf);
  }

  const Mesh fan3 = testing::three_on_one_edge();
  CHECK(classify_edges(fan3).at(EdgeKey{0, 1}) == EdgeClass{EdgeClass::Kind::kNonManifold, 3});
  CHECK_FALSE(is_edge_manifold(fan3));
}

TEST_CASE("bowtie is edge-manifold with one singular vertex") {
  const Mesh m = generate(gen::bowtie());
  CHECK(is_edge_manifold(m));
  CHECK(singular_vertices(m) == std::vector<VertexId>{0});
  CHECK(singular_vertices(testing::single_triangle()).empty());
}

TEST_CASE("one_ring") {
  const Mesh bowtie = generate(gen::bowtie());
  CHECK(one_ring(bowtie, 0) == std::vector<TriangleId>{0, 1});
  CHECK(one_ring(bowtie, 1) == std::vector<TriangleId>{0});
  CHECK(one_ring(generate(gen::double_fan()), 0) == std::vector<TriangleId>{0, 1, 2, 3});
  CHECK(code_of([&] { one_ring(bowtie, 99); }) == ErrorCode::kIndexOutOfRange);
}

TEST_CASE("transition_edge") {
  CHECK(transition_edge({1, 2}, Triangle{0, 1, 2}) == DirectedEdge{0, 2});
  CHECK(transition_edge({2, 0}, Triangle{0, 2, 3}) == DirectedEdge{3, 0});
  CHECK(code_of([] { transition_edge({1, 2}, Triangle{0, 1, 3}); }) ==
        ErrorCode::kEdgeNotInTriangle);
}

TEST_CASE("transition_edge holds the pivot and never the tail") {
  for (const auto& [name, mesh] : small_meshes()) {
    for (const Triangle& t : mesh.triangles()) {
      const auto v = t.vertices();
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          const DirectedEdge e{v[i], v[j]};
          const DirectedEdge out = transition_edge(e, t);
          CHECK(out.to == e.to);
          CHECK(out.from != e.from);
          CHECK(t.contains(out.from));
        }
      }
    }
  }
}

TEST_CASE("edge_connected_components examples") {
  CHECK(edge_connected_components(generate(gen::bowtie())).count == 2);
  CHECK(edge_connected_components(testing::quad_split()).count == 1);
  CHECK(edge_connected_components(generate(gen::punched_grid(4, 4, {{1, 1}}))).count == 1);
  CHECK(edge_connected_components(testing::three_continents()).count == 3);
}

TEST_CASE("edge adjacency matches a brute-force count") {
  for (const auto& [name, mesh] : small_meshes()) {
    CAPTURE(name);
    const auto expected = oracle::edge_counts(mesh);
    const auto classes = classify_edges(mesh);
    REQUIRE(classes.size() == expected.size());
    std::size_t total = 0;
    std::size_t half = 0, full = 0, nonmanifold = 0;
    bool any_nonmanifold = false;
    for (const auto& [key, cls] : classes) {
      CHECK(cls.count == expected.at({key.lo, key.hi}));
      CHECK(cls == EdgeClass::from_count(cls.count));
      CHECK(mesh.edges().count(key) == cls.count);
      total += cls.count;
      half += cls.kind == EdgeClass::Kind::kHalf;
      full += cls.kind == EdgeClass::Kind::kFull;
      nonmanifold += cls.kind == EdgeClass::Kind::kNonManifold;
      any_nonmanifold = any_nonmanifold || cls.kind == EdgeClass::Kind::kNonManifold;
    }
    CHECK(total == 3 * mesh.triangle_count());
    CHECK(half + full + nonmanifold == classes.size());
    CHECK(is_edge_manifold(mesh) == !any_nonmanifold);
  }
}

TEST_CASE("singular vertices match a brute-force count") {
  for (const auto& [name, mesh] : small_meshes()) {
    CAPTURE(name);
    std::vector<int> degree(mesh.vertex_count(), 0);
    for (const auto& [edge, n] : oracle::edge_counts(mesh)) {
      if (n != 1) continue;
      ++degree[edge.first];
      ++degree[edge.second];
    }
    std::vector<VertexId> expected;
    for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
      if (degree[v] > 2) expected.push_back(v);
    }
    CHECK(singular_vertices(mesh) == expected);
    // No vertex of an edge-manifold mesh touches an odd number of half-edges.
    if (is_edge_manifold(mesh)) {
      for (int d : degree) CHECK(d % 2 == 0);
    }
  }
}

TEST_CASE("one_ring matches a membership scan") {
  for (const auto& [name, mesh] : small_meshes()) {
    for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
      std::vector<TriangleId> expected;
      for (TriangleId t = 0; t < mesh.triangle_count(); ++t) {
        if (mesh.triangle(t).contains(v)) expected.push_back(t);
      }
      CHECK(one_ring(mesh, v) == expected);
    }
  }
}

TEST_CASE("components match brute-force flood fill") {
  for (const auto& [name, mesh] : small_meshes()) {
    if (mesh.triangle_count() > 50) continue;
    CAPTURE(name);
    const ComponentLabels got = edge_connected_components(mesh);
    const std::vector<int> expected = oracle::components(mesh);
    REQUIRE(got.label.size() == mesh.triangle_count());
    std::set<int> distinct(expected.begin(), expected.end());
    CHECK(got.count == distinct.size());
    for (std::size_t s = 0; s < expected.size(); ++s) {
      for (std::size_t t = 0; t < expected.size(); ++t) {
        CHECK((got.label[s] == got.label[t]) == (expected[s] == expected[t]));
      }
    }
    // Labels appear in order of their lowest triangle.
    std::uint32_t seen = 0;
    for (std::uint32_t l : got.label) {
      CHECK(l <= seen);
      if (l == seen) ++seen;
    }
  }
}
