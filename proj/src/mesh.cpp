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

#include "holescan/mesh.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "holescan/error.h"

namespace holescan {

namespace {

std::array<EdgeKey, 3> edge_keys(const Triangle& t) {
  return {EdgeKey::of(t.a, t.b), EdgeKey::of(t.b, t.c), EdgeKey::of(t.c, t.a)};
}

std::string describe(TriangleId i, const Triangle& t) {
  return "triangle " + std::to_string(i) + " (" + std::to_string(t.a) + ", " +
         std::to_string(t.b) + ", " + std::to_string(t.c) + ")";
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

double distance(const Point3& p, const Point3& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double dz = p.z - q.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

bool triangle_has_edge(const Triangle& t, EdgeKey key) {
  return t.contains(key.lo) && t.contains(key.hi);
}

EdgeClass EdgeClass::from_count(std::uint32_t count) {
  switch (count) {
    case 1:
      return {Kind::kHalf, 1};
    case 2:
      return {Kind::kFull, 2};
    default:
      return {Kind::kNonManifold, count};
  }
}

EdgeIndex::EdgeIndex(std::span<const Triangle> triangles) {
  std::vector<std::pair<EdgeKey, TriangleId>> entries;
  entries.reserve(3 * triangles.size());
  for (TriangleId t = 0; t < triangles.size(); ++t) {
    for (EdgeKey key : edge_keys(triangles[t])) entries.emplace_back(key, t);
  }
  std::sort(entries.begin(), entries.end());

  tris_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == 0 || entries[i].first != entries[i - 1].first) {
      keys_.push_back(entries[i].first);
      offsets_.push_back(static_cast<std::uint32_t>(tris_.size()));
    }
    tris_.push_back(entries[i].second);
  }
  offsets_.push_back(static_cast<std::uint32_t>(tris_.size()));
}

std::size_t EdgeIndex::find(EdgeKey key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return kNotFound;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::span<const TriangleId> EdgeIndex::adjacent(EdgeKey key) const {
  const std::size_t slot = find(key);
  if (slot == kNotFound) return {};
  return adjacent(slot);
}

Mesh build_mesh(std::vector<Point3> vertices, std::vector<Triangle> triangles) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point3& p = vertices[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorCode::kNonFinitePosition,
                  "vertex " + std::to_string(i) + " has a non-finite position");
    }
  }

  const std::size_t n = vertices.size();
  for (TriangleId i = 0; i < triangles.size(); ++i) {
    const Triangle& t = triangles[i];
    if (t.a >= n || t.b >= n || t.c >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  describe(i, t) + " references a vertex outside [0, " +
                      std::to_string(n) + ")");
    }
    if (t.a == t.b || t.b == t.c || t.c == t.a) {
      throw Error(ErrorCode::kDegenerateTriangle,
                  describe(i, t) + " repeats a vertex");
    }
  }

  // Two triangles with the same vertex set share all three edge keys.
  std::vector<std::pair<std::array<VertexId, 3>, TriangleId>> sorted;
  sorted.reserve(triangles.size());
  for (TriangleId i = 0; i < triangles.size(); ++i) {
    auto v = triangles[i].vertices();
    std::sort(v.begin(), v.end());
    sorted.emplace_back(v, i);
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      const TriangleId dup = std::max(sorted[i].second, sorted[i - 1].second);
      const TriangleId first = std::min(sorted[i].second, sorted[i - 1].second);
      throw Error(ErrorCode::kDuplicateTriangle,
                  describe(dup, triangles[dup]) + " duplicates triangle " +
                      std::to_string(first));
    }
  }

  Mesh mesh;
  mesh.edges_ = EdgeIndex(triangles);

  std::vector<std::uint32_t> degree(n + 1, 0);
  for (const Triangle& t : triangles) {
    for (VertexId v : t.vertices()) ++degree[v + 1];
  }
  std::partial_sum(degree.begin(), degree.end(), degree.begin());
  mesh.vert_offsets_ = degree;
  mesh.vert_tris_.resize(3 * triangles.size());
  std::vector<std::uint32_t> cursor(degree.begin(), degree.end() - 1);
  for (TriangleId i = 0; i < triangles.size(); ++i) {
    for (VertexId v : triangles[i].vertices()) mesh.vert_tris_[cursor[v]++] = i;
  }

  mesh.vertices_ = std::move(vertices);
  mesh.triangles_ = std::move(triangles);
  return mesh;
}

std::map<EdgeKey, EdgeClass> classify_edges(const Mesh& mesh) {
  std::map<EdgeKey, EdgeClass> classes;
  const EdgeIndex& index = mesh.edges();
  for (std::size_t slot = 0; slot < index.size(); ++slot) {
    classes.emplace_hint(
        classes.end(), index.keys()[slot],
        EdgeClass::from_count(
            static_cast<std::uint32_t>(index.adjacent(slot).size())));
  }
  return classes;
}

std::vector<EdgeKey> half_edge_keys(const Mesh& mesh) {
  std::vector<EdgeKey> keys;
  const EdgeIndex& index = mesh.edges();
  for (std::size_t slot = 0; slot < index.size(); ++slot) {
    if (index.adjacent(slot).size() == 1) keys.push_back(index.keys()[slot]);
  }
  return keys;
}

bool is_edge_manifold(const Mesh& mesh) {
  const EdgeIndex& index = mesh.edges();
  for (std::size_t slot = 0; slot < index.size(); ++slot) {
    if (index.adjacent(slot).size() > 2) return false;
  }
  return true;
}

std::vector<VertexId> singular_vertices(const Mesh& mesh) {
  std::vector<std::uint32_t> touching(mesh.vertex_count(), 0);
  for (EdgeKey key : half_edge_keys(mesh)) {
    ++touching[key.lo];
    ++touching[key.hi];
  }
  std::vector<VertexId> result;
  for (VertexId v = 0; v < touching.size(); ++v) {
    if (touching[v] > 2) result.push_back(v);
  }
  return result;
}

std::vector<TriangleId> one_ring(const Mesh& mesh, VertexId v) {
  if (v >= mesh.vertex_count()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex " + std::to_string(v) + " is not in the mesh");
  }
  auto ring = mesh.triangles_around(v);
  return {ring.begin(), ring.end()};
}

DirectedEdge transition_edge(DirectedEdge e, const Triangle& t) {
  if (e.from == e.to || !t.contains(e.from) || !t.contains(e.to)) {
    throw Error(ErrorCode::kEdgeNotInTriangle,
                "edge (" + std::to_string(e.from) + " -> " +
                    std::to_string(e.to) + ") is not an edge of triangle (" +
                    std::to_string(t.a) + ", " + std::to_string(t.b) + ", " +
                    std::to_string(t.c) + ")");
  }
  for (VertexId v : t.vertices()) {
    if (v != e.from && v != e.to) return {v, e.to};
  }
  // Unreachable for a non-degenerate triangle.
  throw Error(ErrorCode::kInvariantViolation, "degenerate triangle in pivot");
}

ComponentLabels edge_connected_components(const Mesh& mesh) {
  DisjointSets sets(mesh.triangle_count());
  const EdgeIndex& index = mesh.edges();
  for (std::size_t slot = 0; slot < index.size(); ++slot) {
    auto adj = index.adjacent(slot);
    for (std::size_t i = 1; i < adj.size(); ++i) sets.unite(adj[0], adj[i]);
  }

  ComponentLabels out;
  out.label.resize(mesh.triangle_count());
  std::vector<std::uint32_t> root_label(mesh.triangle_count(),
                                        static_cast<std::uint32_t>(-1));
  for (TriangleId t = 0; t < mesh.triangle_count(); ++t) {
    const std::uint32_t root = sets.find(t);
    if (root_label[root] == static_cast<std::uint32_t>(-1)) {
      root_label[root] = out.count++;
    }
    out.label[t] = root_label[root];
  }
  return out;
}

}  // namespace holescan
