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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace holescan {

using VertexId = std::uint32_t;
using TriangleId = std::uint32_t;

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;

  friend bool operator==(const Point3&, const Point3&) = default;
};

double distance(const Point3& p, const Point3& q);

/// Three distinct vertex ids. The input winding is preserved as given; it
/// is never assumed to be globally consistent.
struct Triangle {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  std::array<VertexId, 3> vertices() const { return {a, b, c}; }
  bool contains(VertexId v) const { return a == v || b == v || c == v; }

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Unordered edge, normalized so that lo < hi.
struct EdgeKey {
  VertexId lo = 0;
  VertexId hi = 0;

  static EdgeKey of(VertexId u, VertexId v) {
    return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
  }
  bool contains(VertexId v) const { return lo == v || hi == v; }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Oriented vertex pair; the unit of boundary traversal.
struct DirectedEdge {
  VertexId from = 0;
  VertexId to = 0;

  EdgeKey key() const { return EdgeKey::of(from, to); }
  DirectedEdge reversed() const { return {to, from}; }

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

bool triangle_has_edge(const Triangle& t, EdgeKey key);

struct EdgeClass {
  enum class Kind { kHalf, kFull, kNonManifold };

  Kind kind = Kind::kHalf;
  std::uint32_t count = 1;  // adjacent triangles

  static EdgeClass from_count(std::uint32_t count);

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/**
 * Edge → adjacent-triangle lookup, stored as a sorted key table with
 * compressed adjacency lists. Adjacency lists keep triangle index order.
 */
class EdgeIndex {
 public:
  static constexpr std::size_t kNotFound = static_cast<std::size_t>(-1);

  EdgeIndex() = default;
  explicit EdgeIndex(std::span<const Triangle> triangles);

  std::size_t size() const { return keys_.size(); }
  std::span<const EdgeKey> keys() const { return keys_; }

  /// Position of `key` in keys(), or kNotFound.
  std::size_t find(EdgeKey key) const;

  std::span<const TriangleId> adjacent(std::size_t slot) const {
    return {tris_.data() + offsets_[slot], tris_.data() + offsets_[slot + 1]};
  }
  /// Empty when the edge does not exist.
  std::span<const TriangleId> adjacent(EdgeKey key) const;

  std::uint32_t count(EdgeKey key) const {
    return static_cast<std::uint32_t>(adjacent(key).size());
  }

 private:
  std::vector<EdgeKey> keys_;
  std::vector<std::uint32_t> offsets_;
  std::vector<TriangleId> tris_;
};

/**
 * Immutable triangle mesh: vertex positions, triangles, and the derived
 * edge and vertex adjacency. Construct through build_mesh().
 */
class Mesh {
 public:
  Mesh() = default;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }

  std::span<const Point3> vertices() const { return vertices_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  const Point3& position(VertexId v) const { return vertices_[v]; }
  const Triangle& triangle(TriangleId t) const { return triangles_[t]; }
  const EdgeIndex& edges() const { return edges_; }

  /// Triangles incident to `v`, ascending.
  std::span<const TriangleId> triangles_around(VertexId v) const {
    return {vert_tris_.data() + vert_offsets_[v],
            vert_tris_.data() + vert_offsets_[v + 1]};
  }

  friend Mesh build_mesh(std::vector<Point3> vertices,
                         std::vector<Triangle> triangles);

 private:
  std::vector<Point3> vertices_;
  std::vector<Triangle> triangles_;
  EdgeIndex edges_;
  std::vector<std::uint32_t> vert_offsets_{0};
  std::vector<TriangleId> vert_tris_;
};

/**
 * Validates and assembles a mesh. Throws Error with kIndexOutOfRange,
 * kDegenerateTriangle, kDuplicateTriangle (same vertex set as an earlier
 * triangle, in either winding) or kNonFinitePosition. Vertices that no
 * triangle references are kept and ignored by all queries.
 */
Mesh build_mesh(std::vector<Point3> vertices, std::vector<Triangle> triangles);

std::map<EdgeKey, EdgeClass> classify_edges(const Mesh& mesh);

/// Keys of all edges adjacent to exactly one triangle, ascending.
std::vector<EdgeKey> half_edge_keys(const Mesh& mesh);

bool is_edge_manifold(const Mesh& mesh);

/// Vertices incident to more than two half-edges, ascending.
std::vector<VertexId> singular_vertices(const Mesh& mesh);

/// Triangles containing `v`, ascending.
std::vector<TriangleId> one_ring(const Mesh& mesh, VertexId v);

/**
 * The edge of `t` that contains e.to but not e.from, oriented so that its
 * head is the pivot e.to. Throws kEdgeNotInTriangle if `t` does not hold
 * both endpoints of `e`.
 */
DirectedEdge transition_edge(DirectedEdge e, const Triangle& t);

struct ComponentLabels {
  /// One label per triangle. Labels are dense and numbered in order of the
  /// lowest triangle index they contain.
  std::vector<std::uint32_t> label;
  std::uint32_t count = 0;
};

/// Groups triangles connected through chains of shared edges. Triangles
/// touching only at a vertex land in different components.
ComponentLabels edge_connected_components(const Mesh& mesh);

}  // namespace holescan
