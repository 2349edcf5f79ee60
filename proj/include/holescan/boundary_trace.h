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
#include <span>
#include <vector>

#include "holescan/mesh.h"

namespace holescan {

/**
 * A closed chain of half-edges: halfedges[i].to == halfedges[i + 1].from,
 * wrapping around at the end. Position i owns the half-edge leaving the i-th
 * vertex of the cycle.
 */
struct Boundary {
  std::vector<DirectedEdge> halfedges;

  std::size_t size() const { return halfedges.size(); }
  std::vector<VertexId> vertex_cycle() const;
  /// True when no vertex repeats.
  bool is_simple() const;

  /// Builds the chain v0->v1, v1->v2, ..., v{n-1}->v0.
  static Boundary from_cycle(std::span<const VertexId> cycle);

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

using BoundarySet = std::vector<Boundary>;

/**
 * The upcoming half-edge of `h`: starting from the single triangle on `h`,
 * rotate around the pivot h.to across full edges until the first half-edge
 * is met. The result starts at h.to.
 *
 * Throws kNotHalfEdge if `h` is not adjacent to exactly one triangle, and
 * kNotEdgeManifold if the rotation crosses an edge with more than two
 * triangles.
 */
DirectedEdge next_halfedge(const Mesh& mesh, DirectedEdge h);

/**
 * The half-edge set of a mesh with per-vertex incidence. next() skips the
 * rotation when the pivot touches exactly two half-edges, since the other
 * one is then the only candidate.
 *
 * Holds a reference to the mesh; the mesh must outlive the graph.
 */
class HalfEdgeGraph {
 public:
  explicit HalfEdgeGraph(const Mesh& mesh);

  const Mesh& mesh() const { return *mesh_; }
  std::size_t size() const { return keys_.size(); }
  /// Sorted half-edge keys.
  std::span<const EdgeKey> keys() const { return keys_; }
  /// Position of `key` in keys(), or EdgeIndex::kNotFound.
  std::size_t slot(EdgeKey key) const;

  /// Number of half-edges incident to `v`.
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  /// Far endpoints of the half-edges incident to `v`.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  DirectedEdge next(DirectedEdge h) const;

  /// `key` oriented as it appears in the winding of its triangle.
  DirectedEdge seed_orientation(EdgeKey key) const;

 private:
  const Mesh* mesh_;
  std::vector<EdgeKey> keys_;
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> neighbors_;
};

/**
 * Partitions the half-edges of an edge-manifold mesh into closed
 * boundaries. Seeds are taken as the smallest unused half-edge key, so the
 * output is deterministic. Returns an empty set for a closed mesh; throws
 * kNotEdgeManifold otherwise.
 */
BoundarySet construct_boundaries(const Mesh& mesh);

/**
 * Same, but seeds are drawn from `seed_order` (skipping keys already used).
 * `seed_order` must contain every half-edge key of the mesh.
 */
BoundarySet construct_boundaries(const Mesh& mesh,
                                 std::span<const EdgeKey> seed_order);

}  // namespace holescan
