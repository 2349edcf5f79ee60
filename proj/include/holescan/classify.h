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
#include <span>
#include <string_view>
#include <vector>

#include "holescan/boundary_trace.h"
#include "holescan/mesh.h"

namespace holescan {

enum class HoleKind { kCoastline, kTideHole, kLakeHole };

std::string_view to_string(HoleKind kind);

/**
 * One continent: the longest boundary left when it was extracted (its
 * coastline), the edge-connected triangles behind it, and the remaining
 * boundaries lying on those triangles. Boundaries are referenced by their
 * position in the sequence handed to classify().
 */
struct ContinentReport {
  std::size_t index = 0;  // 1-based, in extraction order
  std::size_t coastline = 0;
  double coastline_length = 0;
  std::vector<TriangleId> triangles;  // ascending
  std::vector<std::size_t> tide_holes;
  std::vector<std::size_t> lake_holes;
};

/// Sum of the Euclidean lengths of the half-edges of `b`.
double boundary_length(const Boundary& b, const Mesh& mesh);

/// `singular` must be sorted, as returned by singular_vertices().
bool has_singular_vertex(const Boundary& b, std::span<const VertexId> singular);
bool has_singular_vertex(const Boundary& b, const Mesh& mesh);

/**
 * Repeatedly takes the longest remaining boundary as a coastline (ties go
 * to the lexicographically smaller canonical vertex cycle), binds it to its
 * edge-connected triangle component, and files every other remaining
 * boundary on that component as a tide hole if it shares a vertex with the
 * coastline or as a lake hole if not.
 *
 * Throws kOrphanBoundary if a boundary's half-edges lie on more than one
 * component.
 */
std::vector<ContinentReport> classify(std::span<const Boundary> boundaries,
                                      const Mesh& mesh);

struct MeshStats {
  std::size_t vertex_count = 0;
  std::size_t triangle_count = 0;
  std::size_t half_edge_count = 0;
  std::size_t singular_vertex_count = 0;
  bool edge_manifold = true;
};

MeshStats mesh_stats(const Mesh& mesh);

struct BoundaryRecord {
  Boundary boundary;  // simple, canonical
  double length = 0;
  bool has_singular_vertex = false;
};

/// Everything detect_holes() finds. Boundary ids are positions in
/// `boundaries`; continents refer to them by id.
struct HoleReport {
  MeshStats stats;
  std::vector<BoundaryRecord> boundaries;
  std::vector<ContinentReport> continents;
  bool classified = false;

  struct Label {
    std::size_t continent = 0;  // 0 when unclassified
    std::optional<HoleKind> kind;
  };
  /// Per-boundary continent and kind, indexed by boundary id.
  std::vector<Label> labels() const;
};

/**
 * Full pipeline: trace, decompose, canonicalize and (optionally) classify.
 * Simple boundaries keep the order in which tracing and decomposition
 * produce them. Throws kNotEdgeManifold for non-edge-manifold input.
 */
HoleReport detect_holes(const Mesh& mesh, bool classify_holes = true);

}  // namespace holescan
