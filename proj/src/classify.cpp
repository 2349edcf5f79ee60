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

#include "holescan/classify.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "holescan/decompose.h"
#include "holescan/error.h"

namespace holescan {

namespace {

constexpr std::uint32_t kNoLabel = static_cast<std::uint32_t>(-1);

std::uint32_t component_of(const Boundary& b, std::size_t id, const Mesh& mesh,
                           const ComponentLabels& components) {
  std::uint32_t label = kNoLabel;
  for (const DirectedEdge& h : b.halfedges) {
    for (TriangleId t : mesh.edges().adjacent(h.key())) {
      if (label == kNoLabel) label = components.label[t];
      if (components.label[t] != label) {
        throw Error(ErrorCode::kOrphanBoundary,
                    "boundary " + std::to_string(id) +
                        " lies on more than one edge-connected component");
      }
    }
  }
  if (label == kNoLabel) {
    throw Error(ErrorCode::kOrphanBoundary,
                "boundary " + std::to_string(id) + " has no triangles in the mesh");
  }
  return label;
}

}  // namespace

std::string_view to_string(HoleKind kind) {
  switch (kind) {
    case HoleKind::kCoastline:
      return "coastline";
    case HoleKind::kTideHole:
      return "tide_hole";
    case HoleKind::kLakeHole:
      return "lake_hole";
  }
  return "unknown";
}

double boundary_length(const Boundary& b, const Mesh& mesh) {
  double length = 0;
  for (const DirectedEdge& h : b.halfedges) {
    length += distance(mesh.position(h.from), mesh.position(h.to));
  }
  return length;
}

bool has_singular_vertex(const Boundary& b, std::span<const VertexId> singular) {
  return std::any_of(b.halfedges.begin(), b.halfedges.end(),
                     [&](const DirectedEdge& h) {
                       return std::binary_search(singular.begin(),
                                                 singular.end(), h.from);
                     });
}

bool has_singular_vertex(const Boundary& b, const Mesh& mesh) {
  const std::vector<VertexId> singular = singular_vertices(mesh);
  return has_singular_vertex(b, singular);
}

std::vector<ContinentReport> classify(std::span<const Boundary> boundaries,
                                      const Mesh& mesh) {
  const ComponentLabels components = edge_connected_components(mesh);
  const std::size_t n = boundaries.size();

  std::vector<std::uint32_t> label(n);
  std::vector<double> length(n);
  std::vector<std::vector<VertexId>> canonical(n);
  std::vector<std::vector<std::size_t>> by_component(components.count);
  for (std::size_t i = 0; i < n; ++i) {
    label[i] = component_of(boundaries[i], i, mesh, components);
    length[i] = boundary_length(boundaries[i], mesh);
    canonical[i] = canonicalize(boundaries[i]).vertex_cycle();
    by_component[label[i]].push_back(i);
  }

  // Extracting the global maximum each round and removing its whole
  // component is the same as walking this order and skipping boundaries
  // whose component is already taken.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (length[l] != length[r]) return length[l] > length[r];
    if (canonical[l] != canonical[r]) return canonical[l] < canonical[r];
    return l < r;
  });

  std::vector<std::vector<TriangleId>> component_triangles(components.count);
  for (TriangleId t = 0; t < mesh.triangle_count(); ++t) {
    component_triangles[components.label[t]].push_back(t);
  }

  std::vector<bool> taken(components.count, false);
  std::vector<ContinentReport> continents;
  for (std::size_t coast : order) {
    if (taken[label[coast]]) continue;
    taken[label[coast]] = true;

    ContinentReport continent;
    continent.index = continents.size() + 1;
    continent.coastline = coast;
    continent.coastline_length = length[coast];
    continent.triangles = component_triangles[label[coast]];

    std::vector<VertexId> shore = canonical[coast];
    std::sort(shore.begin(), shore.end());
    for (std::size_t hole : by_component[label[coast]]) {
      if (hole == coast) continue;
      const bool touches = std::any_of(
          canonical[hole].begin(), canonical[hole].end(),
          [&](VertexId v) { return std::binary_search(shore.begin(), shore.end(), v); });
      (touches ? continent.tide_holes : continent.lake_holes).push_back(hole);
    }
    continents.push_back(std::move(continent));
  }
  return continents;
}

MeshStats mesh_stats(const Mesh& mesh) {
  MeshStats stats;
  stats.vertex_count = mesh.vertex_count();
  stats.triangle_count = mesh.triangle_count();
  stats.half_edge_count = half_edge_keys(mesh).size();
  stats.singular_vertex_count = singular_vertices(mesh).size();
  stats.edge_manifold = is_edge_manifold(mesh);
  return stats;
}

std::vector<HoleReport::Label> HoleReport::labels() const {
  std::vector<Label> out(boundaries.size());
  for (const ContinentReport& c : continents) {
    out.at(c.coastline) = {c.index, HoleKind::kCoastline};
    for (std::size_t id : c.tide_holes) out.at(id) = {c.index, HoleKind::kTideHole};
    for (std::size_t id : c.lake_holes) out.at(id) = {c.index, HoleKind::kLakeHole};
  }
  return out;
}

HoleReport detect_holes(const Mesh& mesh, bool classify_holes) {
  HoleReport report;
  report.stats = mesh_stats(mesh);
  if (!report.stats.edge_manifold) {
    throw Error(ErrorCode::kNotEdgeManifold,
                "mesh has an edge shared by more than two triangles");
  }

  const std::vector<VertexId> singular = singular_vertices(mesh);
  std::vector<Boundary> simples;
  for (const Boundary& traced : construct_boundaries(mesh)) {
    for (Boundary& part : decompose(traced)) {
      simples.push_back(canonicalize(std::move(part)));
    }
  }

  report.boundaries.reserve(simples.size());
  for (const Boundary& b : simples) {
    report.boundaries.push_back(
        {b, boundary_length(b, mesh), has_singular_vertex(b, singular)});
  }
  if (classify_holes) {
    report.continents = classify(simples, mesh);
    report.classified = true;
  }
  return report;
}

}  // namespace holescan
