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

#include "holescan/boundary_trace.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "holescan/error.h"

namespace holescan {

namespace {

std::string show(DirectedEdge e) {
  return "(" + std::to_string(e.from) + " -> " + std::to_string(e.to) + ")";
}

}  // namespace

std::vector<VertexId> Boundary::vertex_cycle() const {
  std::vector<VertexId> cycle;
  cycle.reserve(halfedges.size());
  for (const DirectedEdge& h : halfedges) cycle.push_back(h.from);
  return cycle;
}

bool Boundary::is_simple() const {
  std::vector<VertexId> cycle = vertex_cycle();
  std::sort(cycle.begin(), cycle.end());
  return std::adjacent_find(cycle.begin(), cycle.end()) == cycle.end();
}

Boundary Boundary::from_cycle(std::span<const VertexId> cycle) {
  Boundary b;
  b.halfedges.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    b.halfedges.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
  }
  return b;
}

DirectedEdge next_halfedge(const Mesh& mesh, DirectedEdge h) {
  const EdgeIndex& index = mesh.edges();
  auto start = index.adjacent(h.key());
  if (start.size() != 1) {
    throw Error(ErrorCode::kNotHalfEdge,
                "edge " + show(h) + " is adjacent to " +
                    std::to_string(start.size()) + " triangles, not one");
  }

  // Every transition edge ends at the pivot, so the loop is a rotation about
  // h.to. It visits each incident triangle at most once.
  DirectedEdge current = transition_edge(h, mesh.triangle(start[0]));
  EdgeKey previous = h.key();
  const std::size_t max_steps = mesh.triangles_around(h.to).size();
  for (std::size_t step = 0; step <= max_steps; ++step) {
    auto adj = index.adjacent(current.key());
    if (adj.size() == 1) return current.reversed();
    if (adj.size() != 2) {
      throw Error(ErrorCode::kNotEdgeManifold,
                  "edge " + show(current) + " is adjacent to " +
                      std::to_string(adj.size()) + " triangles");
    }
    // The one triangle on `current` that does not also hold `previous`.
    const Triangle* next = nullptr;
    int candidates = 0;
    for (TriangleId t : adj) {
      if (!triangle_has_edge(mesh.triangle(t), previous)) {
        next = &mesh.triangle(t);
        ++candidates;
      }
    }
    if (candidates != 1) {
      throw Error(ErrorCode::kNotEdgeManifold,
                  "no unique triangle continues the rotation at " +
                      show(current));
    }
    previous = current.key();
    current = transition_edge(current, *next);
  }
  throw Error(ErrorCode::kInvariantViolation,
              "rotation around vertex " + std::to_string(h.to) +
                  " did not reach a half-edge");
}

HalfEdgeGraph::HalfEdgeGraph(const Mesh& mesh)
    : mesh_(&mesh), keys_(half_edge_keys(mesh)) {
  offsets_.assign(mesh.vertex_count() + 1, 0);
  for (EdgeKey key : keys_) {
    ++offsets_[key.lo + 1];
    ++offsets_[key.hi + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  neighbors_.resize(2 * keys_.size());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeKey key : keys_) {
    neighbors_[cursor[key.lo]++] = key.hi;
    neighbors_[cursor[key.hi]++] = key.lo;
  }
}

std::size_t HalfEdgeGraph::slot(EdgeKey key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return EdgeIndex::kNotFound;
  return static_cast<std::size_t>(it - keys_.begin());
}

DirectedEdge HalfEdgeGraph::next(DirectedEdge h) const {
  if (degree(h.to) == 2) {
    auto around = neighbors(h.to);
    if (around[0] == h.from) return {h.to, around[1]};
    if (around[1] == h.from) return {h.to, around[0]};
    throw Error(ErrorCode::kNotHalfEdge, "edge " + show(h) + " is not a half-edge");
  }
  return next_halfedge(*mesh_, h);
}

DirectedEdge HalfEdgeGraph::seed_orientation(EdgeKey key) const {
  auto adj = mesh_->edges().adjacent(key);
  if (adj.size() != 1) {
    throw Error(ErrorCode::kNotHalfEdge,
                "seed {" + std::to_string(key.lo) + ", " +
                    std::to_string(key.hi) + "} is not a half-edge");
  }
  const Triangle& t = mesh_->triangle(adj[0]);
  for (DirectedEdge e : {DirectedEdge{t.a, t.b}, DirectedEdge{t.b, t.c},
                         DirectedEdge{t.c, t.a}}) {
    if (e.key() == key) return e;
  }
  throw Error(ErrorCode::kInvariantViolation, "seed edge missing from its triangle");
}

BoundarySet construct_boundaries(const Mesh& mesh) {
  const std::vector<EdgeKey> order = half_edge_keys(mesh);
  return construct_boundaries(mesh, order);
}

BoundarySet construct_boundaries(const Mesh& mesh,
                                 std::span<const EdgeKey> seed_order) {
  if (!is_edge_manifold(mesh)) {
    throw Error(ErrorCode::kNotEdgeManifold,
                "mesh has an edge shared by more than two triangles");
  }
  const HalfEdgeGraph graph(mesh);
  std::vector<bool> used(graph.size(), false);
  std::size_t remaining = graph.size();

  BoundarySet boundaries;
  for (EdgeKey seed : seed_order) {
    const std::size_t seed_slot = graph.slot(seed);
    if (seed_slot == EdgeIndex::kNotFound) {
      throw Error(ErrorCode::kNotHalfEdge,
                  "seed {" + std::to_string(seed.lo) + ", " +
                      std::to_string(seed.hi) + "} is not a half-edge");
    }
    if (used[seed_slot]) continue;

    const DirectedEdge start = graph.seed_orientation(seed);
    Boundary b;
    b.halfedges.push_back(start);
    used[seed_slot] = true;
    DirectedEdge current = start;
    while (true) {
      const DirectedEdge next = graph.next(current);
      if (next.key() == start.key()) {
        if (next != start) {
          throw Error(ErrorCode::kInvariantViolation,
                      "boundary closed on the reverse of its seed " + show(start));
        }
        break;
      }
      const std::size_t next_slot = graph.slot(next.key());
      if (next_slot == EdgeIndex::kNotFound || used[next_slot]) {
        throw Error(ErrorCode::kInvariantViolation,
                    "half-edge " + show(next) + " reached twice while tracing");
      }
      used[next_slot] = true;
      b.halfedges.push_back(next);
      current = next;
    }
    remaining -= b.size();
    boundaries.push_back(std::move(b));
  }
  if (remaining != 0) {
    throw Error(ErrorCode::kInvariantViolation,
                std::to_string(remaining) + " half-edges were never seeded");
  }
  return boundaries;
}

}  // namespace holescan
