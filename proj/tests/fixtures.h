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

// Hand-built meshes and boundaries shared by the unit and acceptance tests.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "holescan/boundary_trace.h"
#include "holescan/mesh.h"
#include "holescan/meshgen.h"

namespace holescan::testing {

inline Mesh single_triangle() {
  return build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
}

inline Mesh quad_split() {
  return build_mesh({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}},
                    {{0, 1, 2}, {0, 2, 3}});
}

/// Three triangles on edge {0,1}.
inline Mesh three_on_one_edge() {
  return build_mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}},
                    {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
}

/// Glues unit grids into one mesh, optionally identifying grid points with
/// vertices already placed.
class GridAssembler {
 public:
  /// Adds a rows x cols grid with its (0,0) corner at (x0, y0). `glue`
  /// maps grid points (r, c) of the new grid onto existing vertex ids.
  void add_grid(int rows, int cols, double x0, double y0,
                const std::vector<std::pair<int, int>>& removed = {},
                const std::map<std::pair<int, int>, VertexId>& glue = {}) {
    std::vector<std::vector<VertexId>> id(rows + 1, std::vector<VertexId>(cols + 1));
    for (int r = 0; r <= rows; ++r) {
      for (int c = 0; c <= cols; ++c) {
        auto it = glue.find({r, c});
        if (it != glue.end()) {
          id[r][c] = it->second;
          continue;
        }
        id[r][c] = static_cast<VertexId>(vertices_.size());
        vertices_.push_back({x0 + c, y0 + r, 0});
      }
    }
    last_ids_ = id;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        bool skip = false;
        for (const auto& cell : removed) skip = skip || cell == std::pair{r, c};
        if (skip) continue;
        const VertexId a = id[r][c], b = id[r][c + 1], d = id[r + 1][c + 1],
                       c2 = id[r + 1][c];
        triangles_.push_back({a, b, d});
        triangles_.push_back({a, d, c2});
      }
    }
  }

  /// Vertex id of grid point (r, c) of the most recently added grid.
  VertexId last(int r, int c) const { return last_ids_[r][c]; }

  Mesh build() const { return build_mesh(vertices_, triangles_); }

 private:
  std::vector<Point3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<VertexId>> last_ids_;
};

/**
 * Three continents. Continent 1: 12x12 grid with the corner cell removed,
 * cell (1,1) removed so its hole pinches the coastline at one vertex, and
 * three interior cells removed. Continent 2: 3x3 grid with its centre
 * removed, touching continent 1 only at a corner vertex. Continent 3: an
 * isolated single cell.
 */
inline Mesh three_continents() {
  GridAssembler g;
  g.add_grid(12, 12, 0, 0, {{0, 0}, {1, 1}, {4, 4}, {4, 8}, {8, 4}});
  const VertexId corner = g.last(12, 12);
  g.add_grid(3, 3, 12, 12, {{1, 1}}, {{{0, 0}, corner}});
  g.add_grid(1, 1, 30, 0);
  return g.build();
}

/// A complex boundary with nested and chained repeats of v1, v6 and v9.
inline Boundary interleaved_boundary() {
  const std::vector<VertexId> cycle{5, 1, 6, 7, 8, 6, 9, 10, 11, 9, 12, 13, 9, 1, 2, 3, 4};
  return Boundary::from_cycle(cycle);
}

/// Named fixture meshes covered by the partition and bijectivity suites.
inline std::vector<std::pair<std::string, Mesh>> named_fixtures() {
  std::vector<std::pair<std::string, Mesh>> out;
  out.emplace_back("single_triangle", single_triangle());
  out.emplace_back("quad_split", quad_split());
  out.emplace_back("tetrahedron", generate(gen::tetrahedron()));
  out.emplace_back("bowtie", generate(gen::bowtie()));
  out.emplace_back("double_fan", generate(gen::double_fan()));
  out.emplace_back("three_continents", three_continents());
  for (int n : {1, 2, 4, 7, 12, 20}) {
    out.emplace_back("grid(" + std::to_string(n) + ")", generate(gen::grid(n, n)));
  }
  out.emplace_back("punched_grid(4,4)", generate(gen::punched_grid(4, 4, {{1, 1}})));
  out.emplace_back("punched_grid(10,10)",
                   generate(gen::punched_grid(10, 10, {{1, 1}, {2, 2}, {5, 5}, {5, 6}, {8, 1}})));
  // Diagonal neighbours make pinch vertices between holes.
  out.emplace_back("punched_grid(20,20)",
                   generate(gen::punched_grid(20, 20, {{3, 3}, {4, 4}, {5, 5}, {10, 10},
                                                       {10, 12}, {11, 11}, {0, 0}, {19, 19}})));
  return out;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() /
             ("holescan-" + name + "-" + std::to_string(rd()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace holescan::testing
