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

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "holescan/mesh.h"

namespace holescan {

/*
 * Deterministic fixture meshes.
 *
 * Grids lie in the z = 0 plane with unit spacing; grid vertex (r, c) sits at
 * (c, r, 0) and has id r * (cols + 1) + c. Cell (r, c) with corner
 * a = r * (cols + 1) + c is split into triangles (a, a+1, a+cols+2) and
 * (a, a+cols+2, a+cols+1).
 *
 * random_delete removes floor(fraction * triangle_count) distinct triangles
 * chosen by a partial Fisher-Yates shuffle driven by std::mt19937_64 seeded
 * with the given seed. Bounded draws use rejection: a raw 64-bit output r is
 * accepted when r >= (2^64 - n) mod n and mapped to r mod n. Surviving
 * triangles keep their relative order; all vertices are kept.
 *
 * Textual form, accepted by parse_gen_spec and produced by to_string:
 *   grid(rows,cols)
 *   punched_grid(rows,cols,[(r,c),(r,c),...])
 *   tetrahedron | bowtie | double_fan
 *   random_delete(<spec>,fraction,seed)
 */

struct GenSpec;

namespace gen {

struct Grid {
  int rows = 1;
  int cols = 1;
};
struct PunchedGrid {
  int rows = 1;
  int cols = 1;
  std::vector<std::pair<int, int>> removed;  // (row, col) cells
};
struct Tetrahedron {};
struct Bowtie {};
struct DoubleFan {};
struct RandomDelete {
  std::shared_ptr<const GenSpec> base;
  double fraction = 0.5;
  std::uint64_t seed = 0;
};

}  // namespace gen

struct GenSpec {
  std::variant<gen::Grid, gen::PunchedGrid, gen::Tetrahedron, gen::Bowtie,
               gen::DoubleFan, gen::RandomDelete>
      shape;
};

namespace gen {

GenSpec grid(int rows, int cols);
GenSpec punched_grid(int rows, int cols,
                     std::vector<std::pair<int, int>> removed);
GenSpec tetrahedron();
GenSpec bowtie();
GenSpec double_fan();
GenSpec random_delete(GenSpec base, double fraction, std::uint64_t seed);

}  // namespace gen

/// Throws kInvalidSpec on syntax errors or out-of-range parameters.
GenSpec parse_gen_spec(std::string_view text);
std::string to_string(const GenSpec& spec);

/// Throws kInvalidSpec for grid dimensions < 1, removed cells outside the
/// grid (or repeated), or a fraction outside (0, 1).
Mesh generate(const GenSpec& spec);

}  // namespace holescan
