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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holescan/mesh.h"

namespace holescan {

// Reads the subset of PLY that common scanning and reconstruction tools
// export: ascii 1.0 or binary_little_endian 1.0, a "vertex" element with
// float/double x, y, z, and a "face" element with a vertex index list.
// Other elements and properties are skipped.

enum class PlyFormat { kAscii, kBinaryLittleEndian };

enum class PlyScalar {
  kInt8,
  kUInt8,
  kInt16,
  kUInt16,
  kInt32,
  kUInt32,
  kFloat32,
  kFloat64,
};

std::size_t scalar_size(PlyScalar type);

struct PlyProperty {
  std::string name;
  PlyScalar type = PlyScalar::kFloat32;
  std::optional<PlyScalar> list_count;  // set for list properties
};

struct PlyElement {
  std::string name;
  std::size_t count = 0;
  std::vector<PlyProperty> properties;
};

struct PlyHeader {
  PlyFormat format = PlyFormat::kAscii;
  std::vector<PlyElement> elements;
};

/// Parses the header, leaving `in` at the first byte of the body. Throws
/// kMalformedHeader or kUnsupportedFormat.
PlyHeader read_ply_header(std::istream& in);

/// Throws the header errors above, kNonTriangleFace, kMalformedData for
/// truncated or unparsable bodies, and any build_mesh() error.
Mesh read_ply(std::istream& in);
Mesh read_ply(const std::filesystem::path& path);

void write_ply(const Mesh& mesh, std::ostream& out, PlyFormat format);
void write_ply(const Mesh& mesh, const std::filesystem::path& path,
               PlyFormat format);

}  // namespace holescan
