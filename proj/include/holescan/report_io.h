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
#include <string>
#include <vector>

#include "holescan/classify.h"
#include "holescan/mesh.h"

namespace holescan {

inline constexpr int kSchemaVersion = 1;
extern const char* const kToolVersion;

/// Serializable mirror of a HoleReport, field for field with the JSON
/// schema in docs/report.schema.json.
struct ReportDocument {
  struct Input {
    std::string path;
    std::string sha256;
    std::size_t vertex_count = 0;
    std::size_t triangle_count = 0;
    std::size_t half_edge_count = 0;
    std::size_t singular_vertex_count = 0;
    bool edge_manifold = true;

    friend bool operator==(const Input&, const Input&) = default;
  };
  struct BoundaryEntry {
    std::size_t id = 0;
    std::vector<VertexId> vertex_cycle;
    double length = 0;
    bool simple = true;
    bool has_singular_vertex = false;

    friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
  };
  struct ContinentEntry {
    std::size_t index = 0;
    std::size_t coastline_id = 0;
    std::size_t triangle_count = 0;
    std::vector<std::size_t> tide_hole_ids;
    std::vector<std::size_t> lake_hole_ids;

    friend bool operator==(const ContinentEntry&, const ContinentEntry&) = default;
  };

  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  Input input;
  std::vector<BoundaryEntry> boundaries;
  std::vector<ContinentEntry> continents;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_document(const HoleReport& report,
                             const std::string& input_path,
                             const std::string& input_sha256);

/// Two-space indented JSON, keys in schema order, trailing newline.
std::string to_json_string(const ReportDocument& doc);
/// Throws kMalformedData if the text is not a report document.
ReportDocument parse_report(const std::string& text);

/// Throws kIoFailure.
void write_report(const ReportDocument& doc, const std::filesystem::path& path);
ReportDocument read_report(const std::filesystem::path& path);

/**
 * Writes the boundaries as closed OBJ polylines: a "v" record for each
 * referenced vertex (1-based, in order of first reference) and one "l"
 * record per boundary, preceded by "# continent <i> <kind>". Throws
 * kIoFailure.
 */
void export_boundaries_obj(const HoleReport& report, const Mesh& mesh,
                           std::ostream& out);
void export_boundaries_obj(const HoleReport& report, const Mesh& mesh,
                           const std::filesystem::path& path);

/// Lowercase hex SHA-256 of the file contents. Throws kIoFailure.
std::string file_sha256(const std::filesystem::path& path);

}  // namespace holescan
