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

#include "holescan/report_io.h"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <iterator>
#include <memory>
#include <ostream>

#include <json.hpp>

#include "holescan/error.h"

#ifndef HOLESCAN_VERSION
#define HOLESCAN_VERSION "0.0.0"
#endif

namespace holescan {

const char* const kToolVersion = HOLESCAN_VERSION;

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const ReportDocument& doc) {
  Json input = {
      {"path", doc.input.path},
      {"sha256", doc.input.sha256},
      {"vertex_count", doc.input.vertex_count},
      {"triangle_count", doc.input.triangle_count},
      {"half_edge_count", doc.input.half_edge_count},
      {"singular_vertex_count", doc.input.singular_vertex_count},
      {"edge_manifold", doc.input.edge_manifold},
  };
  Json boundaries = Json::array();
  for (const auto& b : doc.boundaries) {
    boundaries.push_back({
        {"id", b.id},
        {"vertex_cycle", b.vertex_cycle},
        {"length", b.length},
        {"simple", b.simple},
        {"has_singular_vertex", b.has_singular_vertex},
    });
  }
  Json continents = Json::array();
  for (const auto& c : doc.continents) {
    continents.push_back({
        {"index", c.index},
        {"coastline_id", c.coastline_id},
        {"triangle_count", c.triangle_count},
        {"tide_hole_ids", c.tide_hole_ids},
        {"lake_hole_ids", c.lake_hole_ids},
    });
  }
  return {
      {"schema_version", doc.schema_version},
      {"tool_version", doc.tool_version},
      {"input", std::move(input)},
      {"boundaries", std::move(boundaries)},
      {"continents", std::move(continents)},
  };
}

ReportDocument from_json(const Json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kSchemaVersion) {
    throw Error(ErrorCode::kMalformedData,
                "unsupported report schema_version " +
                    std::to_string(doc.schema_version));
  }
  doc.tool_version = j.at("tool_version").get<std::string>();

  const Json& in = j.at("input");
  doc.input.path = in.at("path").get<std::string>();
  doc.input.sha256 = in.at("sha256").get<std::string>();
  doc.input.vertex_count = in.at("vertex_count").get<std::size_t>();
  doc.input.triangle_count = in.at("triangle_count").get<std::size_t>();
  doc.input.half_edge_count = in.at("half_edge_count").get<std::size_t>();
  doc.input.singular_vertex_count = in.at("singular_vertex_count").get<std::size_t>();
  doc.input.edge_manifold = in.at("edge_manifold").get<bool>();

  for (const Json& b : j.at("boundaries")) {
    ReportDocument::BoundaryEntry entry;
    entry.id = b.at("id").get<std::size_t>();
    entry.vertex_cycle = b.at("vertex_cycle").get<std::vector<VertexId>>();
    entry.length = b.at("length").get<double>();
    entry.simple = b.at("simple").get<bool>();
    entry.has_singular_vertex = b.at("has_singular_vertex").get<bool>();
    doc.boundaries.push_back(std::move(entry));
  }
  for (const Json& c : j.at("continents")) {
    ReportDocument::ContinentEntry entry;
    entry.index = c.at("index").get<std::size_t>();
    entry.coastline_id = c.at("coastline_id").get<std::size_t>();
    entry.triangle_count = c.at("triangle_count").get<std::size_t>();
    entry.tide_hole_ids = c.at("tide_hole_ids").get<std::vector<std::size_t>>();
    entry.lake_hole_ids = c.at("lake_hole_ids").get<std::vector<std::size_t>>();
    doc.continents.push_back(std::move(entry));
  }
  return doc;
}

void put_number(std::ostream& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.write(buf, ptr - buf);
}

}  // namespace

ReportDocument make_document(const HoleReport& report,
                             const std::string& input_path,
                             const std::string& input_sha256) {
  ReportDocument doc;
  doc.input.path = input_path;
  doc.input.sha256 = input_sha256;
  doc.input.vertex_count = report.stats.vertex_count;
  doc.input.triangle_count = report.stats.triangle_count;
  doc.input.half_edge_count = report.stats.half_edge_count;
  doc.input.singular_vertex_count = report.stats.singular_vertex_count;
  doc.input.edge_manifold = report.stats.edge_manifold;

  for (std::size_t id = 0; id < report.boundaries.size(); ++id) {
    const BoundaryRecord& record = report.boundaries[id];
    doc.boundaries.push_back({id, record.boundary.vertex_cycle(), record.length,
                              record.boundary.is_simple(),
                              record.has_singular_vertex});
  }
  for (const ContinentReport& c : report.continents) {
    doc.continents.push_back({c.index, c.coastline, c.triangles.size(),
                              c.tide_holes, c.lake_holes});
  }
  return doc;
}

std::string to_json_string(const ReportDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text) {
  try {
    return from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedData,
                std::string("not a hole report: ") + e.what());
  }
}

void write_report(const ReportDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot create '" + path.string() + "'");
  }
  out << to_json_string(doc);
  out.close();
  if (!out) throw Error(ErrorCode::kIoFailure, "failed writing '" + path.string() + "'");
}

ReportDocument read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open '" + path.string() + "'");
  std::string text{std::istreambuf_iterator<char>(in), {}};
  return parse_report(text);
}

void export_boundaries_obj(const HoleReport& report, const Mesh& mesh,
                           std::ostream& out) {
  out << "# holescan boundary export\n"
      << "# boundaries: " << report.boundaries.size() << "\n";

  std::vector<std::size_t> obj_index(mesh.vertex_count(), 0);
  std::size_t next = 1;
  for (const BoundaryRecord& record : report.boundaries) {
    for (const DirectedEdge& h : record.boundary.halfedges) {
      if (obj_index[h.from] != 0) continue;
      obj_index[h.from] = next++;
      const Point3& p = mesh.position(h.from);
      out << "v ";
      put_number(out, p.x);
      out << ' ';
      put_number(out, p.y);
      out << ' ';
      put_number(out, p.z);
      out << '\n';
    }
  }

  const std::vector<HoleReport::Label> labels = report.labels();
  for (std::size_t id = 0; id < report.boundaries.size(); ++id) {
    if (labels[id].kind) {
      out << "# continent " << labels[id].continent << ' '
          << to_string(*labels[id].kind) << '\n';
    } else {
      out << "# boundary " << id << " unclassified\n";
    }
    const Boundary& b = report.boundaries[id].boundary;
    out << 'l';
    for (const DirectedEdge& h : b.halfedges) out << ' ' << obj_index[h.from];
    if (!b.halfedges.empty()) out << ' ' << obj_index[b.halfedges.front().from];
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoFailure, "failed writing OBJ");
}

void export_boundaries_obj(const HoleReport& report, const Mesh& mesh,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot create '" + path.string() + "'");
  }
  export_boundaries_obj(report, mesh, out);
  out.close();
  if (!out) throw Error(ErrorCode::kIoFailure, "failed writing '" + path.string() + "'");
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open '" + path.string() + "'");

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIoFailure, "SHA-256 unavailable");
  }
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, in.gcount());
  }
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "failed reading '" + path.string() + "'");

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &length);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

}  // namespace holescan
