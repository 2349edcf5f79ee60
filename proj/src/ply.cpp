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

#include "holescan/ply.h"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "holescan/error.h"

namespace holescan {

static_assert(std::endian::native == std::endian::little,
              "binary PLY I/O assumes a little-endian host");

namespace {

[[noreturn]] void malformed_header(const std::string& what) {
  throw Error(ErrorCode::kMalformedHeader, "PLY header: " + what);
}

[[noreturn]] void malformed_data(const std::string& what) {
  throw Error(ErrorCode::kMalformedData, "PLY body: " + what);
}

std::optional<PlyScalar> parse_scalar(const std::string& name) {
  if (name == "char" || name == "int8") return PlyScalar::kInt8;
  if (name == "uchar" || name == "uint8") return PlyScalar::kUInt8;
  if (name == "short" || name == "int16") return PlyScalar::kInt16;
  if (name == "ushort" || name == "uint16") return PlyScalar::kUInt16;
  if (name == "int" || name == "int32") return PlyScalar::kInt32;
  if (name == "uint" || name == "uint32") return PlyScalar::kUInt32;
  if (name == "float" || name == "float32") return PlyScalar::kFloat32;
  if (name == "double" || name == "float64") return PlyScalar::kFloat64;
  return std::nullopt;
}

bool is_float(PlyScalar t) {
  return t == PlyScalar::kFloat32 || t == PlyScalar::kFloat64;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream words(line);
  std::vector<std::string> out;
  for (std::string w; words >> w;) out.push_back(w);
  return out;
}

/// Pulls typed values off the body in either encoding.
class BodyReader {
 public:
  BodyReader(std::istream& in, PlyFormat format) : in_(in), format_(format) {}

  double value(PlyScalar type) {
    return format_ == PlyFormat::kAscii ? ascii_value(type) : binary_value(type);
  }

 private:
  double ascii_value(PlyScalar type) {
    std::string token;
    if (!(in_ >> token)) malformed_data("unexpected end of file");
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (is_float(type)) {
      double v = 0;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) malformed_data("bad number '" + token + "'");
      return v;
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) malformed_data("bad integer '" + token + "'");
    return static_cast<double>(v);
  }

  template <typename T>
  T read_raw() {
    T v;
    char bytes[sizeof(T)];
    if (!in_.read(bytes, sizeof(T))) malformed_data("unexpected end of file");
    std::memcpy(&v, bytes, sizeof(T));
    return v;
  }

  double binary_value(PlyScalar type) {
    switch (type) {
      case PlyScalar::kInt8:
        return read_raw<std::int8_t>();
      case PlyScalar::kUInt8:
        return read_raw<std::uint8_t>();
      case PlyScalar::kInt16:
        return read_raw<std::int16_t>();
      case PlyScalar::kUInt16:
        return read_raw<std::uint16_t>();
      case PlyScalar::kInt32:
        return read_raw<std::int32_t>();
      case PlyScalar::kUInt32:
        return read_raw<std::uint32_t>();
      case PlyScalar::kFloat32:
        return read_raw<float>();
      case PlyScalar::kFloat64:
        return read_raw<double>();
    }
    malformed_data("unknown scalar type");
  }

  std::istream& in_;
  PlyFormat format_;
};

const PlyElement* find_element(const PlyHeader& header, const std::string& name) {
  for (const PlyElement& e : header.elements) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

void validate(const PlyHeader& header) {
  const PlyElement* vertex = find_element(header, "vertex");
  if (vertex == nullptr) malformed_header("no vertex element");
  for (const char* axis : {"x", "y", "z"}) {
    bool found = false;
    for (const PlyProperty& p : vertex->properties) {
      if (p.name != axis) continue;
      if (p.list_count || !is_float(p.type)) {
        throw Error(ErrorCode::kUnsupportedFormat,
                    std::string("vertex coordinate '") + axis +
                        "' must be float or double");
      }
      found = true;
    }
    if (!found) malformed_header(std::string("vertex element lacks '") + axis + "'");
  }

  const PlyElement* face = find_element(header, "face");
  if (face == nullptr) malformed_header("no face element");
  bool found = false;
  for (const PlyProperty& p : face->properties) {
    if (p.name != "vertex_indices" && p.name != "vertex_index") continue;
    if (!p.list_count) malformed_header("face '" + p.name + "' is not a list");
    const PlyScalar count = *p.list_count;
    if (count != PlyScalar::kUInt8 && count != PlyScalar::kInt32 &&
        count != PlyScalar::kUInt32) {
      throw Error(ErrorCode::kUnsupportedFormat,
                  "face list length must be uchar, int or uint");
    }
    if (p.type != PlyScalar::kInt32 && p.type != PlyScalar::kUInt32) {
      throw Error(ErrorCode::kUnsupportedFormat,
                  "face vertex indices must be int or uint");
    }
    found = true;
  }
  if (!found) malformed_header("face element lacks a vertex index list");
}

VertexId to_vertex_id(double raw, std::size_t face) {
  if (raw < 0 || raw > static_cast<double>(UINT32_MAX - 1)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "face " + std::to_string(face) + " has vertex index " +
                    std::to_string(static_cast<long long>(raw)));
  }
  return static_cast<VertexId>(raw);
}

}  // namespace

std::size_t scalar_size(PlyScalar type) {
  switch (type) {
    case PlyScalar::kInt8:
    case PlyScalar::kUInt8:
      return 1;
    case PlyScalar::kInt16:
    case PlyScalar::kUInt16:
      return 2;
    case PlyScalar::kInt32:
    case PlyScalar::kUInt32:
    case PlyScalar::kFloat32:
      return 4;
    case PlyScalar::kFloat64:
      return 8;
  }
  return 0;
}

PlyHeader read_ply_header(std::istream& in) {
  auto next_line = [&in](std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  std::string line;
  if (!next_line(line) || line != "ply") malformed_header("missing 'ply' magic");

  PlyHeader header;
  bool have_format = false;
  while (true) {
    if (!next_line(line)) malformed_header("missing end_header");
    const std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    const std::string& keyword = words[0];

    if (keyword == "end_header") break;
    if (keyword == "comment" || keyword == "obj_info") continue;

    if (keyword == "format") {
      if (words.size() != 3) malformed_header("bad format line '" + line + "'");
      if (words[2] != "1.0") {
        throw Error(ErrorCode::kUnsupportedFormat, "PLY version " + words[2]);
      }
      if (words[1] == "ascii") {
        header.format = PlyFormat::kAscii;
      } else if (words[1] == "binary_little_endian") {
        header.format = PlyFormat::kBinaryLittleEndian;
      } else if (words[1] == "binary_big_endian") {
        throw Error(ErrorCode::kUnsupportedFormat, "big-endian PLY is not supported");
      } else {
        malformed_header("unknown format '" + words[1] + "'");
      }
      have_format = true;
    } else if (keyword == "element") {
      if (words.size() != 3) malformed_header("bad element line '" + line + "'");
      PlyElement element;
      element.name = words[1];
      std::size_t count = 0;
      auto [ptr, ec] = std::from_chars(words[2].data(),
                                       words[2].data() + words[2].size(), count);
      if (ec != std::errc() || ptr != words[2].data() + words[2].size()) {
        malformed_header("bad element count '" + words[2] + "'");
      }
      element.count = count;
      header.elements.push_back(std::move(element));
    } else if (keyword == "property") {
      if (header.elements.empty()) malformed_header("property before any element");
      PlyProperty property;
      if (words.size() == 5 && words[1] == "list") {
        auto count = parse_scalar(words[2]);
        auto item = parse_scalar(words[3]);
        if (!count || !item || is_float(*count)) {
          throw Error(ErrorCode::kUnsupportedFormat,
                      "unsupported list property '" + line + "'");
        }
        property.list_count = count;
        property.type = *item;
        property.name = words[4];
      } else if (words.size() == 3) {
        auto type = parse_scalar(words[1]);
        if (!type) {
          throw Error(ErrorCode::kUnsupportedFormat,
                      "unsupported property type '" + words[1] + "'");
        }
        property.type = *type;
        property.name = words[2];
      } else {
        malformed_header("bad property line '" + line + "'");
      }
      header.elements.back().properties.push_back(std::move(property));
    } else {
      malformed_header("unknown keyword '" + keyword + "'");
    }
  }
  if (!have_format) malformed_header("missing format line");
  validate(header);
  return header;
}

Mesh read_ply(std::istream& in) {
  const PlyHeader header = read_ply_header(in);
  BodyReader body(in, header.format);

  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;
  for (const PlyElement& element : header.elements) {
    const bool is_vertex = element.name == "vertex";
    const bool is_face = element.name == "face";
    if (is_vertex) vertices.reserve(element.count);
    if (is_face) triangles.reserve(element.count);

    for (std::size_t item = 0; item < element.count; ++item) {
      Point3 p;
      for (const PlyProperty& prop : element.properties) {
        if (prop.list_count) {
          const double length = body.value(*prop.list_count);
          if (length < 0) malformed_data("negative list length");
          const bool indices = is_face && (prop.name == "vertex_indices" ||
                                           prop.name == "vertex_index");
          if (indices && length != 3) {
            throw Error(ErrorCode::kNonTriangleFace,
                        "face " + std::to_string(item) + " has " +
                            std::to_string(static_cast<long long>(length)) +
                            " vertices");
          }
          std::array<VertexId, 3> corner{};
          for (std::size_t k = 0; k < static_cast<std::size_t>(length); ++k) {
            const double raw = body.value(prop.type);
            if (indices) corner[k] = to_vertex_id(raw, item);
          }
          if (indices) triangles.push_back({corner[0], corner[1], corner[2]});
          continue;
        }
        const double v = body.value(prop.type);
        if (is_vertex) {
          if (prop.name == "x") p.x = v;
          if (prop.name == "y") p.y = v;
          if (prop.name == "z") p.z = v;
        }
      }
      if (is_vertex) vertices.push_back(p);
    }
  }
  return build_mesh(std::move(vertices), std::move(triangles));
}

Mesh read_ply(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open '" + path.string() + "'");
  }
  return read_ply(in);
}

void write_ply(const Mesh& mesh, std::ostream& out, PlyFormat format) {
  out << "ply\n"
      << (format == PlyFormat::kAscii ? "format ascii 1.0\n"
                                      : "format binary_little_endian 1.0\n")
      << "comment generated by holescan\n"
      << "element vertex " << mesh.vertex_count() << "\n"
      << "property double x\nproperty double y\nproperty double z\n"
      << "element face " << mesh.triangle_count() << "\n"
      << "property list uchar int vertex_indices\n"
      << "end_header\n";

  if (format == PlyFormat::kAscii) {
    char buf[64];
    auto put = [&](double v) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
      out.write(buf, ptr - buf);
    };
    for (const Point3& p : mesh.vertices()) {
      put(p.x);
      out << ' ';
      put(p.y);
      out << ' ';
      put(p.z);
      out << '\n';
    }
    for (const Triangle& t : mesh.triangles()) {
      out << "3 " << t.a << ' ' << t.b << ' ' << t.c << '\n';
    }
  } else {
    auto put = [&out](const auto& v) {
      out.write(reinterpret_cast<const char*>(&v), sizeof(v));
    };
    for (const Point3& p : mesh.vertices()) {
      put(p.x);
      put(p.y);
      put(p.z);
    }
    for (const Triangle& t : mesh.triangles()) {
      put(std::uint8_t{3});
      for (VertexId v : t.vertices()) put(static_cast<std::int32_t>(v));
    }
  }
  if (!out) throw Error(ErrorCode::kIoFailure, "failed writing PLY");
}

void write_ply(const Mesh& mesh, const std::filesystem::path& path,
               PlyFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot create '" + path.string() + "'");
  }
  write_ply(mesh, out, format);
  out.close();
  if (!out) throw Error(ErrorCode::kIoFailure, "failed writing '" + path.string() + "'");
}

}  // namespace holescan
