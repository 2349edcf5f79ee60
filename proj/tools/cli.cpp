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

#include "cli.h"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "holescan/classify.h"
#include "holescan/error.h"
#include "holescan/mesh.h"
#include "holescan/meshgen.h"
#include "holescan/ply.h"
#include "holescan/report_io.h"

namespace holescan::cli {

namespace {

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
  auto logger = std::make_shared<spdlog::logger>("holescan", sink);
  logger->set_pattern("holescan: %l: %v");

  spdlog::level::level_enum level = spdlog::level::info;
  if (const char* env = std::getenv("HOLESCAN_LOG")) {
    const std::string name = env;
    if (name == "error") {
      level = spdlog::level::err;
    } else if (name == "debug") {
      level = spdlog::level::debug;
    } else if (name != "info") {
      logger->warn("ignoring HOLESCAN_LOG='{}' (expected error, info or debug)", name);
    }
  }
  logger->set_level(level);
  logger->flush_on(spdlog::level::trace);
  return logger;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotEdgeManifold:
      return kNotEdgeManifold;
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kOrphanBoundary:
    case ErrorCode::kInvalidSplit:
    case ErrorCode::kNotHalfEdge:
    case ErrorCode::kEdgeNotInTriangle:
      return kInternalError;
    default:
      return kInputError;
  }
}

int check(const std::string& input, std::ostream& out, spdlog::logger& log) {
  const Mesh mesh = read_ply(input);
  log.info("read {} vertices, {} triangles from {}", mesh.vertex_count(),
           mesh.triangle_count(), input);
  const bool manifold = is_edge_manifold(mesh);
  out << "edge_manifold: " << (manifold ? "true" : "false") << "\n"
      << "singular_vertices: " << singular_vertices(mesh).size() << "\n";
  return manifold ? kOk : kNotEdgeManifold;
}

struct DetectOptions {
  std::string input;
  std::string report;
  std::string obj;
  bool no_classify = false;
};

int detect(const DetectOptions& opts, spdlog::logger& log) {
  const Mesh mesh = read_ply(opts.input);
  log.info("read {} vertices, {} triangles from {}", mesh.vertex_count(),
           mesh.triangle_count(), opts.input);
  if (!is_edge_manifold(mesh)) {
    log.error("{} is not edge-manifold", opts.input);
    return kNotEdgeManifold;
  }

  const HoleReport report = detect_holes(mesh, !opts.no_classify);
  log.info("{} half-edges, {} singular vertices, {} simple boundaries",
           report.stats.half_edge_count, report.stats.singular_vertex_count,
           report.boundaries.size());
  if (report.classified) log.info("{} continents", report.continents.size());

  write_report(make_document(report, opts.input, file_sha256(opts.input)),
               opts.report);
  log.debug("wrote {}", opts.report);
  if (!opts.obj.empty()) {
    export_boundaries_obj(report, mesh, opts.obj);
    log.debug("wrote {}", opts.obj);
  }
  return kOk;
}

int generate_mesh(const std::string& spec_text, const std::string& output,
                  bool binary, spdlog::logger& log) {
  const GenSpec spec = parse_gen_spec(spec_text);
  const Mesh mesh = generate(spec);
  write_ply(mesh, output,
            binary ? PlyFormat::kBinaryLittleEndian : PlyFormat::kAscii);
  log.info("{}: {} vertices, {} triangles -> {}", to_string(spec),
           mesh.vertex_count(), mesh.triangle_count(), output);
  return kOk;
}

int stats(const std::string& input, std::ostream& out) {
  const ReportDocument doc = read_report(input);
  const auto singular = std::count_if(
      doc.boundaries.begin(), doc.boundaries.end(),
      [](const ReportDocument::BoundaryEntry& b) { return b.has_singular_vertex; });
  const double percent =
      doc.boundaries.empty() ? 0.0 : 100.0 * double(singular) / double(doc.boundaries.size());
  char line[64];
  std::snprintf(line, sizeof(line), "%.2f", percent);
  out << "boundaries: " << doc.boundaries.size() << "\n"
      << "with_singular_vertex: " << singular << "\n"
      << "percent_with_singular_vertex: " << line << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  auto log = make_logger(err);

  CLI::App app{"Detect and classify boundary loops of edge-manifold triangle meshes",
               "holescan"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string check_input;
  auto* check_cmd = app.add_subcommand("check", "Report edge-manifoldness and singular vertices");
  check_cmd->add_option("input", check_input, "PLY mesh")->required()->check(CLI::ExistingFile);

  DetectOptions detect_opts;
  auto* detect_cmd = app.add_subcommand("detect", "Trace, decompose and classify boundaries");
  detect_cmd->add_option("input", detect_opts.input, "PLY mesh")
      ->required()
      ->check(CLI::ExistingFile);
  detect_cmd->add_option("--out", detect_opts.report, "JSON report path")->required();
  detect_cmd->add_flag("--no-classify", detect_opts.no_classify,
                       "Skip coastline/tide/lake classification");
  detect_cmd->add_option("--export-obj", detect_opts.obj, "Write boundaries as OBJ polylines");

  std::string gen_spec;
  std::string gen_out;
  bool gen_binary = false;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic fixture mesh as PLY");
  gen_cmd->add_option("spec", gen_spec, "Generator spec, e.g. \"grid(4,4)\"")->required();
  gen_cmd->add_option("--out", gen_out, "PLY output path")->required();
  gen_cmd->add_flag("--binary", gen_binary, "Write binary_little_endian instead of ascii");

  std::string stats_input;
  auto* stats_cmd = app.add_subcommand("stats", "Summarize a JSON report");
  stats_cmd->add_option("report", stats_input, "JSON report")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check_cmd) return check(check_input, out, *log);
    if (*detect_cmd) return detect(detect_opts, *log);
    if (*gen_cmd) return generate_mesh(gen_spec, gen_out, gen_binary, *log);
    if (*stats_cmd) return stats(stats_input, out);
  } catch (const Error& e) {
    log->error("{}: {}", to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    return kInternalError;
  }
  return kInputError;
}

}  // namespace holescan::cli
