// Copyright 2026 The icmesh Authors.
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

#include "cli.hpp"

#include <spawn.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "icmesh/box_surface.hpp"
#include "icmesh/config.hpp"
#include "icmesh/error.hpp"
#include "icmesh/membrane_points.hpp"
#include "icmesh/mesh_io.hpp"
#include "icmesh/plc.hpp"
#include "icmesh/region_extraction.hpp"
#include "icmesh/synth.hpp"

extern char** environ;

namespace icmesh::cli {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::optional<std::string> config;
  std::optional<std::string> protein;
  std::optional<double> z1, z2, h_m, h_s, tau;
  std::optional<std::string> eta;
  std::optional<std::string> out;
  std::optional<std::string> format;
  bool verbose = false;
};

void add_common(CLI::App& cmd, CommonFlags& f) {
  cmd.add_option("--config", f.config, "Flat JSON pipeline config");
  cmd.add_option("--protein", f.protein, "Protein surface (.off or .ply)");
  cmd.add_option("--z1", f.z1, "Membrane slab bottom");
  cmd.add_option("--z2", f.z2, "Membrane slab top");
  cmd.add_option("--hm", f.h_m, "Mesh size in the membrane band");
  cmd.add_option("--hs", f.h_s, "Mesh size elsewhere on the box");
  cmd.add_option("--tau", f.tau, "Rectangle growth (defaults to h_m)");
  cmd.add_option("--eta", f.eta, "Box margins, e.g. 20,20,20");
  cmd.add_option("--out", f.out, "Output directory");
  cmd.add_option("--format", f.format, "Surface output format: off|ply");
  cmd.add_flag("--verbose", f.verbose, "Progress on stderr");
}

std::array<double, 3> parse_eta(const std::string& text) {
  std::array<double, 3> eta{};
  std::stringstream ss(text);
  std::string item;
  int count = 0;
  while (std::getline(ss, item, ',')) {
    if (count == 3) throw UsageError("--eta takes three values");
    try {
      std::size_t used = 0;
      eta[count] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--eta: '" + item + "' is not a number");
    }
    ++count;
  }
  if (count != 3) throw UsageError("--eta takes three values");
  return eta;
}

PipelineConfig resolve(const CommonFlags& f) {
  PipelineConfig config = f.config ? load_config(*f.config) : PipelineConfig{};
  if (f.protein) config.protein_path = *f.protein;
  if (f.z1) config.z1 = *f.z1;
  if (f.z2) config.z2 = *f.z2;
  if (f.h_m) config.h_m = *f.h_m;
  if (f.h_s) config.h_s = *f.h_s;
  if (f.tau) config.tau = *f.tau;
  if (f.eta) config.eta = parse_eta(*f.eta);
  if (f.out) config.output_dir = *f.out;
  if (f.format) {
    const auto format = parse_surface_format(*f.format);
    if (!format) throw UsageError("--format must be off or ply");
    config.format = *format;
  }
  validate(config);
  return config;
}

TriSurfaceMesh load_protein(const PipelineConfig& config) {
  if (config.protein_path.empty()) {
    throw UsageError("no protein surface: pass --protein or set protein_path");
  }
  const fs::path path = config.protein_path;
  const SurfaceFormat format =
      surface_format_from_path(path).value_or(config.format);
  TriSurfaceMesh protein = read_surface(path, format);
  if (!protein.closed()) {
    throw Error(ErrorCode::kNotWatertight,
                path.string() + " is not a closed surface");
  }
  return protein;
}

fs::path output_path(const PipelineConfig& config, const std::string& name) {
  fs::create_directories(config.output_dir);
  return fs::path(config.output_dir) / name;
}

std::string extension(SurfaceFormat format) {
  return format == SurfaceFormat::kOff ? ".off" : ".ply";
}

struct Workspace {
  TriSurfaceMesh protein;
  BoxDomain box;
  BoxSurface box_surface;
  MembranePointSet points;
};

Workspace prepare(const PipelineConfig& config, bool with_points) {
  Workspace w;
  w.protein = load_protein(config);
  w.box = build_box_domain(w.protein.aabb(), config.eta);
  w.box_surface = assemble_box_surface(w.box, config.slab(), config.sizes());
  if (with_points) {
    w.points = select_membrane_points(w.protein, w.box, config.slab(),
                                      config.h_m);
  }
  return w;
}

void write_points(const MembranePointSet& points, const PipelineConfig& config,
                  const fs::path& base) {
  const std::vector<Point3> all = points.all();
  {
    std::ofstream node(base.string() + ".node");
    if (!node) throw Error(ErrorCode::kIoError, "cannot write " + base.string());
    node << all.size() << " 3 0 0\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      node << i + 1 << ' ' << format_real(all[i].x) << ' '
           << format_real(all[i].y) << ' ' << format_real(all[i].z) << '\n';
    }
  }
  nlohmann::ordered_json doc;
  doc["z1"] = config.z1;
  doc["z2"] = config.z2;
  doc["h_m"] = config.h_m;
  doc["s_b"] = points.s_b.size();
  doc["s_t"] = points.s_t.size();
  doc["total"] = all.size();
  std::ofstream json(base.string() + ".json");
  if (!json) throw Error(ErrorCode::kIoError, "cannot write " + base.string());
  json << doc.dump(2) << '\n';
}

ExtractionResult run_extraction(const PipelineConfig& config,
                                const fs::path& mesh_base) {
  const TriSurfaceMesh protein = load_protein(config);
  const TetMesh mesh = read_tet_mesh(mesh_base.string() + ".node",
                                     mesh_base.string() + ".ele");
  ExtractionOptions options;
  options.h_m = config.h_m;
  options.tau = config.tau;
  return extract_regions(mesh, protein, config.slab(), options);
}

void write_extraction(const ExtractionResult& result,
                      const PipelineConfig& config, std::ostream& out) {
  write_tet_mesh(result.mesh, output_path(config, "extracted"));
  write_vtk(result.mesh, output_path(config, "extracted.vtk"));
  write_report(result.report, output_path(config, "report.json"));
  for (const std::string& w : result.report.warnings) {
    out << "warning: " << w << '\n';
  }
  out << "solvent " << result.report.solvent.tets << " tets, membrane "
      << result.report.membrane.tets << " tets, protein "
      << result.report.protein.tets << " tets\n"
      << "wrote " << output_path(config, "extracted").string()
      << ".{node,ele}, extracted.vtk, report.json\n";
}

int run_tetgen(const std::string& binary, const std::string& switches,
               const fs::path& poly) {
  std::vector<std::string> args = {binary, switches, poly.string()};
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  pid_t pid = 0;
  if (posix_spawnp(&pid, binary.c_str(), nullptr, nullptr, argv.data(),
                   environ) != 0) {
    throw Error(ErrorCode::kIoError, "cannot run tetrahedralizer " + binary);
  }
  int status = 0;
  if (waitpid(pid, &status, 0) < 0) {
    throw Error(ErrorCode::kIoError, "lost tetrahedralizer process");
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Interface-conforming membrane channel meshes", "icmesh"};
  app.require_subcommand(1);

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic channel surface");
  synth::SynthSpec spec;
  std::string kind = "tube";
  std::string synth_output;
  std::optional<std::string> tets_base;
  double fixture_h = 1.0;
  bool fill_pore = false;
  CommonFlags synth_flags;
  synth_cmd->add_option("--kind", kind, "tube | hourglass | two_pore")
      ->capture_default_str();
  synth_cmd->add_option("--r-inner", spec.r_inner)->capture_default_str();
  synth_cmd->add_option("--r-outer", spec.r_outer)->capture_default_str();
  synth_cmd->add_option("--z-min", spec.z_min)->capture_default_str();
  synth_cmd->add_option("--z-max", spec.z_max)->capture_default_str();
  synth_cmd->add_option("--n-theta", spec.n_theta)->capture_default_str();
  synth_cmd->add_option("--slope", spec.slope)->capture_default_str();
  synth_cmd->add_option("--n-z", spec.n_z)->capture_default_str();
  synth_cmd->add_option("--offset", spec.center_offset)->capture_default_str();
  synth_cmd->add_option("-o,--output", synth_output, "Surface file")
      ->required();
  synth_cmd->add_option("--tets", tets_base,
                        "Also write a labelled fixture mesh <base>.node/.ele");
  synth_cmd->add_option("--edge", fixture_h, "Fixture edge length")
      ->capture_default_str();
  synth_cmd->add_flag("--fill-pore", fill_pore, "Fixture: pore is protein");
  add_common(*synth_cmd, synth_flags);

  auto* box_cmd = app.add_subcommand("box", "Write the box boundary surface");
  CommonFlags box_flags;
  add_common(*box_cmd, box_flags);

  auto* points_cmd =
      app.add_subcommand("points", "Write the membrane points S");
  CommonFlags points_flags;
  add_common(*points_cmd, points_flags);

  auto* plc_cmd = app.add_subcommand("plc", "Assemble the TetGen .poly input");
  CommonFlags plc_flags;
  add_common(*plc_cmd, plc_flags);

  auto* extract_cmd = app.add_subcommand(
      "extract", "Relabel a tetrahedral mesh into solvent and membrane");
  CommonFlags extract_flags;
  std::string extract_mesh;
  add_common(*extract_cmd, extract_flags);
  extract_cmd->add_option("--mesh", extract_mesh, "Base path of .node/.ele")
      ->required();

  auto* stats_cmd =
      app.add_subcommand("stats", "Print the extraction report only");
  CommonFlags stats_flags;
  std::string stats_mesh;
  add_common(*stats_cmd, stats_flags);
  stats_cmd->add_option("--mesh", stats_mesh, "Base path of .node/.ele")
      ->required();

  auto* pipeline_cmd = app.add_subcommand(
      "pipeline", "Box, points and PLC; tetrahedralize and extract when "
                  "TETGEN_BIN is set");
  CommonFlags pipeline_flags;
  add_common(*pipeline_cmd, pipeline_flags);

  std::vector<const char*> args(argv, argv + argc);
  try {
    app.parse(argc, args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*synth_cmd) {
      const auto parsed = synth::parse_kind(kind);
      if (!parsed) throw UsageError("--kind must be tube, hourglass or two_pore");
      spec.kind = *parsed;
      const TriSurfaceMesh surface = synth::make_surface(spec);
      const fs::path path = synth_output;
      SurfaceFormat format = surface_format_from_path(path).value_or(
          SurfaceFormat::kOff);
      if (synth_flags.format) {
        const auto f = parse_surface_format(*synth_flags.format);
        if (!f) throw UsageError("--format must be off or ply");
        format = *f;
      }
      write_surface(surface, path, format);
      out << "wrote " << path.string() << " (" << surface.vertex_count()
          << " vertices, " << surface.triangle_count() << " triangles)\n";
      if (tets_base) {
        CommonFlags f = synth_flags;
        f.format.reset();
        const PipelineConfig config = resolve(f);
        const BoxDomain box = build_box_domain(surface.aabb(), config.eta);
        synth::FixtureMeshOptions options;
        options.h = fixture_h;
        options.fill_pore = fill_pore;
        const TetMesh mesh =
            synth::make_fixture_tet_mesh(spec, box, config.slab(), options);
        write_tet_mesh(mesh, *tets_base);
        out << "wrote " << *tets_base << ".{node,ele} (" << mesh.tet_count()
            << " tets)\n";
      }
      return kExitOk;
    }

    if (*box_cmd) {
      const PipelineConfig config = resolve(box_flags);
      const Workspace w = prepare(config, false);
      const fs::path path = output_path(config, "box" + extension(config.format));
      write_surface(w.box_surface.surface, path, config.format);
      out << "wrote " << path.string() << " ("
          << w.box_surface.surface.vertex_count() << " vertices, "
          << w.box_surface.surface.triangle_count() << " triangles)\n";
      return kExitOk;
    }

    if (*points_cmd) {
      const PipelineConfig config = resolve(points_flags);
      const Workspace w = prepare(config, true);
      write_points(w.points, config, output_path(config, "points"));
      out << "selected " << w.points.s_b.size() << " points at z1 and "
          << w.points.s_t.size() << " at z2\n";
      return kExitOk;
    }

    const auto write_plc_files = [&](const PipelineConfig& config,
                                     bool verbose) {
      const Workspace w = prepare(config, true);
      if (verbose) {
        err << "box: " << w.box_surface.surface.triangle_count()
            << " triangles; membrane points: " << w.points.size() << '\n';
      }
      const PlcDocument doc = assemble_plc(w.protein, w.box_surface.surface,
                                           w.box, w.points.all());
      const fs::path path = output_path(config, "model.poly");
      write_plc(doc, path);
      out << "wrote " << path.string() << " (" << doc.vertices.size()
          << " nodes, " << doc.facets.size() << " facets)\n";
      return path;
    };

    if (*plc_cmd) {
      const PipelineConfig config = resolve(plc_flags);
      write_plc_files(config, plc_flags.verbose);
      out << "tetgen switches: " << tetgen_switches(plc_flags.verbose) << '\n';
      return kExitOk;
    }

    if (*extract_cmd) {
      const PipelineConfig config = resolve(extract_flags);
      const ExtractionResult result = run_extraction(config, extract_mesh);
      write_extraction(result, config, out);
      return kExitOk;
    }

    if (*stats_cmd) {
      const PipelineConfig config = resolve(stats_flags);
      const ExtractionResult result = run_extraction(config, stats_mesh);
      out << report_to_json(result.report) << '\n';
      return kExitOk;
    }

    if (*pipeline_cmd) {
      const PipelineConfig config = resolve(pipeline_flags);
      const bool verbose = pipeline_flags.verbose;
      const fs::path poly = write_plc_files(config, verbose);
      const std::string switches = tetgen_switches(verbose);
      const char* tetgen = std::getenv("TETGEN_BIN");
      if (tetgen == nullptr || *tetgen == '\0') {
        out << "TETGEN_BIN is not set; stopping after the PLC.\n"
            << "Run: tetgen " << switches << ' ' << poly.string() << '\n'
            << "then: icmesh extract --mesh "
            << (poly.parent_path() / "model.1").string()
            << " --protein " << config.protein_path << '\n'
            << "tetgen switches: " << switches << '\n';
        return kExitOk;
      }
      const int status = run_tetgen(tetgen, switches, poly);
      if (status != 0) {
        throw Error(ErrorCode::kIoError, std::string(tetgen) +
                                             " exited with status " +
                                             std::to_string(status));
      }
      const ExtractionResult result =
          run_extraction(config, poly.parent_path() / "model.1");
      write_extraction(result, config, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << error_name(ErrorCode::kIoError) << ": " << e.what()
        << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << error_name(ErrorCode::kInternalError) << ": "
        << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace icmesh::cli
