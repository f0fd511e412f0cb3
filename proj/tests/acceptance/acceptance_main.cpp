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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "icmesh/box_surface.hpp"
#include "icmesh/cross_section.hpp"
#include "icmesh/error.hpp"
#include "icmesh/inclusion.hpp"
#include "icmesh/membrane_points.hpp"
#include "icmesh/mesh_io.hpp"
#include "icmesh/plc.hpp"
#include "icmesh/region_extraction.hpp"
#include "oracles.hpp"

namespace {

using namespace icmesh;
using synth::Kind;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0,
                double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

constexpr std::array<double, 3> kDeskMargins = {10.0, 10.0, 10.0};

struct FixtureRun {
  Kind kind;
  double h;
  testing::ChannelFixture fixture;
  ExtractionResult result;
  double seconds = 0.0;
};

FixtureRun run_fixture(Kind kind, double h,
                       const std::array<double, 3>& margins) {
  FixtureRun run{kind, h, testing::make_channel(kind, h, margins), {}, 0.0};
  ExtractionOptions options;
  options.h_m = h;
  const auto start = Clock::now();
  run.result = extract_regions(run.fixture.mesh, run.fixture.surface,
                               run.fixture.slab, options);
  run.seconds = seconds_since(start);
  return run;
}

std::string name_of(const FixtureRun& r) {
  return std::string(synth::kind_name(r.kind)) + "@h=" + fmt("%.1f", r.h);
}

std::size_t count_label(const TetMesh& m, RegionLabel l) {
  return static_cast<std::size_t>(
      std::count(m.labels().begin(), m.labels().end(), l));
}

// Partition completeness and runtime.
Outcome check_partition(const std::vector<FixtureRun>& runs) {
  Outcome o{true, ""};
  double worst = 0.0;
  for (const FixtureRun& r : runs) {
    const TetMesh& before = r.fixture.mesh;
    const TetMesh& after = r.result.mesh;
    bool ok = after.tet_count() == before.tet_count();
    std::size_t labelled = 0;
    for (auto l : {RegionLabel::kProtein, RegionLabel::kSolvent,
                   RegionLabel::kMembrane}) {
      labelled += count_label(after, l);
    }
    ok = ok && labelled == after.tet_count();
    ok = ok && count_label(after, RegionLabel::kSolvent) +
                       count_label(after, RegionLabel::kMembrane) ==
                   count_label(before, RegionLabel::kSolvent);
    for (std::size_t t = 0; ok && t < after.tet_count(); ++t) {
      if ((before.label(t) == RegionLabel::kProtein) !=
          (after.label(t) == RegionLabel::kProtein)) {
        ok = false;
      }
    }
    ok = ok && r.seconds < 1.0;
    worst = std::max(worst, r.seconds);
    if (!ok) {
      o.pass = false;
      o.detail += " failed:" + name_of(r);
    }
  }
  o.detail = std::to_string(runs.size()) + " fixtures, slowest extraction " +
             fmt("%.3f s", worst) + o.detail;
  return o;
}

// Ray classification against the adjacency oracle, recomputed here rather
// than read from the report.
Outcome check_oracle(const std::vector<FixtureRun>& runs) {
  Outcome o{true, ""};
  std::size_t band = 0, mismatches = 0, reported = 0;
  for (const FixtureRun& r : runs) {
    const double tau = r.h;
    const BandRect rect =
        interception_rectangle(r.fixture.surface, r.fixture.slab, tau);
    const BandPartition p =
        band_partition(r.fixture.mesh, r.fixture.box, rect, r.fixture.slab);
    const BandBoundarySplit split =
        split_band_boundary(r.fixture.mesh, p, rect, true);
    const BandClassification ray =
        classify_band_tets(r.fixture.mesh, p, split.pore_surfaces);
    std::vector<Index> pore;
    for (const TetGroup& g : classify_by_adjacency(r.fixture.mesh, p, rect)) {
      if (g.kind == GroupKind::kPore) {
        pore.insert(pore.end(), g.tets.begin(), g.tets.end());
      }
    }
    std::sort(pore.begin(), pore.end());
    std::vector<Index> diff;
    std::set_symmetric_difference(pore.begin(), pore.end(), ray.s_s.begin(),
                                  ray.s_s.end(), std::back_inserter(diff));
    band += p.dms_idx.size();
    mismatches += diff.size();
    reported += r.result.report.classification_disagreements;
    if (!diff.empty() || r.result.report.classification_disagreements != 0) {
      o.pass = false;
      o.detail += " failed:" + name_of(r);
    }
  }
  o.detail = std::to_string(band) + " band tets over " +
             std::to_string(runs.size()) + " fixtures, " +
             std::to_string(mismatches) + " disagreements (" +
             std::to_string(reported) + " in reports)" + o.detail;
  return o;
}

// No membrane tet centroid inside any pore component surface.
Outcome check_false_tets(const std::vector<FixtureRun>& runs) {
  Outcome o{true, ""};
  std::size_t checked = 0, bad = 0;
  for (const FixtureRun& r : runs) {
    const BandRect rect =
        interception_rectangle(r.fixture.surface, r.fixture.slab, r.h);
    const BandPartition p =
        band_partition(r.fixture.mesh, r.fixture.box, rect, r.fixture.slab);
    const BandBoundarySplit split =
        split_band_boundary(r.fixture.mesh, p, rect, true);
    const TetMesh& m = r.result.mesh;
    for (const TriSurfaceMesh& pore : split.pore_surfaces) {
      const ClosedSurfaceTester tester(pore);
      const AABB box = pore.aabb();
      for (std::size_t t = 0; t < m.tet_count(); ++t) {
        if (m.label(t) != RegionLabel::kMembrane) continue;
        ++checked;
        const Point3 c = m.centroid(t);
        bool inside = tester.contains(c);
        // Second opinion near the pore, where it matters.
        if (box.contains(c)) {
          inside = inside || winding_number_inclusion(c, pore);
        }
        if (inside) ++bad;
      }
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(checked) + " membrane centroids checked, " +
             std::to_string(bad) + " inside a pore";
  return o;
}

// Tube volumes against the polygonal closed forms.
Outcome check_volumes() {
  Outcome o{true, ""};
  for (const auto& [h, tol] : {std::pair{1.0, 0.02}, std::pair{1.5, 0.05}}) {
    const FixtureRun r = run_fixture(Kind::kTube, h, kDefaultMargins);
    const double dz = r.fixture.slab.z2 - r.fixture.slab.z1;
    const BoxDomain& b = r.fixture.box;
    const double membrane =
        dz * (b.length_x() * b.length_y() - synth::polygon_area(64, 5.0));
    const double pore = synth::polygon_area(64, 2.0) * dz;
    const auto& rep = r.result.report;
    const double pore_got =
        rep.pore_volumes.size() == 1 ? rep.pore_volumes[0] : -1.0;
    const double em = std::abs(rep.membrane_volume - membrane) / membrane;
    const double ep = std::abs(pore_got - pore) / pore;
    if (!(em <= tol && ep <= tol)) o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += fmt("h=%.1f membrane err %.2e", h, em) +
                fmt(" pore err %.2e", ep);
  }
  return o;
}

// Two pores with the single-pore configuration.
Outcome check_two_pore() {
  const double h = 1.2;
  const FixtureRun tube = run_fixture(Kind::kTube, h, kDefaultMargins);
  const FixtureRun two = run_fixture(Kind::kTwoPore, h, kDefaultMargins);
  const auto& rep = two.result.report;
  Outcome o;
  o.pass = tube.result.report.pore_component_count == 1 &&
           rep.component_count == 3 && rep.pore_component_count == 2 &&
           rep.classification_disagreements == 0 && two.seconds <= 5.0;
  o.detail = std::to_string(rep.component_count) + " components, " +
             std::to_string(rep.pore_component_count) + " pores, " +
             std::to_string(two.fixture.mesh.tet_count()) + " tets in " +
             fmt("%.3f s", two.seconds);
  return o;
}

// Extraction speed at the required scale.
Outcome check_performance() {
  const FixtureRun r = run_fixture(Kind::kTube, 1.0, kDefaultMargins);
  const std::size_t solvent =
      count_label(r.fixture.mesh, RegionLabel::kSolvent);
  Outcome o;
  o.pass = solvent >= 180000 && r.seconds <= 5.0;
  o.detail = std::to_string(solvent) + " label-2 tets extracted in " +
             fmt("%.3f s", r.seconds);
  return o;
}

// Randomised box surfaces.
Outcome check_box_surfaces() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> len(10.0, 80.0), hm(0.6, 2.5),
      frac(0.0, 1.0), shift(-30.0, 30.0);
  int bad = 0;
  double worst_area = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const double cx = shift(rng), cy = shift(rng), cz = shift(rng);
    const double lx = len(rng), ly = len(rng), lz = len(rng) + 20.0;
    const double h_m = hm(rng);
    const double h_s = 2.0 * h_m;
    const BoxDomain box{cx - lx / 2, cx + lx / 2, cy - ly / 2,
                        cy + ly / 2, cz - lz / 2, cz + lz / 2};
    const double room = lz - 2.0 * h_s - 1e-6;
    const double thick = std::max(h_m, 0.5 * room * frac(rng));
    const double z1 = box.lz1 + h_s + (room - thick) * frac(rng);
    const MembraneSlab slab{z1, z1 + thick};
    const BoxSurface b = assemble_box_surface(box, slab, {h_m, h_s});
    const testing::EdgeCount ec = testing::edge_count(b.surface);
    bool ok = ec.edges > 0 && ec.incidence_two == ec.edges && ec.other == 0;
    ok = ok && testing::euler_by_map(b.surface) == 2;
    const auto& tags = b.surface.tags();
    for (std::size_t t = 0; ok && t < b.surface.triangle_count(); ++t) {
      if (tags[t] != static_cast<int>(BoxSurfaceTag::kLatM)) continue;
      for (const Point3& p : b.surface.corners(t)) {
        if (p.z < slab.z1 || p.z > slab.z2) ok = false;
      }
    }
    double area = 0.0;
    for (std::size_t t = 0; t < b.surface.triangle_count(); ++t) {
      const auto c = b.surface.corners(t);
      area += 0.5 * norm(cross(c[1] - c[0], c[2] - c[0]));
    }
    const double exact = 2.0 * (lx * ly + ly * lz + lx * lz);
    const double rel = std::abs(area - exact) / exact;
    worst_area = std::max(worst_area, rel);
    ok = ok && rel <= 1e-9;
    if (!ok) ++bad;
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = "100 draws, " + std::to_string(bad) +
             " invalid, worst area error " + fmt("%.1e", worst_area);
  return o;
}

// Selected membrane points stay clear of the protein and the pores.
Outcome check_membrane_points() {
  Outcome o{true, ""};
  std::size_t total = 0, bad = 0, pore_nodes = 0;
  for (const auto kind : {Kind::kTube, Kind::kHourglass, Kind::kTwoPore}) {
    const synth::SynthSpec spec = testing::channel_spec(kind);
    const TriSurfaceMesh s = synth::make_surface(spec);
    const BoxDomain box = build_box_domain(s.aabb());
    const MembraneSlab slab{-12.0, 12.0};
    const double h_m = 1.2;
    const MembranePointSet set = select_membrane_points(s, box, slab, h_m);
    const std::vector<Vec2> axes = synth::axes(spec);
    for (const Vec2& g : membrane_grid(box, h_m)) {
      for (const Vec2& a : axes) {
        if (std::hypot(g.x - a.x, g.y - a.y) < spec.r_inner) ++pore_nodes;
      }
    }
    for (double z : {slab.z1, slab.z2}) {
      const PlanarLoopSet loops = cross_section_loops(s, z);
      const auto& points = z == slab.z1 ? set.s_b : set.s_t;
      for (const Point3& p : points) {
        ++total;
        bool ok = !point_in_closed_surface(p, s);
        ok = ok && testing::brute_force_inside(p, s) != std::optional(true);
        const LoopQuery q = loop_containment_depth({p.x, p.y}, loops);
        ok = ok && q.depth == 0 && !q.on_boundary;
        for (const Vec2& a : axes) {
          if (std::hypot(p.x - a.x, p.y - a.y) <= spec.r_outer) ok = false;
        }
        if (!ok) ++bad;
      }
    }
  }
  o.pass = bad == 0 && total > 0 && pore_nodes > 0;
  o.detail = std::to_string(total) + " points, " + std::to_string(bad) +
             " unsafe; " + std::to_string(pore_nodes) +
             " grid nodes inside pores";
  return o;
}

// Ray-parity inclusion against the winding number.
Outcome check_inclusion(const std::filesystem::path& log_path) {
  std::vector<TriSurfaceMesh> surfaces;
  for (const auto kind : {Kind::kTube, Kind::kHourglass, Kind::kTwoPore}) {
    surfaces.push_back(synth::make_surface(testing::channel_spec(kind)));
  }
  std::vector<ClosedSurfaceTester> testers;
  for (const auto& s : surfaces) testers.emplace_back(s);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, surfaces.size() - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::ofstream log(log_path);
  const int queries = 100000;
  int agree = 0, disagree = 0;
  for (int i = 0; i < queries; ++i) {
    const std::size_t k = pick(rng);
    const AABB& b = surfaces[k].aabb();
    const Vec3 ext = b.extent();
    const Point3 p{b.min.x - 0.1 * ext.x + 1.2 * ext.x * u(rng),
                   b.min.y - 0.1 * ext.y + 1.2 * ext.y * u(rng),
                   b.min.z - 0.1 * ext.z + 1.2 * ext.z * u(rng)};
    const bool oracle = winding_number_inclusion(p, surfaces[k]);
    std::string ray;
    try {
      const bool got = testers[k].contains(p);
      if (got == oracle) {
        ++agree;
        continue;
      }
      ray = got ? "inside" : "outside";
    } catch (const Error& e) {
      ray = std::string(e.name());
    }
    ++disagree;
    log << "query " << i << " fixture " << k << " point " << p.x << ' '
        << p.y << ' ' << p.z << " ray=" << ray
        << " winding=" << (oracle ? "inside" : "outside")
        << " resolved=winding\n";
  }
  const double rate = static_cast<double>(agree) / queries;
  Outcome o;
  o.pass = rate >= 0.9999;
  o.detail = std::to_string(queries) + " queries, agreement " +
             fmt("%.5f", 100.0 * rate) + "%, " + std::to_string(disagree) +
             " resolved by the winding number (log: " + log_path.string() +
             ")";
  return o;
}

// Byte-identical round trips and an independent .poly grammar check.
Outcome check_io(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  Outcome o{true, ""};

  const TriSurfaceMesh tube = synth::make_tube({});
  write_surface(tube, dir / "a.off", SurfaceFormat::kOff);
  const TriSurfaceMesh back = read_surface(dir / "a.off", SurfaceFormat::kOff);
  write_surface(back, dir / "b.off", SurfaceFormat::kOff);
  const bool off_ok = testing::read_file((dir / "a.off").string()) ==
                      testing::read_file((dir / "b.off").string());

  const auto f = testing::make_channel(Kind::kTube, 2.0, {6, 6, 6});
  write_tet_mesh(f.mesh, dir / "a");
  const TetMesh mesh = read_tet_mesh(dir / "a.node", dir / "a.ele");
  write_tet_mesh(mesh, dir / "b");
  const bool tet_ok = testing::read_file((dir / "a.node").string()) ==
                          testing::read_file((dir / "b.node").string()) &&
                      testing::read_file((dir / "a.ele").string()) ==
                          testing::read_file((dir / "b.ele").string());

  const BoxDomain box = build_box_domain(tube.aabb());
  const BoxSurface bs = assemble_box_surface(box, {-12, 12}, {1.2, 2.4});
  const MembranePointSet pts =
      select_membrane_points(tube, box, {-12, 12}, 1.2);
  write_plc(assemble_plc(tube, bs.surface, box, pts.all()),
            dir / "model.poly");
  testing::PolySummary summary;
  const auto problem = testing::check_poly_grammar(
      testing::read_file((dir / "model.poly").string()), &summary);

  o.pass = off_ok && tet_ok && !problem.has_value();
  o.detail = std::string("OFF ") + (off_ok ? "identical" : "differs") +
             ", node/ele " + (tet_ok ? "identical" : "differs") + ", poly " +
             (problem ? "rejected: " + *problem
                      : "accepted (" + std::to_string(summary.nodes) +
                            " nodes, " + std::to_string(summary.facets) +
                            " facets)");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path work =
      argc > 1 ? std::filesystem::path(argv[1])
               : std::filesystem::temp_directory_path() / "icmesh_acceptance";
  std::filesystem::create_directories(work);

  int failures = 0;
  const auto report = [&](const char* id, const char* title,
                          const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << title
              << ": " << o.detail << std::endl;
  };

  std::vector<FixtureRun> runs;
  try {
    for (const auto kind : {Kind::kTube, Kind::kHourglass, Kind::kTwoPore}) {
      for (const double h : {0.8, 1.0, 1.5}) {
        runs.push_back(run_fixture(kind, h, kDeskMargins));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "fixture run failed: " << e.what() << '\n';
  }
  const bool have_runs = runs.size() == 9;
  const auto needs_runs = [&](auto check) {
    return [&, check]() -> Outcome {
      if (!have_runs) return {false, "fixture runs did not complete"};
      return check(runs);
    };
  };

  report("AC1", "partition completeness", needs_runs(check_partition));
  report("AC2", "oracle equivalence", needs_runs(check_oracle));
  report("AC3", "zero false tetrahedra", needs_runs(check_false_tets));
  report("AC4", "analytic volumes", check_volumes);
  report("AC5", "multi-pore robustness", check_two_pore);
  report("AC6", "extraction performance", check_performance);
  report("AC7", "box surface validity", check_box_surfaces);
  report("AC8", "membrane point safety", check_membrane_points);
  report("AC9", "inclusion kernel agreement",
         [&] { return check_inclusion(work / "inclusion_disagreements.log"); });
  report("AC10", "I/O round trips", [&] { return check_io(work / "io"); });

  std::cout << (failures == 0 ? "all criteria pass"
                              : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
