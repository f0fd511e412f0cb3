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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "icmesh/box_surface.hpp"
#include "icmesh/inclusion.hpp"
#include "icmesh/membrane_points.hpp"
#include "icmesh/region_extraction.hpp"
#include "icmesh/synth.hpp"

namespace {

using namespace icmesh;

struct Fixture {
  TriSurfaceMesh surface;
  BoxDomain box;
  TetMesh mesh;
};

// Tube in the default box at edge length h: about 624k label-2 tets at h = 1.
const Fixture& tube_fixture(double h) {
  static std::vector<std::pair<double, Fixture>> cache;
  for (const auto& [key, f] : cache) {
    if (key == h) return f;
  }
  Fixture f;
  const synth::SynthSpec spec;
  f.surface = synth::make_surface(spec);
  f.box = build_box_domain(f.surface.aabb());
  synth::FixtureMeshOptions options;
  options.h = h;
  f.mesh = synth::make_fixture_tet_mesh(spec, f.box, {-12, 12}, options);
  cache.emplace_back(h, std::move(f));
  return cache.back().second;
}

void BM_ExtractRegions(benchmark::State& state) {
  const double h = static_cast<double>(state.range(0)) / 10.0;
  const Fixture& f = tube_fixture(h);
  ExtractionOptions options;
  options.h_m = h;
  for (auto _ : state) {
    ExtractionResult r = extract_regions(f.mesh, f.surface, {-12, 12}, options);
    benchmark::DoNotOptimize(r.report.membrane.tets);
  }
  state.counters["tets"] = static_cast<double>(f.mesh.tet_count());
}
BENCHMARK(BM_ExtractRegions)->Arg(15)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PointInClosedSurface(benchmark::State& state) {
  synth::SynthSpec spec;
  spec.kind = synth::Kind::kHourglass;
  spec.slope = 0.5;
  spec.n_theta = static_cast<int>(state.range(0));
  const TriSurfaceMesh s = synth::make_surface(spec);
  const ClosedSurfaceTester tester(s);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xy(-6.0, 6.0), z(-16.0, 16.0);
  std::vector<Point3> points(4096);
  for (Point3& p : points) p = {xy(rng), xy(rng), z(rng)};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tester.contains(points[i++ & 4095]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PointInClosedSurface)->Arg(64)->Arg(512);

void BM_AssembleBoxSurface(benchmark::State& state) {
  const double h_m = static_cast<double>(state.range(0)) / 10.0;
  const BoxDomain box = build_box_domain(synth::make_tube({}).aabb());
  for (auto _ : state) {
    BoxSurface b = assemble_box_surface(box, {-12, 12}, {h_m, 2.0 * h_m});
    benchmark::DoNotOptimize(b.surface.triangle_count());
  }
}
BENCHMARK(BM_AssembleBoxSurface)->Arg(12)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SelectMembranePoints(benchmark::State& state) {
  synth::SynthSpec spec;
  spec.kind = synth::Kind::kTwoPore;
  const TriSurfaceMesh s = synth::make_surface(spec);
  const BoxDomain box = build_box_domain(s.aabb());
  for (auto _ : state) {
    MembranePointSet set = select_membrane_points(s, box, {-12, 12}, 1.2);
    benchmark::DoNotOptimize(set.size());
  }
}
BENCHMARK(BM_SelectMembranePoints)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
