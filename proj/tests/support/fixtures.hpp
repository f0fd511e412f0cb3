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

#pragma once

#include <array>

#include "icmesh/box_surface.hpp"
#include "icmesh/synth.hpp"

namespace icmesh::testing {

// A synthetic channel, its box, the slab and a labelled tet mesh standing
// in for the tetrahedralizer output.
struct ChannelFixture {
  synth::SynthSpec spec;
  TriSurfaceMesh surface;
  BoxDomain box;
  MembraneSlab slab;
  TetMesh mesh;
};

inline synth::SynthSpec channel_spec(synth::Kind kind) {
  synth::SynthSpec spec;
  spec.kind = kind;
  if (kind == synth::Kind::kHourglass) spec.slope = 0.5;
  return spec;
}

inline ChannelFixture make_channel(const synth::SynthSpec& spec, double h,
                                   const std::array<double, 3>& margins =
                                       {20.0, 20.0, 20.0},
                                   MembraneSlab slab = {-12.0, 12.0}) {
  ChannelFixture f;
  f.spec = spec;
  f.surface = synth::make_surface(spec);
  f.box = build_box_domain(f.surface.aabb(), margins);
  f.slab = slab;
  synth::FixtureMeshOptions options;
  options.h = h;
  f.mesh = synth::make_fixture_tet_mesh(spec, f.box, f.slab, options);
  return f;
}

inline ChannelFixture make_channel(synth::Kind kind, double h,
                                   const std::array<double, 3>& margins =
                                       {20.0, 20.0, 20.0}) {
  return make_channel(channel_spec(kind), h, margins);
}

}  // namespace icmesh::testing
