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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "icmesh/box_surface.hpp"
#include "icmesh/mesh_io.hpp"

namespace icmesh {

// Desk-scale defaults: slab [-12, 12], h_m = 1.2.
struct PipelineConfig {
  std::string protein_path;
  double z1 = -12.0;
  double z2 = 12.0;
  double h_m = 1.2;
  std::array<double, 3> eta = kDefaultMargins;
  std::optional<double> h_s;  // defaults to 2 h_m
  std::optional<double> tau;  // defaults to h_m
  std::string output_dir = ".";
  SurfaceFormat format = SurfaceFormat::kOff;

  MembraneSlab slab() const { return {z1, z2}; }
  MeshSizes sizes() const { return {h_m, h_s.value_or(2.0 * h_m)}; }
  double band_tau() const { return tau.value_or(h_m); }
};

// Flat JSON object keyed by the field names above (eta as eta1, eta2, eta3;
// format as "off" or "ply"). Unknown keys and wrong types raise
// kInvalidConfig.
PipelineConfig parse_config(std::string_view json,
                            std::string_view source = "<config>");
PipelineConfig load_config(const std::filesystem::path& path);

// Throws kInvalidConfig.
void validate(const PipelineConfig& config);

std::string config_to_json(const PipelineConfig& config);

}  // namespace icmesh
