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

#include "icmesh/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "icmesh/error.hpp"

namespace icmesh {
namespace {

using nlohmann::json;

double number(const json& value, const std::string& key,
              std::string_view source) {
  if (!value.is_number()) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(source) + ": '" + key + "' must be a number");
  }
  return value.get<double>();
}

std::string text(const json& value, const std::string& key,
                 std::string_view source) {
  if (!value.is_string()) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(source) + ": '" + key + "' must be a string");
  }
  return value.get<std::string>();
}

}  // namespace

PipelineConfig parse_config(std::string_view text_in, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text_in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(source) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(source) + ": expected a JSON object");
  }
  PipelineConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "protein_path") {
      config.protein_path = text(value, key, source);
    } else if (key == "z1") {
      config.z1 = number(value, key, source);
    } else if (key == "z2") {
      config.z2 = number(value, key, source);
    } else if (key == "h_m") {
      config.h_m = number(value, key, source);
    } else if (key == "eta1") {
      config.eta[0] = number(value, key, source);
    } else if (key == "eta2") {
      config.eta[1] = number(value, key, source);
    } else if (key == "eta3") {
      config.eta[2] = number(value, key, source);
    } else if (key == "h_s") {
      if (!value.is_null()) config.h_s = number(value, key, source);
    } else if (key == "tau") {
      if (!value.is_null()) config.tau = number(value, key, source);
    } else if (key == "output_dir") {
      config.output_dir = text(value, key, source);
    } else if (key == "format") {
      const auto format = parse_surface_format(text(value, key, source));
      if (!format) {
        throw Error(ErrorCode::kInvalidConfig,
                    std::string(source) + ": format must be off or ply");
      }
      config.format = *format;
    } else {
      throw Error(ErrorCode::kInvalidConfig,
                  std::string(source) + ": unknown key '" + key + "'");
    }
  }
  return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.string());
}

void validate(const PipelineConfig& config) {
  const auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidConfig, what);
  };
  if (!std::isfinite(config.z1) || !std::isfinite(config.z2) ||
      !(config.z1 < config.z2)) {
    fail("membrane slab needs finite z1 < z2");
  }
  if (!(config.h_m > 0.0) || !std::isfinite(config.h_m)) {
    fail("h_m must be positive");
  }
  if (config.h_s && !(*config.h_s > 0.0)) fail("h_s must be positive");
  if (config.tau && !(*config.tau > 0.0)) fail("tau must be positive");
  for (double e : config.eta) {
    if (!(e > 0.0)) {
      throw Error(ErrorCode::kInvalidMargin, "box margins must be positive");
    }
  }
}

std::string config_to_json(const PipelineConfig& config) {
  nlohmann::ordered_json doc;
  doc["protein_path"] = config.protein_path;
  doc["z1"] = config.z1;
  doc["z2"] = config.z2;
  doc["h_m"] = config.h_m;
  doc["eta1"] = config.eta[0];
  doc["eta2"] = config.eta[1];
  doc["eta3"] = config.eta[2];
  doc["h_s"] = config.sizes().h_s;
  doc["tau"] = config.band_tau();
  doc["output_dir"] = config.output_dir;
  doc["format"] = config.format == SurfaceFormat::kOff ? "off" : "ply";
  return doc.dump(2);
}

}  // namespace icmesh
