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

#include "icmesh/error.hpp"

namespace icmesh {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyMesh: return "EmptyMesh";
    case ErrorCode::kInvalidMesh: return "InvalidMesh";
    case ErrorCode::kInvalidRay: return "InvalidRay";
    case ErrorCode::kNotWatertight: return "NotWatertight";
    case ErrorCode::kDegenerateQuery: return "DegenerateQuery";
    case ErrorCode::kOnBoundary: return "OnBoundary";
    case ErrorCode::kOpenCrossSection: return "OpenCrossSection";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kInvalidMargin: return "InvalidMargin";
    case ErrorCode::kSlabTooClose: return "SlabTooClose";
    case ErrorCode::kProteinMissesSlab: return "ProteinMissesSlab";
    case ErrorCode::kPoreNotSeparated: return "PoreNotSeparated";
    case ErrorCode::kAmbiguousOuter: return "AmbiguousOuter";
    case ErrorCode::kMissingRegionAttribute: return "MissingRegionAttribute";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInternalError: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace icmesh
