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

#include <stdexcept>
#include <string>
#include <string_view>

namespace icmesh {

// Every failure raised by the library carries one of these codes. The CLI
// prints error_name(code) on stderr and maps any Error to exit status 3.
enum class ErrorCode {
  kEmptyMesh,
  kInvalidMesh,
  kInvalidRay,
  kNotWatertight,
  kDegenerateQuery,
  kOnBoundary,
  kOpenCrossSection,
  kEmptySubset,
  kInvalidMargin,
  kSlabTooClose,
  kProteinMissesSlab,
  kPoreNotSeparated,
  kAmbiguousOuter,
  kMissingRegionAttribute,
  kIndexOutOfRange,
  kParseError,
  kNonManifoldEdge,
  kIoError,
  kInvalidSpec,
  kInvalidConfig,
  kInternalError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  // Message without the leading error name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace icmesh
