// Copyright 2026 The angdef Authors
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

#include "angdef/error.hpp"

namespace angdef {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kBoundaryVertex: return "BoundaryVertex";
    case ErrorCode::kNonManifoldVertex: return "NonManifoldVertex";
    case ErrorCode::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::kIllConditioned: return "IllConditioned";
    case ErrorCode::kInvalidRecurrence: return "InvalidRecurrence";
    case ErrorCode::kDegenerateBasis: return "DegenerateBasis";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupportedPolygon: return "UnsupportedPolygon";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace angdef
