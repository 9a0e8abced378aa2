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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace angdef {

enum class ErrorCode {
  kInvalidArgument,
  kBoundaryVertex,
  kNonManifoldVertex,
  kDegenerateTriangle,
  kIllConditioned,
  kInvalidRecurrence,
  kDegenerateBasis,
  kDegenerateInput,
  kParseError,
  kUnsupportedPolygon,
  kIo,
  kConfig,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto angdef_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  // 1-based source line for parse errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace angdef
