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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "angdef/mesh.hpp"

namespace angdef {

enum class MeshFormat { kObj, kOff };

// ".obj" / ".off", case-insensitive.
std::optional<MeshFormat> format_from_extension(const std::filesystem::path& path);

// Readers accept triangles only. Errors: kParseError (with line number),
// kUnsupportedPolygon for faces with more than three corners, kIo when the
// file cannot be opened.
TriangleMesh read_mesh(std::istream& in, MeshFormat format);
TriangleMesh read_mesh(const std::filesystem::path& path, MeshFormat format);
TriangleMesh read_mesh(const std::filesystem::path& path);

// Coordinates are written with 17 significant digits so a read/write cycle
// reproduces them exactly.
void write_mesh(std::ostream& out, const TriangleMesh& mesh, MeshFormat format);
void write_mesh(const std::filesystem::path& path, const TriangleMesh& mesh,
                MeshFormat format);

}  // namespace angdef
