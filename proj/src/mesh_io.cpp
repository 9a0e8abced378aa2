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

#include "angdef/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "angdef/error.hpp"

namespace angdef {
namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParseError, fmt::format("line {}: {}", line, msg), line);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

double parse_double(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    parse_error(line, fmt::format("invalid number '{}'", tok));
  }
  return v;
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    parse_error(line, fmt::format("invalid integer '{}'", tok));
  }
  return v;
}

TriangleMesh read_obj(std::istream& in) {
  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = split(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens[0] == "v") {
      if (tokens.size() < 4) parse_error(line, "vertex needs 3 coordinates");
      vertices.push_back({parse_double(tokens[1], line),
                          parse_double(tokens[2], line),
                          parse_double(tokens[3], line)});
    } else if (tokens[0] == "f") {
      const std::size_t corners = tokens.size() - 1;
      if (corners < 3) parse_error(line, "face needs at least 3 corners");
      if (corners > 3) {
        throw Error(ErrorCode::kUnsupportedPolygon,
                    fmt::format("line {}: face with {} corners", line, corners),
                    line);
      }
      Triangle tri{};
      for (std::size_t k = 0; k < 3; ++k) {
        const auto tok = tokens[k + 1];
        const auto index = parse_int(tok.substr(0, tok.find('/')), line);
        const auto count = static_cast<long long>(vertices.size());
        const long long resolved = index > 0 ? index - 1 : count + index;
        if (index == 0 || resolved < 0 || resolved >= count) {
          parse_error(line, fmt::format("vertex index {} out of range", index));
        }
        tri[k] = static_cast<std::uint32_t>(resolved);
      }
      triangles.push_back(tri);
    }
    // Other records (vn, vt, g, o, s, usemtl, ...) carry nothing we need.
  }
  try {
    return TriangleMesh(std::move(vertices), std::move(triangles));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

TriangleMesh read_off(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  // Pending tokens of the current logical line, so the counts may share the
  // header line ("OFF 6 8 12").
  std::vector<std::string_view> tokens;
  std::string holder;
  const auto next_tokens = [&]() -> bool {
    while (std::getline(in, raw)) {
      ++line;
      holder = raw;
      tokens = split(strip_comment(holder));
      if (!tokens.empty()) return true;
    }
    return false;
  };

  if (!next_tokens() || tokens[0] != "OFF") parse_error(line, "missing OFF header");
  tokens.erase(tokens.begin());
  if (tokens.empty() && !next_tokens()) parse_error(line, "missing counts line");
  if (tokens.size() < 2) parse_error(line, "counts line needs vertex and face counts");
  const auto nv = parse_int(tokens[0], line);
  const auto nf = parse_int(tokens[1], line);
  if (nv < 0 || nf < 0) parse_error(line, "negative element count");

  std::vector<Point3> vertices;
  vertices.reserve(static_cast<std::size_t>(nv));
  for (long long i = 0; i < nv; ++i) {
    if (!next_tokens()) parse_error(line, "unexpected end of file in vertices");
    if (tokens.size() < 3) parse_error(line, "vertex needs 3 coordinates");
    vertices.push_back({parse_double(tokens[0], line),
                        parse_double(tokens[1], line),
                        parse_double(tokens[2], line)});
  }
  std::vector<Triangle> triangles;
  triangles.reserve(static_cast<std::size_t>(nf));
  for (long long i = 0; i < nf; ++i) {
    if (!next_tokens()) parse_error(line, "unexpected end of file in faces");
    const auto corners = parse_int(tokens[0], line);
    if (corners > 3) {
      throw Error(ErrorCode::kUnsupportedPolygon,
                  fmt::format("line {}: face with {} corners", line, corners),
                  line);
    }
    if (corners < 3) parse_error(line, "face needs at least 3 corners");
    if (tokens.size() < 4) parse_error(line, "face record is truncated");
    Triangle tri{};
    for (int k = 0; k < 3; ++k) {
      const auto idx = parse_int(tokens[k + 1], line);
      if (idx < 0 || idx >= nv) {
        parse_error(line, fmt::format("vertex index {} out of range", idx));
      }
      tri[k] = static_cast<std::uint32_t>(idx);
    }
    triangles.push_back(tri);
  }
  try {
    return TriangleMesh(std::move(vertices), std::move(triangles));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

std::optional<MeshFormat> format_from_extension(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".obj") return MeshFormat::kObj;
  if (ext == ".off") return MeshFormat::kOff;
  return std::nullopt;
}

TriangleMesh read_mesh(std::istream& in, MeshFormat format) {
  return format == MeshFormat::kObj ? read_obj(in) : read_off(in);
}

TriangleMesh read_mesh(const std::filesystem::path& path, MeshFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open '{}'", path.string()));
  }
  return read_mesh(in, format);
}

TriangleMesh read_mesh(const std::filesystem::path& path) {
  const auto format = format_from_extension(path);
  if (!format) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("unknown mesh extension '{}'", path.string()));
  }
  return read_mesh(path, *format);
}

void write_mesh(std::ostream& out, const TriangleMesh& mesh, MeshFormat format) {
  if (format == MeshFormat::kOff) {
    fmt::print(out, "OFF\n{} {} {}\n", mesh.vertex_count(), mesh.triangle_count(),
               mesh.edges().size());
    for (const auto& p : mesh.vertices()) {
      fmt::print(out, "{:.17g} {:.17g} {:.17g}\n", p.x, p.y, p.z);
    }
    for (const auto& t : mesh.triangles()) {
      fmt::print(out, "3 {} {} {}\n", t[0], t[1], t[2]);
    }
    return;
  }
  for (const auto& p : mesh.vertices()) {
    fmt::print(out, "v {:.17g} {:.17g} {:.17g}\n", p.x, p.y, p.z);
  }
  for (const auto& t : mesh.triangles()) {
    fmt::print(out, "f {} {} {}\n", t[0] + 1, t[1] + 1, t[2] + 1);
  }
}

void write_mesh(const std::filesystem::path& path, const TriangleMesh& mesh,
                MeshFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
  }
  write_mesh(out, mesh, format);
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("write failed for '{}'", path.string()));
  }
}

}  // namespace angdef
