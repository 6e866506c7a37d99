// Copyright 2026 The rigidrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rigidrel/relation_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "rigidrel/errors.hpp"

namespace rigidrel {
namespace {

// The adjacency matrix is n*n bytes.
constexpr std::size_t kMaxFileVertices = 4096;

std::vector<std::string_view> split_spaces(std::string_view line,
                                           std::size_t lineno) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t next = line.find(' ', pos);
    const std::size_t end = next == std::string_view::npos ? line.size() : next;
    if (end == pos) throw ParseError(lineno, "unexpected space");
    tokens.push_back(line.substr(pos, end - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t lineno) {
  std::size_t value = 0;
  // Leading zeros would break the byte-identical round trip.
  if (token.empty() || (token.size() > 1 && token[0] == '0')) {
    throw ParseError(lineno, "malformed integer \"" + std::string(token) + "\"");
  }
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(lineno, "malformed integer \"" + std::string(token) + "\"");
  }
  return value;
}

}  // namespace

Relation parse_relation(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_spaces(line, lineno);
    if (tokens[0] == "n") {
      if (n) throw ParseError(lineno, "repeated 'n' line");
      if (!edges.empty()) throw ParseError(lineno, "'n' line after edges");
      if (tokens.size() != 2) throw ParseError(lineno, "expected 'n <count>'");
      n = parse_count(tokens[1], lineno);
      if (*n > kMaxFileVertices) {
        throw ParseError(lineno, "vertex count above " +
                                     std::to_string(kMaxFileVertices));
      }
    } else if (tokens[0] == "e") {
      if (!n) throw ParseError(lineno, "edge before the 'n' line");
      if (tokens.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      const Edge e{parse_count(tokens[1], lineno), parse_count(tokens[2], lineno)};
      if (e.first >= *n || e.second >= *n) {
        throw ParseError(lineno, "edge endpoint outside [0," +
                                     std::to_string(*n) + ")");
      }
      if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
      edges.push_back(e);
    } else {
      throw ParseError(lineno, "unknown record \"" + std::string(tokens[0]) + "\"");
    }
  }
  if (!n) throw ParseError(lineno, "missing 'n <count>' line");
  return Relation(*n, std::move(edges));
}

Relation read_relation_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_relation(buffer.str());
}

std::string serialize_relation(const Relation& r) {
  std::string out = "n " + std::to_string(r.size()) + "\n";
  for (const auto& [u, v] : r.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

void write_relation_file(const std::filesystem::path& path, const Relation& r) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_relation(r);
  if (!out) throw Error("write failed for " + path.string());
}

std::string to_dot(const Relation& r, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < r.size(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
  }
  for (const auto& [u, v] : r.edges()) {
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rigidrel
