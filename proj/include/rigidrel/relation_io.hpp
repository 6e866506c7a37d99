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

// Relation file format:
//
//   # optional comment lines
//   n <count>
//   e <u> <v>
//   ...
//
// Tokens are separated by single spaces; duplicate edges and out-of-range
// endpoints are parse errors. Canonical files have no comments and list
// edges sorted by (u, v); serialize() always writes canonical form.

#ifndef RIGIDREL_RELATION_IO_HPP
#define RIGIDREL_RELATION_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rigidrel/relation.hpp"

namespace rigidrel {

// Throws ParseError.
Relation parse_relation(std::string_view text);
Relation read_relation_file(const std::filesystem::path& path);

std::string serialize_relation(const Relation& r);
void write_relation_file(const std::filesystem::path& path, const Relation& r);

// Graphviz digraph; vertices are labeled by index, loops are self-edges.
std::string to_dot(const Relation& r, std::string_view name = "R");

}  // namespace rigidrel

#endif  // RIGIDREL_RELATION_IO_HPP
