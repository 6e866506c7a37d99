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

// Exhaustive classification of all labeled binary relations on n vertices.
//
// Relations are enumerated as bitmasks (bit u*n+v is the pair (u,v)) and
// classified with the core verdicts. The labeled enumeration is the ground
// truth; isomorph rejection visits one representative per isomorphism class
// (the least mask in its orbit under vertex relabeling) and weights it by
// n!/|Aut|.

#ifndef RIGIDREL_CENSUS_HPP
#define RIGIDREL_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rigidrel/relation.hpp"

namespace rigidrel {

struct CensusRow {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t rigid = 0;
  std::uint64_t strongly_rigid = 0;
  std::uint64_t hereditarily_rigid = 0;
  std::uint64_t irreflexive_hereditarily_rigid = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOptions {
  bool isomorph_rejection = false;
  unsigned threads = 1;
  std::size_t labeled_max_n = 4;
  std::size_t isomorph_max_n = 5;
};

CensusRow census(std::size_t n, const CensusOptions& options = {});

// Header line of the census table, without the line terminator.
const char* census_tsv_header();
// Header plus one row per entry, tab separated, LF line endings.
void write_census_tsv(std::ostream& out, const std::vector<CensusRow>& rows);

// All strongly rigid relations on n labeled vertices (n <= 5), sorted by
// edge list.
std::vector<Relation> smallest_strongly_rigid_examples(std::size_t n);

struct RigidNotHereditary {
  Relation relation;
  std::vector<Vertex> witness_subset;
};

// All rigid relations on n labeled vertices (n <= 4) with a non-rigid
// induced substructure, sorted by edge list.
std::vector<RigidNotHereditary> rigid_not_hereditary_examples(std::size_t n);

}  // namespace rigidrel

#endif  // RIGIDREL_CENSUS_HPP
