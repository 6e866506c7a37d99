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

// Explicit rigid-relation constructions on finite carriers.
//
// Reals are modelled as fixed-length binary strings (CantorPoint). The
// countably infinite subset used by the constructions becomes a caller-chosen
// spine: a distinguished vertex z* carrying the only loop, and a chain
// z_0 -> z_1 -> ... -> z_{k-1} below it. Chain vertex z_n is paired with the
// n-th finite binary string s_n, and points off the spine are told apart by
// which of s_0, ..., s_{k-1} are prefixes of them. That separation is a
// checked precondition here.

#ifndef RIGIDREL_CONSTRUCT_HPP
#define RIGIDREL_CONSTRUCT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigidrel/core.hpp"
#include "rigidrel/relation.hpp"

namespace rigidrel {

// A binary string of length >= 1.
class CantorPoint {
 public:
  // Throws InvalidArgument unless `bits` is a nonempty string over {0,1}.
  explicit CantorPoint(std::string bits);

  const std::string& bits() const { return bits_; }
  std::size_t length() const { return bits_.size(); }

  // True iff `s` is a prefix of this point (the empty string always is).
  bool extends(const std::string& s) const { return bits_.starts_with(s); }

  friend auto operator<=>(const CantorPoint&, const CantorPoint&) = default;
  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;

 private:
  std::string bits_;
};

struct PrefixCode {
  std::size_t index = 0;
  std::string sequence;

  friend bool operator==(const PrefixCode&, const PrefixCode&) = default;
};

// The n-th binary string in length-then-lexicographic order; s_0 is empty.
std::string prefix_code(std::size_t index);

// The first `count` strings: "", "0", "1", "00", "01", "10", "11", "000", ...
std::vector<PrefixCode> prefix_enumeration(std::size_t count);

struct SpineDesignation {
  Vertex z_star = 0;
  std::vector<Vertex> z_chain;

  std::size_t chain_length() const { return z_chain.size(); }
  bool contains(Vertex v) const;
};

// A point of 2^w x B, where `label` indexes a vertex of the base relation.
struct LabeledPair {
  CantorPoint point;
  Vertex label = 0;

  friend auto operator<=>(const LabeledPair&, const LabeledPair&) = default;
  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

struct ConstructOptions {
  // When false, the product constructions skip the irreflexivity and
  // hereditary-rigidity checks on the base. Only for negative controls.
  bool check_hypotheses = true;
  SearchLimits limits;
};

// {(i,j) : i < j} on n vertices.
Relation rigid_linear_order(std::size_t n);

// Same as rigid_linear_order; the canonical base over an ordinal gamma.
Relation ordinal_relation(std::size_t gamma);

// True iff every two distinct points are separated by some s_n with
// n < chain_length, i.e. exactly one of them extends s_n. Throws
// PreconditionViolation if `points` contains a duplicate.
bool separation_check(std::span<const CantorPoint> points,
                      std::size_t chain_length);

// A pair of points that no s_n, n < chain_length, separates.
std::optional<std::pair<std::size_t, std::size_t>> first_unseparated_pair(
    std::span<const CantorPoint> points, std::size_t chain_length);

// Smallest chain length for which separation_check holds. Throws
// PreconditionViolation if `points` contains a duplicate.
std::size_t minimal_separating_length(std::span<const CantorPoint> points);

// Vertex i is points[i]. Edges: the loop (z*,z*); z_n -> z* and
// z_n -> z_{n+1}; and z_n -> y for y off the spine iff s_n is a prefix of y.
Relation cantor_relation(std::span<const CantorPoint> points,
                         const SpineDesignation& spine);

// Vertex i is pairs[i]. Spine edges as in cantor_relation; for pairs off the
// spine, z_n -> <x,b> iff s_n is a prefix of x, and <x,b> -> <y,c> iff
// (b,c) is an edge of `base`.
Relation product_relation_main(std::span<const LabeledPair> pairs,
                               const Relation& base,
                               const SpineDesignation& spine,
                               const ConstructOptions& options = {});

// Vertex i is pairs[i]. <x,b> -> <y,c> iff x < y lexicographically, or
// x == y and (b,c) is an edge of `base`.
Relation product_relation_lex(std::span<const LabeledPair> pairs,
                              const Relation& base,
                              const ConstructOptions& options = {});

// Carries r along `bijection`; rigidity and the automorphism count are
// preserved.
Relation transfer_relation(const Relation& r, const Permutation& bijection);

}  // namespace rigidrel

#endif  // RIGIDREL_CONSTRUCT_HPP
