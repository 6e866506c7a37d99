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

// Decision kernels for automorphisms, endomorphisms and the three rigidity
// notions.
//
// All searches visit candidates in lexicographic order of their image
// sequences, so every reported witness is the lexicographically first one
// and is reproducible. Each search has a size bound; exceeding it throws
// ResourceLimit rather than returning a partial answer.

#ifndef RIGIDREL_CORE_HPP
#define RIGIDREL_CORE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rigidrel/relation.hpp"

namespace rigidrel {

struct SearchLimits {
  std::size_t automorphism_max_n = 10;
  // The endomorphism space has n^n maps.
  std::size_t endomorphism_max_n = 7;
  // 2^n subsets, each with an automorphism search.
  std::size_t hereditary_max_n = 10;
};

enum class RigidityStatus { Rigid, NotRigid };
enum class StrongRigidityStatus { StronglyRigid, NotStronglyRigid };
enum class HereditaryStatus { HereditarilyRigid, NotHereditarilyRigid };

struct RigidityVerdict {
  RigidityStatus status = RigidityStatus::Rigid;
  // Present iff status == NotRigid; a nontrivial automorphism.
  std::optional<Permutation> witness;

  bool rigid() const { return status == RigidityStatus::Rigid; }
};

struct StrongRigidityVerdict {
  StrongRigidityStatus status = StrongRigidityStatus::StronglyRigid;
  // Present iff status == NotStronglyRigid; a nontrivial endomorphism.
  std::optional<VertexMap> witness;

  bool strongly_rigid() const {
    return status == StrongRigidityStatus::StronglyRigid;
  }
};

struct HereditaryVerdict {
  HereditaryStatus status = HereditaryStatus::HereditarilyRigid;
  // Sorted original vertex indices of the failing substructure.
  std::optional<std::vector<Vertex>> witness_subset;
  // Nontrivial automorphism of the induced substructure, in its renumbered
  // coordinates (position i stands for witness_subset[i]).
  std::optional<Permutation> witness_perm;

  bool hereditarily_rigid() const {
    return status == HereditaryStatus::HereditarilyRigid;
  }
};

// (a,b) in r <=> (p(a),p(b)) in r, for all a, b.
bool is_automorphism(const Relation& r, const Permutation& p);

// (a,b) in r => (f(a),f(b)) in r. Forward preservation only.
bool is_endomorphism(const Relation& r, const VertexMap& f);

// Every automorphism of r, identity included, in lexicographic order.
// Backtracking over partial images, pruned by the (in-degree, out-degree,
// loop) signature of each vertex and by consistency with earlier images.
std::vector<Permutation> automorphisms(const Relation& r,
                                       const SearchLimits& limits = {});

std::size_t automorphism_count(const Relation& r,
                               const SearchLimits& limits = {});

RigidityVerdict is_rigid(const Relation& r, const SearchLimits& limits = {});

StrongRigidityVerdict is_strongly_rigid(const Relation& r,
                                        const SearchLimits& limits = {});

// Subsets are visited by increasing size, then lexicographically, so a
// reported witness is a smallest failing substructure.
HereditaryVerdict is_hereditarily_rigid(const Relation& r,
                                        const SearchLimits& limits = {});

bool is_irreflexive(const Relation& r);

// Relation on |subset| vertices, renumbered by the sorted order of `subset`.
// Duplicates in `subset` are ignored.
Relation induced_substructure(const Relation& r, std::span<const Vertex> subset);

// The isomorphic copy {(p(u), p(v)) : (u,v) in r}.
Relation relabel(const Relation& r, const Permutation& p);

}  // namespace rigidrel

#endif  // RIGIDREL_CORE_HPP
