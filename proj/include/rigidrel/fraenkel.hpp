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

// Finitely supported relations on a finite set of atoms.
//
// A relation R on atoms {0, ..., N-1} has support E when every permutation
// fixing E pointwise is an automorphism of R, i.e. fix(E) <= sym(R). The
// transpositions of atoms outside E generate fix(E), so E-symmetry is
// checked on those generators only. When at least two atoms lie outside E,
// swapping them is a nontrivial automorphism: no finitely supported relation
// is rigid.

#ifndef RIGIDREL_FRAENKEL_HPP
#define RIGIDREL_FRAENKEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rigidrel/relation.hpp"

namespace rigidrel {

using Atom = Vertex;
using AtomSet = std::vector<Atom>;  // sorted, unique

// Either the full symmetric group on the atoms, or the pointwise stabilizer
// fix(E) of a subset E.
class GroupDescription {
 public:
  enum class Kind { Full, Fix };

  static GroupDescription full(std::size_t atoms);
  // Throws InvalidArgument if E is not a subset of the atoms.
  static GroupDescription fix(std::size_t atoms, std::span<const Atom> fixed);

  Kind kind() const { return kind_; }
  std::size_t atoms() const { return atoms_; }
  const AtomSet& fixed_set() const { return fixed_; }
  // Atoms the group is allowed to move.
  AtomSet moved_atoms() const;

  bool contains(const Permutation& p) const;
  // Transpositions (a b), a < b, of moved atoms, in lexicographic order.
  std::vector<Permutation> generators() const;

 private:
  GroupDescription(Kind kind, std::size_t atoms, AtomSet fixed)
      : kind_(kind), atoms_(atoms), fixed_(std::move(fixed)) {}

  Kind kind_;
  std::size_t atoms_;
  AtomSet fixed_;
};

// p is in sym(R) iff p is an automorphism of <atoms, R>.
bool in_sym(const Permutation& p, const Relation& r);

// True iff every transposition of two atoms outside `support` is an
// automorphism of r. Throws InvalidArgument if support is not a subset.
bool is_e_symmetric(const Relation& r, std::span<const Atom> support);

// A relation on atoms together with a support, validated at construction.
class SupportedRelation {
 public:
  // Throws InvalidArgument if `support` is not a support of `relation`.
  SupportedRelation(Relation relation, AtomSet support);

  std::size_t atoms() const { return relation_.size(); }
  const Relation& relation() const { return relation_; }
  const AtomSet& support() const { return support_; }

 private:
  Relation relation_;
  AtomSet support_;
};

// One orbit of fix(E) acting on ordered pairs of atoms, as a sorted pair
// list. Orbits are listed by their least pair.
struct PairOrbit {
  std::vector<Edge> pairs;

  friend bool operator==(const PairOrbit&, const PairOrbit&) = default;
};

std::vector<PairOrbit> orbit_classes(std::size_t atoms,
                                     std::span<const Atom> support);

struct FraenkelLimits {
  std::size_t least_support_max_atoms = 8;
  std::size_t lemma_max_atoms = 6;
};

// Smallest E with is_e_symmetric(r, E), lexicographically least among those
// of minimum size.
AtomSet least_support(const Relation& r, const FraenkelLimits& limits = {});

// The transposition of the two least atoms outside the support. Throws
// NotApplicable if fewer than two atoms lie outside it.
Permutation nonrigidity_witness(const SupportedRelation& rel);

struct LemmaOptions {
  FraenkelLimits limits;
  unsigned threads = 1;
  // Also run the core rigidity search on every relation (slow; meant for
  // small N).
  bool cross_check_with_search = false;
};

struct SupportReport {
  AtomSet support;
  std::size_t orbit_count = 0;
  std::uint64_t relations_checked = 0;
  std::uint64_t failures = 0;
  // Edge masks (bit a*N+b) of relations where the witness failed, sorted.
  std::vector<std::uint64_t> failing_masks;
};

struct LemmaReport {
  std::size_t atoms = 0;
  std::size_t max_support = 0;
  // False when N < 2: no support leaves two atoms free.
  bool applicable = true;
  std::vector<SupportReport> per_support;
  std::uint64_t relations_checked = 0;
  std::uint64_t failures = 0;
};

// For every E with |E| <= max_support and every union of fix(E)-orbits of
// pairs, checks that the witness transposition is a nontrivial automorphism.
// Supports are listed by size, then lexicographically.
LemmaReport verify_lemma(std::size_t atoms, std::size_t max_support,
                         const LemmaOptions& options = {});

}  // namespace rigidrel

#endif  // RIGIDREL_FRAENKEL_HPP
