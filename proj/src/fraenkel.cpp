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

#include "rigidrel/fraenkel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

#include "rigidrel/core.hpp"
#include "rigidrel/errors.hpp"
#include "detail/combinatorics.hpp"

namespace rigidrel {
namespace {

using detail::next_combination;
using detail::PairMaskAction;

AtomSet normalized_subset(std::size_t atoms, std::span<const Atom> subset) {
  AtomSet out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (Atom a : out) {
    if (a >= atoms) {
      throw InvalidArgument("support atom " + std::to_string(a) +
                            " outside [0," + std::to_string(atoms) + ")");
    }
  }
  return out;
}

AtomSet complement(std::size_t atoms, const AtomSet& subset) {
  AtomSet out;
  for (Atom a = 0; a < atoms; ++a) {
    if (!std::binary_search(subset.begin(), subset.end(), a)) out.push_back(a);
  }
  return out;
}

// Union-find over the N*N ordered pairs.
class PairPartition {
 public:
  explicit PairPartition(std::size_t cells) : parent_(cells) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct ChunkResult {
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> failing;
};

ChunkResult check_orbit_unions(std::size_t atoms,
                               const std::vector<std::uint64_t>& orbit_masks,
                               const Permutation& witness,
                               const PairMaskAction& action, std::uint64_t lo,
                               std::uint64_t hi, bool cross_check) {
  ChunkResult result;
  if (lo >= hi) return result;
  std::uint64_t mask = 0;
  const std::uint64_t gray = lo ^ (lo >> 1);
  for (std::size_t k = 0; k < orbit_masks.size(); ++k) {
    if ((gray >> k) & 1U) mask |= orbit_masks[k];
  }
  for (std::uint64_t i = lo;;) {
    bool ok = action.apply(mask) == mask;
    if (cross_check) {
      const Relation r = Relation::from_mask(atoms, mask);
      ok = ok && is_automorphism(r, witness) && !is_rigid(r).rigid();
    }
    ++result.checked;
    if (!ok) result.failing.push_back(mask);
    if (++i == hi) break;
    mask ^= orbit_masks[std::countr_zero(i)];
  }
  return result;
}

SupportReport verify_support(std::size_t atoms, const AtomSet& support,
                             const LemmaOptions& options) {
  SupportReport report;
  report.support = support;
  const auto orbits = orbit_classes(atoms, support);
  report.orbit_count = orbits.size();

  std::vector<std::uint64_t> orbit_masks;
  for (const auto& orbit : orbits) {
    std::uint64_t m = 0;
    for (const auto& [a, b] : orbit.pairs) m |= std::uint64_t{1} << (a * atoms + b);
    orbit_masks.push_back(m);
  }

  // The witness depends only on the support.
  const Permutation witness =
      nonrigidity_witness(SupportedRelation(Relation(atoms), support));
  if (witness.is_identity()) {
    throw std::logic_error("witness transposition is the identity");
  }
  const PairMaskAction action(atoms, witness);

  const std::uint64_t total = std::uint64_t{1} << orbit_masks.size();
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, total));
  std::vector<ChunkResult> chunks(workers);
  const auto bounds = [&](unsigned w) { return total / workers * w; };
  if (workers == 1) {
    chunks[0] = check_orbit_unions(atoms, orbit_masks, witness, action, 0,
                                   total, options.cross_check_with_search);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = bounds(w);
      const std::uint64_t hi = w + 1 == workers ? total : bounds(w + 1);
      pool.emplace_back([&, w, lo, hi] {
        chunks[w] = check_orbit_unions(atoms, orbit_masks, witness, action, lo,
                                       hi, options.cross_check_with_search);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& c : chunks) {
    report.relations_checked += c.checked;
    report.failing_masks.insert(report.failing_masks.end(), c.failing.begin(),
                                c.failing.end());
  }
  std::sort(report.failing_masks.begin(), report.failing_masks.end());
  report.failures = report.failing_masks.size();
  return report;
}

}  // namespace

GroupDescription GroupDescription::full(std::size_t atoms) {
  return GroupDescription(Kind::Full, atoms, {});
}

GroupDescription GroupDescription::fix(std::size_t atoms,
                                       std::span<const Atom> fixed) {
  return GroupDescription(Kind::Fix, atoms, normalized_subset(atoms, fixed));
}

AtomSet GroupDescription::moved_atoms() const {
  return complement(atoms_, fixed_);
}

bool GroupDescription::contains(const Permutation& p) const {
  if (p.size() != atoms_) return false;
  return std::all_of(fixed_.begin(), fixed_.end(),
                     [&](Atom a) { return p(a) == a; });
}

std::vector<Permutation> GroupDescription::generators() const {
  const AtomSet moved = moved_atoms();
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < moved.size(); ++i) {
    for (std::size_t j = i + 1; j < moved.size(); ++j) {
      out.push_back(Permutation::transposition(atoms_, moved[i], moved[j]));
    }
  }
  return out;
}

bool in_sym(const Permutation& p, const Relation& r) {
  return is_automorphism(r, p);
}

bool is_e_symmetric(const Relation& r, std::span<const Atom> support) {
  const auto group = GroupDescription::fix(r.size(), support);
  for (const auto& t : group.generators()) {
    if (!in_sym(t, r)) return false;
  }
  return true;
}

SupportedRelation::SupportedRelation(Relation relation, AtomSet support)
    : relation_(std::move(relation)),
      support_(normalized_subset(relation_.size(), support)) {
  if (!is_e_symmetric(relation_, support_)) {
    throw InvalidArgument("the given set is not a support of the relation");
  }
}

std::vector<PairOrbit> orbit_classes(std::size_t atoms,
                                     std::span<const Atom> support) {
  const auto group = GroupDescription::fix(atoms, support);
  PairPartition partition(atoms * atoms);
  for (const auto& t : group.generators()) {
    for (Atom a = 0; a < atoms; ++a) {
      for (Atom b = 0; b < atoms; ++b) {
        partition.unite(a * atoms + b, t(a) * atoms + t(b));
      }
    }
  }
  // Roots are the least cell of their class, so visiting cells in order
  // lists orbits by their least pair.
  std::vector<PairOrbit> orbits;
  std::vector<std::size_t> slot(atoms * atoms, SIZE_MAX);
  for (std::size_t cell = 0; cell < atoms * atoms; ++cell) {
    const std::size_t root = partition.find(cell);
    if (slot[root] == SIZE_MAX) {
      slot[root] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[root]].pairs.emplace_back(cell / atoms, cell % atoms);
  }
  return orbits;
}

AtomSet least_support(const Relation& r, const FraenkelLimits& limits) {
  const std::size_t n = r.size();
  if (n > limits.least_support_max_atoms) {
    throw ResourceLimit("least_support bound exceeded: N=" + std::to_string(n) +
                        " > " + std::to_string(limits.least_support_max_atoms));
  }
  for (std::size_t k = 0; k <= n; ++k) {
    AtomSet candidate(k);
    std::iota(candidate.begin(), candidate.end(), Atom{0});
    do {
      if (is_e_symmetric(r, candidate)) return candidate;
    } while (next_combination(candidate, n));
  }
  throw std::logic_error("the full atom set is always a support");
}

Permutation nonrigidity_witness(const SupportedRelation& rel) {
  const AtomSet free_atoms = complement(rel.atoms(), rel.support());
  if (free_atoms.size() < 2) {
    throw NotApplicable("fewer than two atoms lie outside the support");
  }
  Permutation swap =
      Permutation::transposition(rel.atoms(), free_atoms[0], free_atoms[1]);
  if (!is_automorphism(rel.relation(), swap)) {
    throw std::logic_error("a transposition outside the support moved an edge");
  }
  return swap;
}

LemmaReport verify_lemma(std::size_t atoms, std::size_t max_support,
                         const LemmaOptions& options) {
  if (atoms > options.limits.lemma_max_atoms) {
    throw ResourceLimit("verify_lemma bound exceeded: N=" + std::to_string(atoms) +
                        " > " + std::to_string(options.limits.lemma_max_atoms));
  }
  LemmaReport report;
  report.atoms = atoms;
  report.max_support = max_support;
  if (atoms < 2) {
    report.applicable = false;
    return report;
  }
  if (max_support + 2 > atoms) {
    throw InvalidArgument("max_support must be at most N-2 (N=" +
                          std::to_string(atoms) + ", max_support=" +
                          std::to_string(max_support) + ")");
  }
  for (std::size_t k = 0; k <= max_support; ++k) {
    AtomSet support(k);
    std::iota(support.begin(), support.end(), Atom{0});
    do {
      report.per_support.push_back(verify_support(atoms, support, options));
      report.relations_checked += report.per_support.back().relations_checked;
      report.failures += report.per_support.back().failures;
    } while (next_combination(support, atoms));
  }
  return report;
}

}  // namespace rigidrel
