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

#include "rigidrel/census.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

#include "rigidrel/core.hpp"
#include "rigidrel/errors.hpp"
#include "detail/combinatorics.hpp"

namespace rigidrel {
namespace {

using detail::PairMaskAction;

void add(CensusRow& into, const CensusRow& from) {
  into.total += from.total;
  into.rigid += from.rigid;
  into.strongly_rigid += from.strongly_rigid;
  into.hereditarily_rigid += from.hereditarily_rigid;
  into.irreflexive_hereditarily_rigid += from.irreflexive_hereditarily_rigid;
}

// Adds `weight` copies of r's classification to `row`.
void classify(const Relation& r, std::uint64_t weight, CensusRow& row) {
  row.total += weight;
  if (is_rigid(r).rigid()) row.rigid += weight;
  if (is_strongly_rigid(r).strongly_rigid()) row.strongly_rigid += weight;
  if (is_hereditarily_rigid(r).hereditarily_rigid()) {
    row.hereditarily_rigid += weight;
    if (is_irreflexive(r)) row.irreflexive_hereditarily_rigid += weight;
  }
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Relabelings of n vertices acting on pair masks, identity excluded.
std::vector<PairMaskAction> nonidentity_actions(std::size_t n) {
  std::vector<PairMaskAction> out;
  for (const auto& p : all_permutations(n)) {
    if (!p.is_identity()) out.emplace_back(n, p);
  }
  return out;
}

// If `mask` is the least mask in its isomorphism class, returns the size of
// its automorphism group; otherwise 0.
std::uint64_t canonical_stabilizer(std::uint64_t mask,
                                   const std::vector<PairMaskAction>& actions) {
  std::uint64_t stabilizer = 1;
  for (const auto& action : actions) {
    const std::uint64_t image = action.apply(mask);
    if (image < mask) return 0;
    if (image == mask) ++stabilizer;
  }
  return stabilizer;
}

// Runs body(lo, hi, row) over [0, total) split into `threads` contiguous
// chunks and sums the partial rows in chunk order.
template <typename Body>
CensusRow parallel_sum(std::uint64_t total, unsigned threads, Body body) {
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, total));
  std::vector<CensusRow> partial(workers);
  const auto bound = [&](unsigned w) {
    return w == workers ? total : total / workers * w;
  };
  if (workers == 1) {
    body(std::uint64_t{0}, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(
          [&, w] { body(bound(w), bound(w + 1), partial[w]); });
    }
    for (auto& t : pool) t.join();
  }
  CensusRow row;
  for (const auto& p : partial) add(row, p);
  return row;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

bool edge_order(const Relation& a, const Relation& b) {
  return a.edges() < b.edges();
}

}  // namespace

CensusRow census(std::size_t n, const CensusOptions& options) {
  const std::size_t bound =
      options.isomorph_rejection ? options.isomorph_max_n : options.labeled_max_n;
  if (n > bound) {
    throw ResourceLimit(
        "census bound exceeded: n=" + std::to_string(n) + " > " +
        std::to_string(bound) +
        (options.isomorph_rejection ? "" : " (isomorph rejection allows more)"));
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  CensusRow row;
  if (!options.isomorph_rejection) {
    row = parallel_sum(total, options.threads,
                       [n](std::uint64_t lo, std::uint64_t hi, CensusRow& part) {
                         for (std::uint64_t m = lo; m < hi; ++m) {
                           classify(Relation::from_mask(n, m), 1, part);
                         }
                       });
  } else {
    const auto actions = nonidentity_actions(n);
    const std::uint64_t group_order = factorial(n);
    row = parallel_sum(
        total, options.threads,
        [&](std::uint64_t lo, std::uint64_t hi, CensusRow& part) {
          for (std::uint64_t m = lo; m < hi; ++m) {
            const std::uint64_t stabilizer = canonical_stabilizer(m, actions);
            if (stabilizer == 0) continue;
            classify(Relation::from_mask(n, m), group_order / stabilizer, part);
          }
        });
  }
  row.n = n;
  if (row.total != total) {
    throw std::logic_error("census weights do not sum to 2^(n*n)");
  }
  return row;
}

const char* census_tsv_header() {
  return "n\ttotal\trigid\tstrongly_rigid\thereditarily_rigid\t"
         "irreflexive_hereditarily_rigid";
}

void write_census_tsv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << census_tsv_header() << '\n';
  for (const auto& r : rows) {
    out << r.n << '\t' << r.total << '\t' << r.rigid << '\t' << r.strongly_rigid
        << '\t' << r.hereditarily_rigid << '\t'
        << r.irreflexive_hereditarily_rigid << '\n';
  }
}

std::vector<Relation> smallest_strongly_rigid_examples(std::size_t n) {
  if (n > 5) {
    throw ResourceLimit("strongly rigid example bound exceeded: n=" +
                        std::to_string(n) + " > 5");
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::vector<Relation> out;
  if (n <= 4) {
    for (std::uint64_t m = 0; m < total; ++m) {
      Relation r = Relation::from_mask(n, m);
      if (is_strongly_rigid(r).strongly_rigid()) out.push_back(std::move(r));
    }
  } else {
    // One representative per class, then every relabeling of it. A strongly
    // rigid relation is rigid, so its n! relabelings are pairwise distinct.
    const auto actions = nonidentity_actions(n);
    const auto perms = all_permutations(n);
    for (std::uint64_t m = 0; m < total; ++m) {
      if (canonical_stabilizer(m, actions) != 1) continue;
      Relation r = Relation::from_mask(n, m);
      if (!is_strongly_rigid(r).strongly_rigid()) continue;
      for (const auto& p : perms) out.push_back(relabel(r, p));
    }
  }
  std::sort(out.begin(), out.end(), edge_order);
  return out;
}

std::vector<RigidNotHereditary> rigid_not_hereditary_examples(std::size_t n) {
  if (n > 4) {
    throw ResourceLimit("rigid-not-hereditary example bound exceeded: n=" +
                        std::to_string(n) + " > 4");
  }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::vector<RigidNotHereditary> out;
  for (std::uint64_t m = 0; m < total; ++m) {
    Relation r = Relation::from_mask(n, m);
    if (!is_rigid(r).rigid()) continue;
    HereditaryVerdict verdict = is_hereditarily_rigid(r);
    if (verdict.hereditarily_rigid()) continue;
    out.push_back({std::move(r), std::move(*verdict.witness_subset)});
  }
  std::sort(out.begin(), out.end(),
            [](const RigidNotHereditary& a, const RigidNotHereditary& b) {
              return edge_order(a.relation, b.relation);
            });
  return out;
}

}  // namespace rigidrel
