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

#include "rigidrel/core.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "rigidrel/errors.hpp"
#include "detail/combinatorics.hpp"

namespace rigidrel {
namespace {

using detail::next_combination;

void require_within(std::size_t n, std::size_t bound, const char* what) {
  if (n > bound) {
    throw ResourceLimit(std::string(what) + " search bound exceeded: n=" +
                        std::to_string(n) + " > " + std::to_string(bound));
  }
}

using Signature = std::tuple<std::size_t, std::size_t, bool>;

// Depth-first enumeration of automorphisms in lexicographic order. The
// visitor returns false to stop the search.
template <typename Visitor>
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Relation& r, Visitor& visit)
      : r_(r),
        visit_(visit),
        n_(r.size()),
        images_(n_),
        used_(n_, false),
        signature_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      signature_[v] = {r.in_degree(v), r.out_degree(v), r.has_loop(v)};
    }
  }

  void run() { extend(0); }

 private:
  bool consistent(Vertex i, Vertex v) const {
    for (Vertex j = 0; j < i; ++j) {
      const Vertex w = images_[j];
      if (r_.has_edge(i, j) != r_.has_edge(v, w)) return false;
      if (r_.has_edge(j, i) != r_.has_edge(w, v)) return false;
    }
    return true;
  }

  bool extend(Vertex i) {
    if (i == n_) return visit_(images_);
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || signature_[v] != signature_[i] || !consistent(i, v)) {
        continue;
      }
      images_[i] = v;
      used_[v] = true;
      const bool go_on = extend(i + 1);
      used_[v] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const Relation& r_;
  Visitor& visit_;
  std::size_t n_;
  std::vector<Vertex> images_;
  std::vector<bool> used_;
  std::vector<Signature> signature_;
};

template <typename Visitor>
void for_each_automorphism(const Relation& r, Visitor&& visit) {
  AutomorphismSearch<std::remove_reference_t<Visitor>> search(r, visit);
  search.run();
}

bool is_identity_sequence(const std::vector<Vertex>& images) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] != i) return false;
  }
  return true;
}

std::optional<Permutation> first_nontrivial_automorphism(const Relation& r) {
  std::optional<Permutation> found;
  for_each_automorphism(r, [&](const std::vector<Vertex>& images) {
    if (is_identity_sequence(images)) return true;
    found.emplace(images);
    return false;
  });
  return found;
}

// Lexicographically first non-identity endomorphism, if any.
class EndomorphismSearch {
 public:
  explicit EndomorphismSearch(const Relation& r)
      : r_(r), n_(r.size()), images_(n_) {}

  std::optional<VertexMap> run() {
    extend(0);
    return found_;
  }

 private:
  bool consistent(Vertex i, Vertex v) const {
    if (r_.has_loop(i) && !r_.has_edge(v, v)) return false;
    for (Vertex j = 0; j < i; ++j) {
      const Vertex w = images_[j];
      if (r_.has_edge(i, j) && !r_.has_edge(v, w)) return false;
      if (r_.has_edge(j, i) && !r_.has_edge(w, v)) return false;
    }
    return true;
  }

  bool extend(Vertex i) {
    if (i == n_) {
      if (is_identity_sequence(images_)) return true;
      found_.emplace(images_);
      return false;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (!consistent(i, v)) continue;
      images_[i] = v;
      if (!extend(i + 1)) return false;
    }
    return true;
  }

  const Relation& r_;
  std::size_t n_;
  std::vector<Vertex> images_;
  std::optional<VertexMap> found_;
};

}  // namespace

bool is_automorphism(const Relation& r, const Permutation& p) {
  if (p.size() != r.size()) {
    throw InvalidArgument("permutation size " + std::to_string(p.size()) +
                          " does not match relation size " +
                          std::to_string(r.size()));
  }
  // p is injective on a finite set, so forward preservation of every edge
  // already gives the biconditional.
  for (const auto& [a, b] : r.edges()) {
    if (!r.has_edge(p(a), p(b))) return false;
  }
  return true;
}

bool is_endomorphism(const Relation& r, const VertexMap& f) {
  if (f.size() != r.size()) {
    throw InvalidArgument("vertex map size " + std::to_string(f.size()) +
                          " does not match relation size " +
                          std::to_string(r.size()));
  }
  for (const auto& [a, b] : r.edges()) {
    if (!r.has_edge(f(a), f(b))) return false;
  }
  return true;
}

std::vector<Permutation> automorphisms(const Relation& r,
                                       const SearchLimits& limits) {
  require_within(r.size(), limits.automorphism_max_n, "automorphism");
  std::vector<Permutation> out;
  for_each_automorphism(r, [&](const std::vector<Vertex>& images) {
    out.emplace_back(images);
    return true;
  });
  return out;
}

std::size_t automorphism_count(const Relation& r, const SearchLimits& limits) {
  require_within(r.size(), limits.automorphism_max_n, "automorphism");
  std::size_t count = 0;
  for_each_automorphism(r, [&](const std::vector<Vertex>&) {
    ++count;
    return true;
  });
  return count;
}

RigidityVerdict is_rigid(const Relation& r, const SearchLimits& limits) {
  require_within(r.size(), limits.automorphism_max_n, "automorphism");
  RigidityVerdict verdict;
  verdict.witness = first_nontrivial_automorphism(r);
  if (verdict.witness) verdict.status = RigidityStatus::NotRigid;
  return verdict;
}

StrongRigidityVerdict is_strongly_rigid(const Relation& r,
                                        const SearchLimits& limits) {
  require_within(r.size(), limits.endomorphism_max_n, "endomorphism");
  StrongRigidityVerdict verdict;
  verdict.witness = EndomorphismSearch(r).run();
  if (verdict.witness) {
    verdict.status = StrongRigidityStatus::NotStronglyRigid;
  }
  return verdict;
}

HereditaryVerdict is_hereditarily_rigid(const Relation& r,
                                        const SearchLimits& limits) {
  require_within(r.size(), limits.hereditary_max_n, "hereditary rigidity");
  const std::size_t n = r.size();
  HereditaryVerdict verdict;
  // Substructures on fewer than two vertices have no nonidentity bijection.
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Vertex> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    do {
      auto witness = first_nontrivial_automorphism(induced_substructure(r, subset));
      if (witness) {
        verdict.status = HereditaryStatus::NotHereditarilyRigid;
        verdict.witness_subset = subset;
        verdict.witness_perm = std::move(witness);
        return verdict;
      }
    } while (next_combination(subset, n));
  }
  return verdict;
}

bool is_irreflexive(const Relation& r) {
  return std::none_of(r.edges().begin(), r.edges().end(),
                      [](const Edge& e) { return e.first == e.second; });
}

Relation induced_substructure(const Relation& r,
                              std::span<const Vertex> subset) {
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex v : members) {
    if (v >= r.size()) {
      throw InvalidArgument("subset vertex " + std::to_string(v) +
                            " outside [0," + std::to_string(r.size()) + ")");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (r.has_edge(members[i], members[j])) edges.emplace_back(i, j);
    }
  }
  return Relation(members.size(), std::move(edges));
}

Relation relabel(const Relation& r, const Permutation& p) {
  if (p.size() != r.size()) {
    throw InvalidArgument("relabeling permutation size " +
                          std::to_string(p.size()) +
                          " does not match relation size " +
                          std::to_string(r.size()));
  }
  std::vector<Edge> edges;
  edges.reserve(r.edge_count());
  for (const auto& [u, v] : r.edges()) edges.emplace_back(p(u), p(v));
  return Relation(r.size(), std::move(edges));
}

}  // namespace rigidrel
