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

#include "rigidrel/construct.hpp"

#include <algorithm>
#include <set>

#include "rigidrel/errors.hpp"

namespace rigidrel {
namespace {

std::string join_indices(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

// Index of the first s_n separating x from y. x != y.
std::size_t first_separating_index(const CantorPoint& x, const CantorPoint& y) {
  for (std::size_t n = 0;; ++n) {
    const std::string s = prefix_code(n);
    if (x.extends(s) != y.extends(s)) return n;
  }
}

void require_distinct(std::span<const CantorPoint> points) {
  std::set<CantorPoint> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second) {
      throw PreconditionViolation("points are not pairwise distinct: \"" +
                                  p.bits() + "\" occurs twice");
    }
  }
}

void require_common_length(std::span<const CantorPoint> points) {
  for (const auto& p : points) {
    if (p.length() != points.front().length()) {
      throw InvalidArgument("points must share one bit length; got \"" +
                            points.front().bits() + "\" and \"" + p.bits() +
                            "\"");
    }
  }
}

void require_valid_spine(const SpineDesignation& spine, std::size_t carrier) {
  std::vector<Vertex> all = spine.z_chain;
  all.push_back(spine.z_star);
  for (Vertex v : all) {
    if (v >= carrier) {
      throw InvalidArgument("spine index " + std::to_string(v) +
                            " outside carrier of size " +
                            std::to_string(carrier));
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidArgument("spine indices are not pairwise distinct");
  }
}

void require_separated(std::span<const CantorPoint> points,
                       std::size_t chain_length) {
  if (auto pair = first_unseparated_pair(points, chain_length)) {
    throw PreconditionViolation(
        "points \"" + points[pair->first].bits() + "\" and \"" +
        points[pair->second].bits() + "\" are not separated by s_0..s_" +
        (chain_length == 0 ? std::string("(none)")
                           : std::to_string(chain_length - 1)) +
        "; lengthen the chain");
  }
}

void require_base_hypotheses(const Relation& base,
                             const ConstructOptions& options) {
  if (!options.check_hypotheses) return;
  for (const auto& [u, v] : base.edges()) {
    if (u == v) {
      throw HypothesisViolation("base relation is not irreflexive: loop at " +
                                std::to_string(u));
    }
  }
  const HereditaryVerdict verdict = is_hereditarily_rigid(base, options.limits);
  if (!verdict.hereditarily_rigid()) {
    throw HypothesisViolation(
        "base relation is not hereditarily rigid: substructure " +
        join_indices(*verdict.witness_subset) +
        " has a nontrivial automorphism");
  }
}

std::vector<CantorPoint> first_coordinates(std::span<const LabeledPair> pairs) {
  std::vector<CantorPoint> points;
  points.reserve(pairs.size());
  for (const auto& p : pairs) points.push_back(p.point);
  return points;
}

void require_valid_pairs(std::span<const LabeledPair> pairs,
                         const Relation& base) {
  std::set<LabeledPair> seen;
  for (const auto& p : pairs) {
    if (p.label >= base.size()) {
      throw InvalidArgument("label " + std::to_string(p.label) +
                            " outside base of size " +
                            std::to_string(base.size()));
    }
    if (!seen.insert(p).second) {
      throw PreconditionViolation("pairs are not pairwise distinct: (\"" +
                                  p.point.bits() + "\"," +
                                  std::to_string(p.label) + ") occurs twice");
    }
  }
  if (!pairs.empty()) require_common_length(first_coordinates(pairs));
}

// Clauses shared by both spine constructions: the loop at z*, every chain
// vertex below z*, and the chain itself.
void add_spine_edges(const SpineDesignation& spine, std::vector<Edge>& edges) {
  edges.emplace_back(spine.z_star, spine.z_star);
  for (std::size_t n = 0; n < spine.z_chain.size(); ++n) {
    edges.emplace_back(spine.z_chain[n], spine.z_star);
    if (n + 1 < spine.z_chain.size()) {
      edges.emplace_back(spine.z_chain[n], spine.z_chain[n + 1]);
    }
  }
}

}  // namespace

CantorPoint::CantorPoint(std::string bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidArgument("a Cantor point needs >= 1 bit");
  if (bits_.find_first_not_of("01") != std::string::npos) {
    throw InvalidArgument("a Cantor point is a string over {0,1}; got \"" +
                          bits_ + "\"");
  }
}

std::string prefix_code(std::size_t index) {
  // Strings of length L occupy indices [2^L - 1, 2^(L+1) - 1).
  std::size_t length = 0;
  while (index + 1 >= (std::size_t{2} << length)) ++length;
  const std::size_t value = index + 1 - (std::size_t{1} << length);
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

std::vector<PrefixCode> prefix_enumeration(std::size_t count) {
  std::vector<PrefixCode> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back({i, prefix_code(i)});
  return out;
}

bool SpineDesignation::contains(Vertex v) const {
  return v == z_star ||
         std::find(z_chain.begin(), z_chain.end(), v) != z_chain.end();
}

Relation rigid_linear_order(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Relation(n, std::move(edges));
}

Relation ordinal_relation(std::size_t gamma) { return rigid_linear_order(gamma); }

std::optional<std::pair<std::size_t, std::size_t>> first_unseparated_pair(
    std::span<const CantorPoint> points, std::size_t chain_length) {
  require_distinct(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (first_separating_index(points[i], points[j]) >= chain_length) {
        return std::pair{i, j};
      }
    }
  }
  return std::nullopt;
}

bool separation_check(std::span<const CantorPoint> points,
                      std::size_t chain_length) {
  return !first_unseparated_pair(points, chain_length).has_value();
}

std::size_t minimal_separating_length(std::span<const CantorPoint> points) {
  require_distinct(points);
  std::size_t needed = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      needed = std::max(needed, first_separating_index(points[i], points[j]) + 1);
    }
  }
  return needed;
}

Relation cantor_relation(std::span<const CantorPoint> points,
                         const SpineDesignation& spine) {
  require_distinct(points);
  if (points.empty()) throw InvalidArgument("the carrier must contain z*");
  require_common_length(points);
  require_valid_spine(spine, points.size());

  std::vector<CantorPoint> outside;
  std::vector<Vertex> outside_index;
  for (Vertex v = 0; v < points.size(); ++v) {
    if (!spine.contains(v)) {
      outside.push_back(points[v]);
      outside_index.push_back(v);
    }
  }
  require_separated(outside, spine.chain_length());

  std::vector<Edge> edges;
  add_spine_edges(spine, edges);
  for (std::size_t n = 0; n < spine.z_chain.size(); ++n) {
    const std::string s = prefix_code(n);
    for (std::size_t k = 0; k < outside.size(); ++k) {
      if (outside[k].extends(s)) {
        edges.emplace_back(spine.z_chain[n], outside_index[k]);
      }
    }
  }
  return Relation(points.size(), std::move(edges));
}

Relation product_relation_main(std::span<const LabeledPair> pairs,
                               const Relation& base,
                               const SpineDesignation& spine,
                               const ConstructOptions& options) {
  if (pairs.empty()) throw InvalidArgument("the carrier must contain z*");
  require_valid_pairs(pairs, base);
  require_valid_spine(spine, pairs.size());
  require_base_hypotheses(base, options);

  std::vector<Vertex> outside;
  for (Vertex v = 0; v < pairs.size(); ++v) {
    if (!spine.contains(v)) outside.push_back(v);
  }
  std::vector<CantorPoint> reals;
  for (Vertex v : outside) reals.push_back(pairs[v].point);
  std::sort(reals.begin(), reals.end());
  reals.erase(std::unique(reals.begin(), reals.end()), reals.end());
  require_separated(reals, spine.chain_length());

  std::vector<Edge> edges;
  add_spine_edges(spine, edges);
  for (std::size_t n = 0; n < spine.z_chain.size(); ++n) {
    const std::string s = prefix_code(n);
    for (Vertex v : outside) {
      if (pairs[v].point.extends(s)) edges.emplace_back(spine.z_chain[n], v);
    }
  }
  for (Vertex u : outside) {
    for (Vertex v : outside) {
      if (base.has_edge(pairs[u].label, pairs[v].label)) edges.emplace_back(u, v);
    }
  }
  return Relation(pairs.size(), std::move(edges));
}

Relation product_relation_lex(std::span<const LabeledPair> pairs,
                              const Relation& base,
                              const ConstructOptions& options) {
  require_valid_pairs(pairs, base);
  require_base_hypotheses(base, options);

  std::vector<Edge> edges;
  for (Vertex u = 0; u < pairs.size(); ++u) {
    for (Vertex v = 0; v < pairs.size(); ++v) {
      const auto& x = pairs[u];
      const auto& y = pairs[v];
      // Equal-length strings: string order is the dyadic order.
      if (x.point.bits() < y.point.bits() ||
          (x.point == y.point && base.has_edge(x.label, y.label))) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Relation(pairs.size(), std::move(edges));
}

Relation transfer_relation(const Relation& r, const Permutation& bijection) {
  return relabel(r, bijection);
}

}  // namespace rigidrel
