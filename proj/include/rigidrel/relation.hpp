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

// Finite binary relations on the vertex set {0, ..., n-1}, together with the
// two kinds of self-maps the rigidity searches range over.

#ifndef RIGIDREL_RELATION_HPP
#define RIGIDREL_RELATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rigidrel {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// A binary relation (directed graph, loops allowed). Immutable once built.
// Edges are kept sorted by (u, v) and unique.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);
  // Sorts and deduplicates `edges`; throws InvalidArgument when an endpoint
  // is outside [0, n).
  Relation(std::size_t n, std::vector<Edge> edges);

  // Bit u*n+v of `mask` is the pair (u, v). Requires n*n <= 64.
  static Relation from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Vertex u, Vertex v) const {
    return adjacency_[u * n_ + v] != 0;
  }
  bool has_loop(Vertex v) const { return has_edge(v, v); }
  std::size_t out_degree(Vertex v) const { return out_degree_[v]; }
  std::size_t in_degree(Vertex v) const { return in_degree_[v]; }

  // Inverse of from_mask. Requires n*n <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::size_t> out_degree_;
  std::vector<std::size_t> in_degree_;
};

// A bijection of {0, ..., n-1}, stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless `images` is a bijection on [0, size).
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, Vertex a, Vertex b);

  std::size_t size() const { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Lexicographic on the image sequence.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

// x -> outer(inner(x)). Throws InvalidArgument on a size mismatch.
Permutation compose(const Permutation& outer, const Permutation& inner);

// An arbitrary total self-map of {0, ..., n-1}.
class VertexMap {
 public:
  VertexMap() = default;
  // Throws InvalidArgument if some image is outside [0, size).
  explicit VertexMap(std::vector<Vertex> images);
  explicit VertexMap(const Permutation& p) : images_(p.images()) {}

  static VertexMap identity(std::size_t n);
  static VertexMap constant(std::size_t n, Vertex target);

  std::size_t size() const { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& images() const { return images_; }
  bool is_identity() const;

  friend auto operator<=>(const VertexMap&, const VertexMap&) = default;
  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<Vertex> images_;
};

}  // namespace rigidrel

#endif  // RIGIDREL_RELATION_HPP
