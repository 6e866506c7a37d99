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

#include "rigidrel/relation.hpp"

#include <algorithm>
#include <string>

#include "rigidrel/errors.hpp"

namespace rigidrel {

Relation::Relation(std::size_t n) : Relation(n, {}) {}

Relation::Relation(std::size_t n, std::vector<Edge> edges)
    : n_(n),
      edges_(std::move(edges)),
      adjacency_(n * n, 0),
      out_degree_(n, 0),
      in_degree_(n, 0) {
  for (const auto& [u, v] : edges_) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") has an endpoint outside [0," +
                            std::to_string(n) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[u * n + v] = 1;
    ++out_degree_[u];
    ++in_degree_[v];
  }
}

Relation Relation::from_mask(std::size_t n, std::uint64_t mask) {
  if (n * n > 64) {
    throw InvalidArgument("bitmask encoding needs n*n <= 64");
  }
  std::vector<Edge> edges;
  for (std::size_t bit = 0; bit < n * n; ++bit) {
    if ((mask >> bit) & 1U) edges.emplace_back(bit / n, bit % n);
  }
  return Relation(n, std::move(edges));
}

std::uint64_t Relation::mask() const {
  if (n_ * n_ > 64) {
    throw InvalidArgument("bitmask encoding needs n*n <= 64");
  }
  std::uint64_t m = 0;
  for (const auto& [u, v] : edges_) m |= std::uint64_t{1} << (u * n_ + v);
  return m;
}

Permutation::Permutation(std::vector<Vertex> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidArgument("image sequence is not a bijection on [0," +
                            std::to_string(images_.size()) + ")");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t n, Vertex a, Vertex b) {
  if (a >= n || b >= n) {
    throw InvalidArgument("transposition endpoint outside [0," +
                          std::to_string(n) + ")");
  }
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p = identity(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = i;
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw InvalidArgument("cannot compose permutations of different sizes");
  }
  std::vector<Vertex> images(inner.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = outer(inner(i));
  return Permutation(std::move(images));
}

VertexMap::VertexMap(std::vector<Vertex> images) : images_(std::move(images)) {
  for (Vertex v : images_) {
    if (v >= images_.size()) {
      throw InvalidArgument("vertex map image " + std::to_string(v) +
                            " outside [0," + std::to_string(images_.size()) +
                            ")");
    }
  }
}

VertexMap VertexMap::identity(std::size_t n) {
  return VertexMap(Permutation::identity(n));
}

VertexMap VertexMap::constant(std::size_t n, Vertex target) {
  return VertexMap(std::vector<Vertex>(n, target));
}

bool VertexMap::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

}  // namespace rigidrel
