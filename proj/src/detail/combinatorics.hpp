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

#ifndef RIGIDREL_DETAIL_COMBINATORICS_HPP
#define RIGIDREL_DETAIL_COMBINATORICS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rigidrel/relation.hpp"

namespace rigidrel::detail {

// Advances `combo` (strictly increasing, values < n) to the next
// k-combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (combo[pos] < n - k + pos) {
      ++combo[pos];
      for (std::size_t j = pos + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// The action of a vertex permutation on pair bitmasks (bit u*n+v is the pair
// (u,v)), tabulated per byte of the mask. Requires n*n <= 64.
class PairMaskAction {
 public:
  PairMaskAction(std::size_t n, const Permutation& p)
      : bytes_((n * n + 7) / 8), tables_(bytes_) {
    for (std::size_t k = 0; k < bytes_; ++k) {
      for (std::size_t byte = 0; byte < 256; ++byte) {
        std::uint64_t image = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          const std::size_t cell = 8 * k + bit;
          if (cell >= n * n || !((byte >> bit) & 1U)) continue;
          image |= std::uint64_t{1} << (p(cell / n) * n + p(cell % n));
        }
        tables_[k][byte] = image;
      }
    }
  }

  std::uint64_t apply(std::uint64_t mask) const {
    std::uint64_t image = 0;
    for (std::size_t k = 0; k < bytes_; ++k) {
      image |= tables_[k][(mask >> (8 * k)) & 0xFFU];
    }
    return image;
  }

 private:
  std::size_t bytes_;
  std::vector<std::array<std::uint64_t, 256>> tables_;
};

}  // namespace rigidrel::detail

#endif  // RIGIDREL_DETAIL_COMBINATORICS_HPP
