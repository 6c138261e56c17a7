// Copyright 2026 The racgrowth Authors
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

#ifndef RACGROWTH_TRANSFER_MATRIX_HPP_
#define RACGROWTH_TRANSFER_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "racgrowth/numeric.hpp"

namespace racgrowth {

// Non-negative integer matrix stored by rows as (column, weight) pairs, plus
// a start vector. Automata produce 0/1 matrices; raw digraph fixtures may
// carry parallel edges, which become weights > 1.
class TransferMatrix {
 public:
  struct Entry {
    std::uint32_t column;
    std::uint32_t weight;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  TransferMatrix() = default;

  // Builds from an edge list; parallel edges accumulate. Requires dimension
  // >= 1, all endpoints in range and start.size() == dimension.
  TransferMatrix(std::size_t dimension,
                 const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                 std::vector<std::uint64_t> start, std::vector<std::string> names = {});

  std::size_t dimension() const { return rows_.size(); }
  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
  std::uint64_t entry(std::size_t i, std::size_t j) const;
  const std::vector<std::uint64_t>& start_vector() const { return start_; }
  // Optional human-readable node names (empty when not supplied).
  const std::vector<std::string>& names() const { return names_; }
  std::string name(std::size_t i) const;

  bool is_zero_one() const;
  std::size_t nonzero_count() const;

  // Principal submatrix on `indices` (kept in the given order). The start
  // vector is restricted the same way.
  TransferMatrix submatrix(std::span<const std::size_t> indices) const;

  // Dense row-major copy.
  std::vector<std::vector<std::uint64_t>> dense() const;

  friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;

 private:
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::uint64_t> start_;
  std::vector<std::string> names_;
};

// Exact word counts c_0..c_{n_max}: c_0 = 1 and c_l = u^T M^(l-1) 1.
std::vector<BigInt> count_words(const TransferMatrix& m, std::size_t n_max);

}  // namespace racgrowth

#endif  // RACGROWTH_TRANSFER_MATRIX_HPP_
