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

#include "racgrowth/transfer_matrix.hpp"

#include <algorithm>
#include <map>

#include "racgrowth/error.hpp"

namespace racgrowth {

TransferMatrix::TransferMatrix(std::size_t dimension,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                               std::vector<std::uint64_t> start, std::vector<std::string> names)
    : start_(std::move(start)), names_(std::move(names)) {
  if (dimension == 0) throw Error(ErrorCode::kInvalidArgument, "transfer matrix needs dimension >= 1");
  if (start_.size() != dimension) throw Error(ErrorCode::kInvalidArgument, "start vector has wrong length");
  if (!names_.empty() && names_.size() != dimension) {
    throw Error(ErrorCode::kInvalidArgument, "node name list has wrong length");
  }
  std::vector<std::map<std::uint32_t, std::uint32_t>> acc(dimension);
  for (const auto& [from, to] : edges) {
    if (from >= dimension || to >= dimension) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    ++acc[from][static_cast<std::uint32_t>(to)];
  }
  rows_.resize(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    for (const auto& [col, w] : acc[i]) rows_[i].push_back({col, w});
  }
}

std::uint64_t TransferMatrix::entry(std::size_t i, std::size_t j) const {
  for (const auto& e : rows_[i]) {
    if (e.column == j) return e.weight;
  }
  return 0;
}

std::string TransferMatrix::name(std::size_t i) const {
  return names_.empty() ? std::to_string(i) : names_[i];
}

bool TransferMatrix::is_zero_one() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Entry& e) { return e.weight == 1; });
  });
}

std::size_t TransferMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

TransferMatrix TransferMatrix::submatrix(std::span<const std::size_t> indices) const {
  std::vector<std::int64_t> position(dimension(), -1);
  for (std::size_t k = 0; k < indices.size(); ++k) position[indices[k]] = static_cast<std::int64_t>(k);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::uint64_t> start;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    for (const auto& e : rows_[indices[k]]) {
      if (position[e.column] >= 0) {
        for (std::uint32_t w = 0; w < e.weight; ++w) {
          edges.emplace_back(k, static_cast<std::size_t>(position[e.column]));
        }
      }
    }
    start.push_back(start_[indices[k]]);
    if (!names_.empty()) names.push_back(names_[indices[k]]);
  }
  return TransferMatrix(indices.size(), edges, std::move(start), std::move(names));
}

std::vector<std::vector<std::uint64_t>> TransferMatrix::dense() const {
  std::vector<std::vector<std::uint64_t>> out(dimension(), std::vector<std::uint64_t>(dimension(), 0));
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (const auto& e : rows_[i]) out[i][e.column] = e.weight;
  }
  return out;
}

std::vector<BigInt> count_words(const TransferMatrix& m, std::size_t n_max) {
  std::vector<BigInt> counts;
  counts.reserve(n_max + 1);
  counts.emplace_back(1);
  // v holds M^(l-1) 1; the count of length l is u . v.
  std::vector<BigInt> v(m.dimension(), BigInt(1));
  std::vector<BigInt> next(m.dimension());
  for (std::size_t l = 1; l <= n_max; ++l) {
    BigInt c = 0;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      if (m.start_vector()[i] != 0) c += v[i] * m.start_vector()[i];
    }
    counts.push_back(c);
    if (l == n_max) break;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      next[i] = 0;
      for (const auto& e : m.row(i)) {
        if (e.weight == 1) {
          next[i] += v[e.column];
        } else {
          next[i] += v[e.column] * e.weight;
        }
      }
    }
    std::swap(v, next);
  }
  return counts;
}

}  // namespace racgrowth
