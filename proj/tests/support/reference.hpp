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

// Independent reference computations for tests. Nothing here reuses the
// library's algorithms: counts come from dense matrix products, cliques from
// subset scans, characteristic polynomials from Faddeev–LeVerrier and group
// elements from the Tits representation.

#ifndef RACGROWTH_TESTS_REFERENCE_HPP_
#define RACGROWTH_TESTS_REFERENCE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "racgrowth/graph.hpp"
#include "racgrowth/numeric.hpp"
#include "racgrowth/polynomial.hpp"
#include "racgrowth/transfer_matrix.hpp"

namespace racgrowth::reference {

using Dense = std::vector<std::vector<BigInt>>;

inline Dense to_dense(const TransferMatrix& m) {
  Dense d(m.dimension(), std::vector<BigInt>(m.dimension(), BigInt(0)));
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) d[i][j] = static_cast<unsigned long>(m.entry(i, j));
  }
  return d;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// c_l = u^T M^(l-1) 1 by explicit matrix powers.
inline std::vector<BigInt> counts(const TransferMatrix& m, std::size_t n_max) {
  const Dense a = to_dense(m);
  const std::size_t n = a.size();
  Dense power(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<BigInt> out{BigInt(1)};
  for (std::size_t l = 1; l <= n_max; ++l) {
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) total += BigInt(static_cast<unsigned long>(m.start_vector()[i])) * power[i][j];
    out.push_back(total);
    power = multiply(power, a);
  }
  return out;
}

// det(xI - A) by Faddeev–LeVerrier; all divisions are exact over Z.
inline IntPoly faddeev_leverrier(const Dense& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  Dense m(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Dense am = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    Dense t = multiply(a, m);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += t[i][i];
    c[n - k] = -trace / BigInt(static_cast<unsigned long>(k));
  }
  return IntPoly(c);
}

// p(A) as a dense matrix (Horner).
inline Dense evaluate_at_matrix(const IntPoly& p, const Dense& a) {
  const std::size_t n = a.size();
  Dense acc(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    acc = multiply(acc, a);
    for (std::size_t i = 0; i < n; ++i) acc[i][i] += p.coefficients()[k];
  }
  return acc;
}

inline std::size_t clique_count(const DefiningGraph& g) {
  std::size_t count = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.size()); ++s) {
    count += g.is_clique(VertexSet(s)) ? 1 : 0;
  }
  return count;
}

// Graph on n vertices labelled "1".."n"; bit k of `mask` selects the k-th
// pair (i, j), i < j, in lexicographic order.
inline DefiningGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1U) edges.emplace_back(i, j);
  return DefiningGraph::from_edges(labels, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Tits representation of a RACG: s acts by x -> x - 2 B(e_s, x) e_s with
// B(e_s, e_s) = 1, B = 0 on commuting pairs and B = -1 otherwise. The
// representation is faithful, so matrices identify group elements.
class TitsGroup {
 public:
  using Mat = std::vector<long long>;

  explicit TitsGroup(const DefiningGraph& g) : n_(g.size()) {
    for (std::size_t s = 0; s < n_; ++s) {
      Mat m = identity();
      for (std::size_t t = 0; t < n_; ++t) {
        const long long b = t == s ? 1 : (g.adjacent(s, t) ? 0 : -1);
        m[s * n_ + t] -= 2 * b;
      }
      gens_.push_back(m);
    }
  }

  std::size_t rank() const { return n_; }

  Mat identity() const {
    Mat m(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1;
    return m;
  }

  Mat times(const Mat& a, std::size_t s) const {
    const Mat& b = gens_[s];
    Mat c(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (a[i * n_ + k] != 0)
          for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
    return c;
  }

  Mat evaluate(const std::vector<std::size_t>& word) const {
    Mat m = identity();
    for (std::size_t s : word) m = times(m, s);
    return m;
  }

 private:
  std::size_t n_;
  std::vector<Mat> gens_;
};

// Word length and shortlex-least geodesic of every element of length <= n_max.
inline std::map<TitsGroup::Mat, std::pair<std::size_t, std::vector<std::size_t>>> tits_ball(
    const TitsGroup& group, std::size_t n_max) {
  std::map<TitsGroup::Mat, std::pair<std::size_t, std::vector<std::size_t>>> ball;
  ball[group.identity()] = {0, {}};
  // Words in each layer stay sorted, so the first hit is shortlex-least.
  std::vector<std::pair<std::vector<std::size_t>, TitsGroup::Mat>> layer{{{}, group.identity()}};
  for (std::size_t l = 1; l <= n_max; ++l) {
    std::vector<std::pair<std::vector<std::size_t>, TitsGroup::Mat>> next;
    for (const auto& [word, elem] : layer) {
      for (std::size_t s = 0; s < group.rank(); ++s) {
        TitsGroup::Mat e = group.times(elem, s);
        if (ball.count(e)) continue;
        std::vector<std::size_t> w = word;
        w.push_back(s);
        ball[e] = {l, w};
        next.emplace_back(std::move(w), std::move(e));
      }
    }
    layer = std::move(next);
  }
  return ball;
}

// Spherical and geodesic counts by breadth-first search over the Tits
// representation, counting geodesic paths into each element.
inline std::pair<std::vector<BigInt>, std::vector<BigInt>> tits_counts(const DefiningGraph& g, std::size_t n_max) {
  TitsGroup group(g);
  std::map<TitsGroup::Mat, std::size_t> seen{{group.identity(), 0}};
  std::map<TitsGroup::Mat, BigInt> layer{{group.identity(), BigInt(1)}};
  std::vector<BigInt> a{BigInt(1)}, b{BigInt(1)};
  for (std::size_t l = 1; l <= n_max; ++l) {
    std::map<TitsGroup::Mat, BigInt> next;
    for (const auto& [elem, paths] : layer) {
      for (std::size_t s = 0; s < g.size(); ++s) {
        TitsGroup::Mat e = group.times(elem, s);
        auto it = seen.find(e);
        if (it != seen.end() && it->second < l) continue;
        seen.emplace(e, l);
        next[e] += paths;
      }
    }
    BigInt geodesics = 0;
    for (const auto& [elem, paths] : next) geodesics += paths;
    a.push_back(BigInt(static_cast<unsigned long>(next.size())));
    b.push_back(geodesics);
    layer = std::move(next);
  }
  return {a, b};
}

inline std::vector<BigInt> big(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace racgrowth::reference

#endif  // RACGROWTH_TESTS_REFERENCE_HPP_
