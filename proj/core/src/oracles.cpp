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

#include "racgrowth/oracles.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "racgrowth/error.hpp"

namespace racgrowth::oracle {

namespace {

using Count = unsigned __int128;

void add_checked(Count& acc, Count value) {
  if (__builtin_add_overflow(acc, value, &acc)) {
    throw Error(ErrorCode::kInvariantViolation, "geodesic path count overflow");
  }
}

BigInt to_big(Count value) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(value >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(value)));
  return (hi << 64) + lo;
}

}  // namespace

WordProblem::WordProblem(GroupSpec spec) : spec_(std::move(spec)), n_(spec_.graph.size()) {
  if (alphabet_size() > 127) throw Error(ErrorCode::kInvalidArgument, "alphabet too large for the oracle");
}

std::size_t WordProblem::vertex_of(std::uint8_t letter) const {
  if (spec_.kind == GroupKind::kRacg) return letter;
  return letter < n_ ? n_ - 1 - letter : letter - n_;
}

std::uint8_t WordProblem::inverse(std::uint8_t letter) const {
  if (spec_.kind == GroupKind::kRacg) return letter;
  std::size_t v = vertex_of(letter);
  return static_cast<std::uint8_t>(letter < n_ ? n_ + v : n_ - 1 - v);
}

bool WordProblem::commute(std::uint8_t a, std::uint8_t b) const {
  if (a == b) return false;
  std::size_t u = vertex_of(a), v = vertex_of(b);
  return u != v && spec_.graph.adjacent(u, v);
}

Word WordProblem::reduce(Word w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 1; j < w.size() && !changed; ++j) {
      const auto b = static_cast<std::uint8_t>(w[j]);
      for (std::size_t i = j; i-- > 0;) {
        const auto a = static_cast<std::uint8_t>(w[i]);
        if (a == inverse(b)) {
          w.erase(j, 1);
          w.erase(i, 1);
          changed = true;
          break;
        }
        if (!commute(a, b)) break;
      }
    }
  }
  return w;
}

Word WordProblem::least_in_class(const Word& w) const {
  Word best = w;
  std::unordered_set<Word> seen{w};
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    if (cur < best) best = cur;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (!commute(static_cast<std::uint8_t>(cur[k]), static_cast<std::uint8_t>(cur[k + 1]))) continue;
      Word next = cur;
      std::swap(next[k], next[k + 1]);
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return best;
}

Word WordProblem::canonical(const Word& w) const { return least_in_class(reduce(w)); }

std::string WordProblem::to_string(const Word& w) const {
  std::string out;
  for (char c : w) {
    auto letter = static_cast<std::uint8_t>(c);
    if (!out.empty()) out += ' ';
    out += spec_.graph.label(vertex_of(letter));
    if (spec_.kind == GroupKind::kRaag && letter < n_) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

LayerCounts cayley_layers(const GroupSpec& spec, std::size_t n_max, std::uint64_t frontier_cap) {
  WordProblem wp(spec);
  LayerCounts out;
  out.spherical.emplace_back(1);
  out.geodesic.emplace_back(1);
  // Canonical word -> number of geodesic paths from the identity.
  std::unordered_map<Word, Count> layer{{Word(), 1}};
  for (std::size_t len = 0; len < n_max; ++len) {
    std::unordered_map<Word, Count> next;
    // Sorted traversal keeps the exploration order independent of hashing.
    std::vector<const std::pair<const Word, Count>*> ordered;
    ordered.reserve(layer.size());
    for (const auto& entry : layer) ordered.push_back(&entry);
    std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) { return a->first < b->first; });
    for (const auto* entry : ordered) {
      for (std::size_t s = 0; s < wp.alphabet_size(); ++s) {
        Word w = entry->first;
        w.push_back(static_cast<char>(s));
        Word reduced = wp.reduce(std::move(w));
        if (reduced.size() != len + 1) continue;
        add_checked(next[wp.least_in_class(reduced)], entry->second);
      }
      if (next.size() > frontier_cap) throw FrontierCap(frontier_cap, len + 1);
    }
    Count paths = 0;
    for (const auto& [word, count] : next) add_checked(paths, count);
    out.spherical.emplace_back(static_cast<unsigned long>(next.size()));
    out.geodesic.push_back(to_big(paths));
    layer = std::move(next);
  }
  return out;
}

std::vector<BigInt> cayley_counts(const GroupSpec& spec, std::size_t n_max, std::uint64_t frontier_cap) {
  return cayley_layers(spec, n_max, frontier_cap).spherical;
}

std::vector<BigInt> geodesic_counts(const GroupSpec& spec, std::size_t n_max, std::uint64_t frontier_cap) {
  return cayley_layers(spec, n_max, frontier_cap).geodesic;
}

std::vector<BigInt> geodesic_counts_by_enumeration(const GroupSpec& spec, std::size_t n_max,
                                                   std::uint64_t word_cap) {
  WordProblem wp(spec);
  const std::size_t k = wp.alphabet_size();
  std::vector<BigInt> out{BigInt(1)};
  std::uint64_t examined = 0;
  for (std::size_t len = 1; len <= n_max; ++len) {
    std::vector<std::size_t> digits(len, 0);
    std::uint64_t count = 0;
    if (k == 0) {
      out.emplace_back(0);
      continue;
    }
    while (true) {
      if (++examined > word_cap) throw FrontierCap(word_cap, len);
      Word w;
      for (auto d : digits) w.push_back(static_cast<char>(d));
      if (wp.reduce(w).size() == len) ++count;
      std::size_t pos = len;
      while (pos > 0 && ++digits[pos - 1] == k) digits[--pos] = 0;
      if (pos == 0) break;
    }
    out.emplace_back(static_cast<unsigned long>(count));
  }
  return out;
}

RationalSeries steinberg_rational(const GroupSpec& spec, std::uint64_t clique_cap) {
  if (spec.kind != GroupKind::kRacg) {
    throw Error(ErrorCode::kInvalidArgument, "the clique growth formula applies to RACGs");
  }
  std::vector<std::size_t> by_size(spec.graph.size() + 1, 0);
  by_size[0] = 1;
  for (VertexSet c : enumerate_cliques(spec.graph, clique_cap)) ++by_size[c.size()];
  std::size_t m = 0;
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    if (by_size[k] != 0) m = k;
  }
  const IntPoly one_plus_t(std::vector<BigInt>{BigInt(1), BigInt(1)});
  const IntPoly minus_t(std::vector<BigInt>{BigInt(0), BigInt(-1)});
  auto power = [](const IntPoly& base, std::size_t e) {
    IntPoly out(std::vector<BigInt>{BigInt(1)});
    for (std::size_t i = 0; i < e; ++i) out = out * base;
    return out;
  };
  IntPoly denominator;
  for (std::size_t k = 0; k <= m; ++k) {
    if (by_size[k] == 0) continue;
    IntPoly term = power(minus_t, k) * power(one_plus_t, m - k) *
                   IntPoly(std::vector<BigInt>{BigInt(static_cast<unsigned long>(by_size[k]))});
    denominator = denominator + term;
  }
  return RationalSeries{power(one_plus_t, m), denominator};
}

std::vector<BigInt> expand_series(const IntPoly& num, const IntPoly& den, std::size_t n_max) {
  const BigInt d0 = den.coefficient(0);
  if (d0 != 1 && d0 != -1) throw Error(ErrorCode::kInvalidArgument, "series denominator must have constant term +-1");
  std::vector<BigInt> f(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    BigInt acc = num.coefficient(k);
    for (std::size_t j = 1; j <= k && j <= den.degree(); ++j) acc -= den.coefficient(j) * f[k - j];
    f[k] = d0 == 1 ? acc : BigInt(-acc);
  }
  return f;
}

std::vector<BigInt> steinberg_series(const GroupSpec& spec, std::size_t n_max, std::uint64_t clique_cap) {
  RationalSeries series = steinberg_rational(spec, clique_cap);
  return expand_series(series.numerator, series.denominator, n_max);
}

}  // namespace racgrowth::oracle
