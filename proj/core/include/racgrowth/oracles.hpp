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

#ifndef RACGROWTH_ORACLES_HPP_
#define RACGROWTH_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "racgrowth/graph.hpp"
#include "racgrowth/numeric.hpp"
#include "racgrowth/polynomial.hpp"

// Brute-force ground truth. Nothing in here touches the automata: group
// elements are handled as reduced words, normalised by exhaustive search
// over commutation classes.
namespace racgrowth::oracle {

// Letters are small integers (stored as chars) whose numeric order is the
// shortlex order.
// RACG: letter = vertex index. RAAG: letter n-1-v is v^-1 and n+v is v, so
// every inverse precedes every positive letter, positives follow the vertex
// order and inverses reverse it.
using Word = std::string;

inline constexpr std::uint64_t kDefaultFrontierCap = 2'000'000;

class WordProblem {
 public:
  explicit WordProblem(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  std::size_t alphabet_size() const { return spec_.kind == GroupKind::kRacg ? n_ : 2 * n_; }
  std::size_t vertex_of(std::uint8_t letter) const;
  std::uint8_t inverse(std::uint8_t letter) const;
  // Distinct letters on adjacent vertices.
  bool commute(std::uint8_t a, std::uint8_t b) const;

  // Deletes cancelling pairs (a letter and its inverse separated only by
  // letters commuting with it) until none is left. The result is geodesic.
  Word reduce(Word w) const;
  // Least word of the commutation class of a reduced word, by exhaustive
  // exploration of the class.
  Word least_in_class(const Word& w) const;
  // Shortlex-least geodesic representative of the element w evaluates to.
  Word canonical(const Word& w) const;

  std::string to_string(const Word& w) const;

 private:
  GroupSpec spec_;
  std::size_t n_;
};

struct LayerCounts {
  std::vector<BigInt> spherical;  // a_0..a_n
  std::vector<BigInt> geodesic;   // b_0..b_n
};

// Breadth-first generation of canonical forms by length, carrying the
// number of geodesic paths to each element. Throws FrontierCap when a
// layer grows past `frontier_cap` elements.
LayerCounts cayley_layers(const GroupSpec& spec, std::size_t n_max,
                          std::uint64_t frontier_cap = kDefaultFrontierCap);

std::vector<BigInt> cayley_counts(const GroupSpec& spec, std::size_t n_max,
                                  std::uint64_t frontier_cap = kDefaultFrontierCap);

// Geodesic path counts from the identity in the Cayley graph.
std::vector<BigInt> geodesic_counts(const GroupSpec& spec, std::size_t n_max,
                                    std::uint64_t frontier_cap = kDefaultFrontierCap);

// Literal version: every word of length l over the symmetric alphabet is
// evaluated and kept when its canonical form still has length l. Cost is
// alphabet^l, so `word_cap` bounds the total number of words examined.
std::vector<BigInt> geodesic_counts_by_enumeration(const GroupSpec& spec, std::size_t n_max,
                                                   std::uint64_t word_cap = kDefaultFrontierCap);

// Growth series of a RACG as a rational function f = numerator/denominator
// with 1/f(t) = sum over cliques s (empty one included) of (-t/(1+t))^|s|,
// i.e. numerator (1+t)^m and denominator sum_s (-t)^|s| (1+t)^(m-|s|) for
// m the clique number. This is the standard right-angled specialisation of
// Steinberg's formula, taken from the literature rather than derived here.
struct RationalSeries {
  IntPoly numerator;
  IntPoly denominator;
};

RationalSeries steinberg_rational(const GroupSpec& spec, std::uint64_t clique_cap = kDefaultCliqueCap);

std::vector<BigInt> steinberg_series(const GroupSpec& spec, std::size_t n_max,
                                     std::uint64_t clique_cap = kDefaultCliqueCap);

// Power-series coefficients 0..n_max of num/den; den(0) must be +-1.
std::vector<BigInt> expand_series(const IntPoly& num, const IntPoly& den, std::size_t n_max);

}  // namespace racgrowth::oracle

#endif  // RACGROWTH_ORACLES_HPP_
