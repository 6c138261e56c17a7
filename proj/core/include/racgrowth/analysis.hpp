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

#ifndef RACGROWTH_ANALYSIS_HPP_
#define RACGROWTH_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "racgrowth/graph.hpp"
#include "racgrowth/numeric.hpp"
#include "racgrowth/oracles.hpp"
#include "racgrowth/spectral.hpp"

namespace racgrowth {

enum class FactorClass { kFinite, kZ2, kDinfinity, kZfactor, kGeneral };

const char* to_string(FactorClass c);
FactorClass factor_class_from_string(std::string_view text);

struct Rate {
  RateEnclosure enclosure;
  PerronVerdict verdict = PerronVerdict::kNotCertified;

  static Rate exact(long value);
};

// One direct factor: a connected component of the complement graph (RACG
// vertices adjacent to everything are gathered into a single Finite factor).
struct FactorReport {
  VertexSet vertices;
  std::vector<std::string> labels;
  FactorClass classification = FactorClass::kGeneral;
  Rate alpha;
  Rate beta;
  // General factors only: shortlex and geodesic certificates.
  std::optional<PerronReport> alpha_certificate;
  std::optional<PerronReport> beta_certificate;
};

struct ConstantEstimate {
  // b_n ~ C delta^n a_n. eigen_estimate is C_beta / C_alpha from the Perron
  // vectors; window_estimate is the mean of r_n = b_n / (delta^n a_n).
  long double eigen_estimate = 0;
  long double window_estimate = 0;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
  std::vector<long double> ratios;
  long double max_successive_change = 0;
  long double discrepancy = 0;  // |eigen - window| / window
};

struct OracleCheck {
  std::size_t terms = 0;
  bool agrees = false;
};

struct GrowthReport {
  GroupKind kind = GroupKind::kRacg;
  std::vector<std::string> order_used;
  std::vector<FactorReport> factors;
  Rate alpha;
  Rate beta;
  std::vector<BigInt> a_coeffs;
  std::vector<BigInt> b_coeffs;
  std::optional<RateEnclosure> delta;
  std::optional<ConstantEstimate> constant;
  std::optional<OracleCheck> oracle;
  std::vector<std::string> notes;
};

struct AnalyzeOptions {
  std::size_t terms = 10;
  Rational tolerance = default_tolerance();
  // Attach the char-poly separation check to General factors.
  bool certify = true;
  // Compute delta and C when the complement is connected.
  bool asymptotics = true;
  std::size_t window_lo = 30;
  std::size_t window_hi = 40;
  std::uint64_t state_cap = kDefaultCliqueCap;
  // Cross-check a_n, b_n against the Cayley-graph oracle up to this length.
  std::size_t oracle_terms = 0;
  std::uint64_t frontier_cap = oracle::kDefaultFrontierCap;
};

GrowthReport analyze(const GroupSpec& spec, const AnalyzeOptions& options = {});

// Whole-group counts a_0..a_n (shortlex) and b_0..b_n (geodesic), from the
// automata of Γ, or of its double for a RAAG.
std::pair<std::vector<BigInt>, std::vector<BigInt>> growth_coefficients(
    const GroupSpec& spec, std::size_t n_max, std::uint64_t state_cap = kDefaultCliqueCap);

// RACG: the complement is not a complete graph plus isolated vertices.
// RAAG: the defining graph has an edge.
bool theorem_e_hypothesis(const GroupSpec& spec);

struct TheoremECheck {
  bool inequality_certified = false;
  Rational tolerance_used;
  Rate alpha;
  Rate beta;
  bool asymptotic_checked = false;
  std::string skip_reason;
  std::optional<RateEnclosure> delta;
  std::optional<ConstantEstimate> constant;
};

struct TheoremEOptions {
  std::size_t window_lo = 30;
  std::size_t window_hi = 40;
  // Tolerance is divided by 10^6 per round until the enclosures separate.
  Rational finest_tolerance = pow10_inverse(60);
  std::uint64_t state_cap = kDefaultCliqueCap;
};

// Throws Error(kHypothesisNotMet) when theorem_e_hypothesis fails.
TheoremECheck theorem_e_check(const GroupSpec& spec, const GrowthReport& report,
                              const TheoremEOptions& options = {});

}  // namespace racgrowth

#endif  // RACGROWTH_ANALYSIS_HPP_
