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

#ifndef RACGROWTH_SPECTRAL_HPP_
#define RACGROWTH_SPECTRAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "racgrowth/numeric.hpp"
#include "racgrowth/polynomial.hpp"
#include "racgrowth/transfer_matrix.hpp"

namespace racgrowth {

// Strongly connected components, each sorted, ordered by least vertex.
struct SccPartition {
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;

  // A component with at least one internal edge (a self-loop counts).
  bool is_cyclic(const TransferMatrix& m, std::size_t component) const;
  // Components with no edge leaving them.
  std::vector<std::size_t> terminal_components(const TransferMatrix& m) const;
};

struct Connectivity {
  bool strongly_connected = false;
  SccPartition partition;
};

Connectivity strongly_connected(const TransferMatrix& m);

struct PeriodWitness {
  std::uint64_t period = 0;
  // Closed-walk lengths through the component's least vertex whose gcd is
  // the period.
  std::vector<std::uint64_t> cycle_lengths;
};

// Period of one strongly connected component. Throws Error(kNoCycle) for a
// single vertex without a self-loop, kInvalidArgument if `component` is not
// strongly connected.
PeriodWitness period(const TransferMatrix& m, const std::vector<std::size_t>& component);

struct PrimitivityCertificate {
  bool strongly_connected = false;
  SccPartition partition;
  // Zero when the matrix has no cycle through a strongly connected whole.
  std::uint64_t period = 0;
  std::vector<std::uint64_t> cycle_lengths;
  bool primitive = false;
};

PrimitivityCertificate certify_primitive(const TransferMatrix& m);

// Rigorous two-sided bound on the spectral radius.
struct RateEnclosure {
  Rational lower;
  Rational upper;
  double value_hint = 0.0;
  bool converged = true;        // width <= requested tolerance
  bool non_primitive = false;   // some dominant block is imprimitive or the matrix reducible
  std::uint64_t iterations = 0;

  Rational width() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  static RateEnclosure exact(const Rational& value);
};

struct SpectralOptions {
  std::uint64_t iteration_cap = 1'000'000;
};

inline Rational default_tolerance() { return pow10_inverse(10); }

// Collatz–Wielandt enclosure: for any positive x, min (Mx)_i/x_i <= rho <=
// max (Mx)_i/x_i. The vectors x come from an integer power iteration
// (M on primitive blocks, M + I on imprimitive ones) with all-ones start,
// rescaled to a fixed number of bits; each bound is evaluated exactly.
// Reducible matrices are handled block by block. A nilpotent matrix yields
// [0, 0]. On hitting the iteration cap the best enclosure is returned with
// converged = false.
RateEnclosure spectral_radius(const TransferMatrix& m, const Rational& tolerance = default_tolerance(),
                              const SpectralOptions& options = {});

enum class PerronVerdict { kPerronCertified, kRateOne, kRateZero, kNotCertified };
const char* to_string(PerronVerdict v);

enum class SeparationCheck { kVerified, kSkippedDimensionCap, kInconclusive, kNotApplicable };
const char* to_string(SeparationCheck s);

struct PerronReport {
  PerronVerdict verdict = PerronVerdict::kNotCertified;
  RateEnclosure enclosure;
  PrimitivityCertificate certificate;
  // Indices (into certificate.partition.components) of the cyclic
  // components whose radius may equal the matrix radius.
  std::vector<std::size_t> dominant_components;
  std::uint64_t dominant_period = 0;
  SeparationCheck separation = SeparationCheck::kNotApplicable;
  std::optional<IntPoly> char_poly;  // of the dominant block, when computed
  std::vector<std::string> reasons;
};

struct PerronOptions {
  SpectralOptions spectral;
  std::size_t char_poly_cap = kDefaultCharPolyCap;
  bool check_separation = true;
};

// Verdicts:
//  - RateZero for a nilpotent matrix (finite language);
//  - RateOne when every cyclic component is a simple directed cycle
//    (radius exactly 1, polynomially bounded counts);
//  - PerronCertified when the radius is attained by a single primitive
//    component with radius > 1; the char-poly separation check (Sturm on
//    the enclosure, Schur–Cohn count on the disc of radius `lower`) is
//    attached when the block fits under the dimension cap;
//  - NotCertified otherwise, with reasons.
PerronReport perron_certificate(const TransferMatrix& m, const Rational& tolerance = default_tolerance(),
                                const PerronOptions& options = {});

struct AsymptoticConstant {
  // a_n ~ C rho^n with C = (u.r)(l.1) / ((l.r) rho).
  long double constant = 0;
  long double rho = 0;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
  // counts[n] / rho^n over the window.
  std::vector<long double> window_ratios;
  long double window_estimate = 0;      // mean of window_ratios
  long double max_relative_deviation = 0;  // of window ratios from `constant`
  long double eigen_residual = 0;       // max |Mr - rho r| / |r|
};

// Throws Error(kNotPrimitive) unless m is primitive with radius > 1.
AsymptoticConstant asymptotic_constant(const TransferMatrix& m, std::size_t window_lo = 30,
                                       std::size_t window_hi = 40);

// Right and left Perron vectors (long double, normalised to max entry 1) of
// an irreducible matrix, by power iteration on M + I.
std::pair<std::vector<long double>, std::vector<long double>> perron_vectors(const TransferMatrix& m);

}  // namespace racgrowth

#endif  // RACGROWTH_SPECTRAL_HPP_
