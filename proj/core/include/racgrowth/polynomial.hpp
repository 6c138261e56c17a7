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

#ifndef RACGROWTH_POLYNOMIAL_HPP_
#define RACGROWTH_POLYNOMIAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "racgrowth/numeric.hpp"
#include "racgrowth/transfer_matrix.hpp"

namespace racgrowth {

// Dense integer polynomial, coefficients in ascending degree. The zero
// polynomial has no coefficients; otherwise the last coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);

  static IntPoly monomial(std::size_t degree, BigInt coefficient = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  IntPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  // Divides by the positive gcd of the coefficients.
  IntPoly primitive_part() const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // "x^4 - 2*x^2 - 2*x"
  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

inline constexpr std::size_t kDefaultCharPolyCap = 512;

// Characteristic polynomial det(xI - M), monic of degree dim(M). Exact: the
// coefficients are reconstructed by CRT from Hessenberg reductions modulo
// enough word-size primes to clear a Hadamard-type coefficient bound.
// Throws Error(kDimensionCap) above `cap`.
IntPoly char_poly(const TransferMatrix& m, std::size_t cap = kDefaultCharPolyCap);

// Sturm chain p, p', -rem(...), ... with positive contents removed.
std::vector<IntPoly> sturm_sequence(const IntPoly& p);

// Number of distinct real roots in the open interval (a, b). nullopt when
// a or b is itself a root or a >= b.
std::optional<std::size_t> count_real_roots(const IntPoly& p, const Rational& a, const Rational& b);

// Number of complex roots, with multiplicity, of modulus strictly below
// `radius` (> 0), by the Schur–Cohn transform. nullopt when a Schur–Cohn
// constant vanishes: a root on the circle, or roots paired by inversion in it.
std::optional<std::size_t> count_roots_in_disc(const IntPoly& p, const Rational& radius);

}  // namespace racgrowth

#endif  // RACGROWTH_POLYNOMIAL_HPP_
