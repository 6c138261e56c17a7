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

#ifndef RACGROWTH_NUMERIC_HPP_
#define RACGROWTH_NUMERIC_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace racgrowth {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class Rounding { kDown, kUp };

// Accepts integers, fractions ("3/7"), decimals and scientific notation
// ("1e-10", "2.5E3"). Throws ParseError.
Rational parse_rational(std::string_view text);

// Fixed-point decimal rendering with `places` fractional digits, rounded in
// the requested direction. Trailing zeros are trimmed, so the result parses
// back to a value that renders identically.
std::string to_decimal(const Rational& value, int places, Rounding rounding);

// 1 / 10^exponent
Rational pow10_inverse(unsigned exponent);

// Scientific rendering of a positive rational, for diagnostics only.
std::string approx_string(const Rational& value, int digits = 12);

long double to_long_double(const BigInt& value);
long double to_long_double(const Rational& value);

// Digits-capped rendering: values longer than `max_digits` keep their
// leading digits and report the full length.
std::string abbreviate(const BigInt& value, std::size_t max_digits = 40);

}  // namespace racgrowth

#endif  // RACGROWTH_NUMERIC_HPP_
