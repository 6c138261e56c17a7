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

#include "racgrowth/numeric.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "racgrowth/error.hpp"

namespace racgrowth {

namespace {

BigInt pow10(unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

BigInt parse_digits(std::string_view digits, std::string_view original) {
  if (digits.empty()) throw ParseError("malformed number '" + std::string(original) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed number '" + std::string(original) + "'");
    }
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(s.substr(0, slash), text);
    BigInt den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    out = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      BigInt magnitude = parse_digits(exp_text, text);
      if (magnitude > 100000) throw ParseError("exponent out of range in '" + std::string(text) + "'");
      exponent = magnitude.get_si();
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view whole = s.substr(0, dot);
      std::string_view frac = s.substr(dot + 1);
      if (whole.empty() && frac.empty()) throw ParseError("malformed number '" + std::string(text) + "'");
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      digits = std::string(s);
    }
    out = Rational(parse_digits(digits, text));
    if (exponent > 0) out *= Rational(pow10(static_cast<unsigned>(exponent)));
    if (exponent < 0) out /= Rational(pow10(static_cast<unsigned>(-exponent)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_decimal(const Rational& value, int places, Rounding rounding) {
  BigInt scale = pow10(static_cast<unsigned>(places));
  BigInt scaled_num = value.get_num() * scale;
  BigInt q;
  if (rounding == Rounding::kDown) {
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), value.get_den().get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), value.get_den().get_mpz_t());
  }
  bool negative = q < 0;
  if (negative) q = -q;
  std::string digits = q.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string whole = digits.substr(0, digits.size() - places);
  std::string frac = digits.substr(digits.size() - places);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = negative ? "-" : "";
  out += whole;
  if (!frac.empty()) out += "." + frac;
  return out == "-0" ? "0" : out;
}

Rational pow10_inverse(unsigned exponent) { return Rational(BigInt(1), pow10(exponent)); }

std::string approx_string(const Rational& value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, to_long_double(value));
  return buf;
}

long double to_long_double(const BigInt& value) {
  long exp = 0;
  double mantissa = mpz_get_d_2exp(&exp, value.get_mpz_t());
  return std::ldexp(static_cast<long double>(mantissa), static_cast<int>(exp));
}

long double to_long_double(const Rational& value) {
  // Keep ~64 significant bits of the quotient before converting.
  if (value == 0) return 0.0L;
  long num_bits = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2));
  long den_bits = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
  long shift = 80 - (num_bits - den_bits);
  BigInt num = value.get_num();
  BigInt den = value.get_den();
  if (shift > 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  BigInt q = num / den;
  return std::ldexp(to_long_double(q), static_cast<int>(-shift));
}

std::string abbreviate(const BigInt& value, std::size_t max_digits) {
  std::string s = value.get_str();
  std::size_t sign = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() - sign <= max_digits) return s;
  std::size_t total = s.size() - sign;
  return s.substr(0, sign + max_digits) + "...(" + std::to_string(total) + " digits)";
}

}  // namespace racgrowth
