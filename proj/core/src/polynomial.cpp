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

#include "racgrowth/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "racgrowth/error.hpp"

namespace racgrowth {

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly IntPoly::monomial(std::size_t degree, BigInt coefficient) {
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = std::move(coefficient);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

int IntPoly::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

IntPoly IntPoly::primitive_part() const {
  if (coeffs_.empty()) return *this;
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return *this;
  }
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) mpz_divexact(out[k].get_mpz_t(), coeffs_[k].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += variable;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime_32(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Descending primes below 2^31.
std::vector<u64> primes(std::size_t count) {
  std::vector<u64> out;
  for (u64 n = (u64{1} << 31) - 1; out.size() < count; n -= 2) {
    if (is_prime_32(n)) out.push_back(n);
  }
  return out;
}

// det(xI - A) mod p via reduction to upper Hessenberg form.
std::vector<u64> char_poly_mod(std::vector<std::vector<u64>> h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && h[pivot][m - 1] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      std::swap(h[pivot], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][m]);
    }
    u64 t = inv_mod(h[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      u64 u = mul_mod(h[i][m - 1], t, p);
      if (u == 0) continue;
      // row_i -= u * row_m ; col_m += u * col_i
      for (std::size_t j = 0; j < n; ++j) h[i][j] = (h[i][j] + p - mul_mod(u, h[m][j], p)) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][m] = (h[r][m] + mul_mod(u, h[r][i], p)) % p;
    }
  }
  // p_0 = 1; p_{m+1} = (x - h_mm) p_m - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_i
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<u64> next(m + 2, 0);
    for (std::size_t k = 0; k <= m; ++k) {
      next[k + 1] = (next[k + 1] + polys[m][k]) % p;
      next[k] = (next[k] + p - mul_mod(h[m][m], polys[m][k], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = mul_mod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      u64 factor = mul_mod(h[i][m], prod, p);
      if (factor == 0) continue;
      for (std::size_t k = 0; k < polys[i].size(); ++k) {
        next[k] = (next[k] + p - mul_mod(factor, polys[i][k], p)) % p;
      }
    }
    polys[m + 1] = std::move(next);
  }
  return polys[n];
}

// Upper bound on log2 |c_k| for all coefficients of det(xI - M): the
// coefficient of x^(n-k) is a sum of C(n,k) principal k-minors, each at most
// the product of its k largest row norms.
double coefficient_log2_bound(const TransferMatrix& m) {
  const std::size_t n = m.dimension();
  std::vector<double> norms;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (const auto& e : m.row(i)) s += static_cast<double>(e.weight) * e.weight;
    norms.push_back(s > 0 ? 0.5 * std::log2(s) : -1e300);
  }
  std::sort(norms.rbegin(), norms.rend());
  double best = 0;
  double prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += norms[k - 1];
    double log_binom = (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
    best = std::max(best, log_binom + std::max(prefix, 0.0));
  }
  return best;
}

}  // namespace

IntPoly char_poly(const TransferMatrix& m, std::size_t cap) {
  const std::size_t n = m.dimension();
  if (n > cap) {
    throw Error(ErrorCode::kDimensionCap,
                "characteristic polynomial of a " + std::to_string(n) + "x" + std::to_string(n) +
                    " matrix exceeds the dimension cap " + std::to_string(cap));
  }
  // Need the product of primes to exceed twice the bound (signed lift).
  double bits_needed = coefficient_log2_bound(m) + 2.0;
  std::size_t prime_count = static_cast<std::size_t>(std::ceil(bits_needed / 30.0)) + 1;
  const auto ps = primes(prime_count);
  auto dense = m.dense();

  std::vector<BigInt> residue(n + 1, BigInt(0));
  BigInt modulus = 1;
  for (u64 p : ps) {
    std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = dense[i][j] % p;
    }
    std::vector<u64> c = char_poly_mod(std::move(a), p);
    BigInt inv;
    BigInt pz(static_cast<unsigned long>(p));
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      // x = r + M * ((c - r) * M^-1 mod p)
      BigInt diff = BigInt(static_cast<unsigned long>(c[k])) - residue[k];
      BigInt t = (diff * inv) % pz;
      if (t < 0) t += pz;
      residue[k] += modulus * t;
    }
    modulus *= pz;
  }
  BigInt half = modulus / 2;
  for (auto& r : residue) {
    if (r > half) r -= modulus;
  }
  IntPoly out(std::move(residue));
  if (out.degree() != n || out.leading() != 1) {
    throw Error(ErrorCode::kInvariantViolation, "characteristic polynomial is not monic of full degree");
  }
  return out;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = b.degree();
  const BigInt& lb = b.leading();
  std::size_t steps = 0;
  while (!r.empty() && r.size() - 1 >= db) {
    std::size_t shift = r.size() - 1 - db;
    BigInt lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lr * bc[k];
    while (!r.empty() && r.back() == 0) r.pop_back();
    ++steps;
  }
  // Pad to the full exponent so the sign factor is lc(b)^(da - db + 1).
  std::size_t full = a.degree() >= db ? a.degree() - db + 1 : 0;
  for (; steps < full; ++steps) {
    for (auto& c : r) c *= lb;
  }
  return IntPoly(std::move(r));
}

int variations(const std::vector<IntPoly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.primitive_part());
  IntPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive_part());
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    std::size_t exponent = a.degree() - b.degree() + 1;
    bool factor_negative = b.leading() < 0 && (exponent % 2 == 1);
    // Next term is -rem(a, b) = -r / lc(b)^exponent, up to a positive factor.
    IntPoly next = factor_negative ? r : IntPoly() - r;
    chain.push_back(next.primitive_part());
  }
  return chain;
}

std::optional<std::size_t> count_real_roots(const IntPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b) || p.is_zero()) return std::nullopt;
  if (p.sign_at(a) == 0 || p.sign_at(b) == 0) return std::nullopt;
  auto chain = sturm_sequence(p);
  int diff = variations(chain, a) - variations(chain, b);
  return static_cast<std::size_t>(diff);
}

std::optional<std::size_t> count_roots_in_disc(const IntPoly& p, const Rational& radius) {
  if (p.is_zero()) return std::nullopt;
  if (radius <= 0) throw Error(ErrorCode::kInvalidArgument, "disc radius must be positive");
  const std::size_t n = p.degree();
  // q(z) = Q^n p(P z / Q) has integer coefficients c_k P^k Q^(n-k).
  const BigInt& num = radius.get_num();
  const BigInt& den = radius.get_den();
  std::vector<BigInt> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt pk, qk;
    mpz_pow_ui(pk.get_mpz_t(), num.get_mpz_t(), k);
    mpz_pow_ui(qk.get_mpz_t(), den.get_mpz_t(), n - k);
    q[k] = p.coefficient(k) * pk * qk;
  }
  IntPoly f = IntPoly(std::move(q)).primitive_part();

  // N(f0) = sign * N(f_k) + offset.
  long sign = 1;
  long offset = 0;
  while (f.degree() > 0) {
    const std::size_t d = f.degree();
    const BigInt& a0 = f.coefficient(0);
    const BigInt& ad = f.leading();
    BigInt delta = a0 * a0 - ad * ad;
    if (delta == 0) return std::nullopt;
    // T f = a0 f - ad f*, with f* the reversed polynomial.
    std::vector<BigInt> t(d + 1);
    for (std::size_t k = 0; k <= d; ++k) t[k] = a0 * f.coefficient(k) - ad * f.coefficient(d - k);
    IntPoly next = IntPoly(std::move(t)).primitive_part();
    if (delta < 0) {
      offset += sign * static_cast<long>(d);
      sign = -sign;
    }
    f = std::move(next);
  }
  return static_cast<std::size_t>(offset);
}

}  // namespace racgrowth
