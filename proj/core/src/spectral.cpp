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

#include "racgrowth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "racgrowth/error.hpp"

namespace racgrowth {

bool SccPartition::is_cyclic(const TransferMatrix& m, std::size_t component) const {
  const auto& members = components[component];
  if (members.size() > 1) return true;
  return m.entry(members[0], members[0]) > 0;
}

std::vector<std::size_t> SccPartition::terminal_components(const TransferMatrix& m) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    bool leaves = false;
    for (std::size_t v : components[c]) {
      for (const auto& e : m.row(v)) leaves |= component_of[e.column] != c;
    }
    if (!leaves) out.push_back(c);
  }
  return out;
}

Connectivity strongly_connected(const TransferMatrix& m) {
  // Iterative Tarjan.
  const std::size_t n = m.dimension();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> found;
  std::size_t counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto row = m.row(f.v);
      if (f.edge < row.size()) {
        std::size_t w = row[f.edge++].column;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        found.push_back(std::move(comp));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Connectivity out;
  out.partition.components = std::move(found);
  out.partition.component_of.assign(n, 0);
  for (std::size_t c = 0; c < out.partition.components.size(); ++c) {
    for (std::size_t v : out.partition.components[c]) out.partition.component_of[v] = c;
  }
  out.strongly_connected = out.partition.components.size() == 1;
  return out;
}

PeriodWitness period(const TransferMatrix& m, const std::vector<std::size_t>& component) {
  if (component.empty()) throw Error(ErrorCode::kInvalidArgument, "empty component");
  const std::size_t n = m.dimension();
  std::vector<char> inside(n, 0);
  for (std::size_t v : component) inside[v] = 1;
  if (component.size() == 1 && m.entry(component[0], component[0]) == 0) {
    throw Error(ErrorCode::kNoCycle, "component {" + m.name(component[0]) + "} has no cycle");
  }
  const std::size_t root = *std::min_element(component.begin(), component.end());
  constexpr std::int64_t kUnseen = -1;
  std::vector<std::int64_t> level(n, kUnseen);
  level[root] = 0;
  std::vector<std::size_t> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t v = queue[head];
    for (const auto& e : m.row(v)) {
      if (inside[e.column] && level[e.column] == kUnseen) {
        level[e.column] = level[v] + 1;
        queue.push_back(e.column);
      }
    }
  }
  if (queue.size() != component.size()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex subset is not strongly connected");
  }
  std::uint64_t g = 0;
  for (std::size_t v : component) {
    for (const auto& e : m.row(v)) {
      if (!inside[e.column]) continue;
      std::int64_t d = level[v] + 1 - level[e.column];
      g = std::gcd(g, static_cast<std::uint64_t>(d < 0 ? -d : d));
    }
  }
  PeriodWitness out;
  out.period = g;
  // Closed walks through the root by exact length, keeping each length that
  // lowers the running gcd until it reaches the period.
  std::vector<char> frontier(n, 0), next(n, 0);
  frontier[root] = 1;
  std::uint64_t running = 0;
  const std::uint64_t limit = static_cast<std::uint64_t>(component.size()) * component.size() + component.size() + 2;
  for (std::uint64_t len = 1; len <= limit && running != g; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t v : component) {
      if (!frontier[v]) continue;
      for (const auto& e : m.row(v)) {
        if (inside[e.column]) next[e.column] = 1;
      }
    }
    std::swap(frontier, next);
    if (frontier[root] && std::gcd(running, len) != running) {
      running = std::gcd(running, len);
      out.cycle_lengths.push_back(len);
    }
  }
  return out;
}

PrimitivityCertificate certify_primitive(const TransferMatrix& m) {
  PrimitivityCertificate cert;
  Connectivity conn = strongly_connected(m);
  cert.partition = std::move(conn.partition);
  cert.strongly_connected = conn.strongly_connected && cert.partition.is_cyclic(m, 0);
  if (cert.strongly_connected) {
    PeriodWitness w = period(m, cert.partition.components[0]);
    cert.period = w.period;
    cert.cycle_lengths = std::move(w.cycle_lengths);
    cert.primitive = w.period == 1;
  }
  return cert;
}

const char* to_string(PerronVerdict v) {
  switch (v) {
    case PerronVerdict::kPerronCertified: return "PerronCertified";
    case PerronVerdict::kRateOne: return "RateOne";
    case PerronVerdict::kRateZero: return "RateZero";
    case PerronVerdict::kNotCertified: return "NotCertified";
  }
  return "NotCertified";
}

const char* to_string(SeparationCheck s) {
  switch (s) {
    case SeparationCheck::kVerified: return "verified";
    case SeparationCheck::kSkippedDimensionCap: return "skipped (dimension cap)";
    case SeparationCheck::kInconclusive: return "inconclusive";
    case SeparationCheck::kNotApplicable: return "not applicable";
  }
  return "not applicable";
}

RateEnclosure RateEnclosure::exact(const Rational& value) {
  RateEnclosure e;
  e.lower = value;
  e.upper = value;
  e.value_hint = value.get_d();
  return e;
}

namespace {

bool is_simple_cycle(const TransferMatrix& m, const std::vector<std::size_t>& component,
                     const std::vector<std::size_t>& component_of, std::size_t c) {
  for (std::size_t v : component) {
    std::size_t internal = 0;
    for (const auto& e : m.row(v)) {
      if (component_of[e.column] == c) {
        if (e.weight != 1) return false;
        ++internal;
      }
    }
    if (internal != 1) return false;
  }
  return true;
}

std::size_t bit_length(const BigInt& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

std::size_t tolerance_bits(const Rational& tolerance) {
  // ceil(log2(1/tol)), at least 1.
  long double t = to_long_double(tolerance);
  if (!(t > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  return static_cast<std::size_t>(std::max(1.0L, std::ceil(-std::log2(t))));
}

// Enclosure for an irreducible block with at least one cycle.
RateEnclosure irreducible_enclosure(const TransferMatrix& block, bool shifted, const Rational& tolerance,
                                    const SpectralOptions& options) {
  const std::size_t n = block.dimension();
  std::size_t precision = tolerance_bits(tolerance) + 64;
  std::vector<BigInt> x(n, BigInt(1)), mx(n);
  bool have = false;
  Rational best_lower, best_upper;
  RateEnclosure out;
  std::uint64_t since_improvement = 0;
  for (std::uint64_t iter = 1;; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      mx[i] = 0;
      for (const auto& e : block.row(i)) {
        if (e.weight == 1) {
          mx[i] += x[e.column];
        } else {
          mx[i] += x[e.column] * e.weight;
        }
      }
    }
    // Locate min and max of mx_i / x_i by cross multiplication.
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (mx[i] * x[lo] < mx[lo] * x[i]) lo = i;
      if (mx[i] * x[hi] > mx[hi] * x[i]) hi = i;
    }
    Rational lower(mx[lo], x[lo]);
    Rational upper(mx[hi], x[hi]);
    lower.canonicalize();
    upper.canonicalize();
    bool improved = false;
    if (!have || lower > best_lower) {
      best_lower = lower;
      improved = true;
    }
    if (!have || upper < best_upper) {
      best_upper = upper;
      improved = true;
    }
    have = true;
    out.iterations = iter;
    if (best_upper - best_lower <= tolerance) break;
    if (iter >= options.iteration_cap) {
      out.converged = false;
      break;
    }
    since_improvement = improved ? 0 : since_improvement + 1;
    if (since_improvement > 64) {
      // Rounding floor reached before the tolerance: carry more bits.
      precision += 64;
      since_improvement = 0;
    }
    BigInt largest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (shifted) mx[i] += x[i];
      if (mx[i] > largest) largest = mx[i];
    }
    std::size_t bits = bit_length(largest);
    std::size_t shift = bits > precision ? bits - precision : 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (shift > 0) mpz_fdiv_q_2exp(x[i].get_mpz_t(), mx[i].get_mpz_t(), shift);
      else x[i] = mx[i];
      if (x[i] == 0) x[i] = 1;
    }
  }
  out.lower = best_lower;
  out.upper = best_upper;
  out.value_hint = to_long_double(Rational((best_lower + best_upper) / 2));
  return out;
}

struct BlockEnclosure {
  std::size_t component;
  RateEnclosure enclosure;
  std::uint64_t period;
  bool simple_cycle;
};

std::vector<BlockEnclosure> block_enclosures(const TransferMatrix& m, const SccPartition& partition,
                                             const Rational& tolerance, const SpectralOptions& options) {
  std::vector<BlockEnclosure> out;
  for (std::size_t c = 0; c < partition.components.size(); ++c) {
    if (!partition.is_cyclic(m, c)) continue;
    const auto& comp = partition.components[c];
    BlockEnclosure b{c, {}, 0, is_simple_cycle(m, comp, partition.component_of, c)};
    b.period = period(m, comp).period;
    if (b.simple_cycle) {
      b.enclosure = RateEnclosure::exact(1);
    } else if (comp.size() == 1) {
      b.enclosure = RateEnclosure::exact(Rational(static_cast<unsigned long>(m.entry(comp[0], comp[0]))));
    } else {
      b.enclosure = irreducible_enclosure(m.submatrix(comp), b.period != 1, tolerance, options);
      b.enclosure.non_primitive = b.period != 1;
    }
    out.push_back(std::move(b));
  }
  return out;
}

RateEnclosure combine_blocks(const std::vector<BlockEnclosure>& blocks, bool matrix_primitive,
                             const Rational& tolerance) {
  if (blocks.empty()) return RateEnclosure::exact(0);
  RateEnclosure out = blocks.front().enclosure;
  for (const auto& b : blocks) {
    if (b.enclosure.lower > out.lower) out.lower = b.enclosure.lower;
    if (b.enclosure.upper > out.upper) out.upper = b.enclosure.upper;
    out.iterations = std::max(out.iterations, b.enclosure.iterations);
  }
  out.converged = out.upper - out.lower <= tolerance;
  out.non_primitive = !matrix_primitive;
  out.value_hint = to_long_double(Rational((out.lower + out.upper) / 2));
  return out;
}

}  // namespace

RateEnclosure spectral_radius(const TransferMatrix& m, const Rational& tolerance, const SpectralOptions& options) {
  if (tolerance <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  PrimitivityCertificate cert = certify_primitive(m);
  auto blocks = block_enclosures(m, cert.partition, tolerance, options);
  return combine_blocks(blocks, cert.primitive, tolerance);
}

PerronReport perron_certificate(const TransferMatrix& m, const Rational& tolerance, const PerronOptions& options) {
  if (tolerance <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  PerronReport report;
  report.certificate = certify_primitive(m);
  const auto& partition = report.certificate.partition;
  auto blocks = block_enclosures(m, partition, tolerance, options.spectral);
  report.enclosure = combine_blocks(blocks, report.certificate.primitive, tolerance);
  if (!report.certificate.strongly_connected) report.reasons.push_back("not strongly connected");

  if (blocks.empty()) {
    report.verdict = PerronVerdict::kRateZero;
    report.reasons.push_back("no cycles: finite language, radius 0");
    return report;
  }
  if (std::all_of(blocks.begin(), blocks.end(), [](const BlockEnclosure& b) { return b.simple_cycle; })) {
    report.verdict = PerronVerdict::kRateOne;
    report.dominant_period = blocks.front().period;
    for (const auto& b : blocks) report.dominant_components.push_back(b.component);
    report.reasons.push_back("every cyclic component is a simple cycle: radius exactly 1");
    return report;
  }

  // Components that may attain the radius; tighten until a single one is left.
  Rational tol = tolerance;
  std::vector<std::size_t> candidates;
  for (int round = 0; round < 4; ++round) {
    candidates.clear();
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (blocks[k].enclosure.upper >= report.enclosure.lower) candidates.push_back(k);
    }
    if (candidates.size() == 1) break;
    tol /= Rational(1'000'000);
    blocks = block_enclosures(m, partition, tol, options.spectral);
    report.enclosure = combine_blocks(blocks, report.certificate.primitive, tolerance);
  }
  for (std::size_t k : candidates) report.dominant_components.push_back(blocks[k].component);
  if (candidates.size() != 1) {
    report.verdict = PerronVerdict::kNotCertified;
    report.reasons.push_back("radius may be attained by several components");
    return report;
  }
  const BlockEnclosure& dominant = blocks[candidates.front()];
  report.dominant_period = dominant.period;
  if (dominant.period != 1) {
    report.verdict = PerronVerdict::kNotCertified;
    report.reasons.insert(report.reasons.begin(), "period " + std::to_string(dominant.period));
    return report;
  }
  if (report.enclosure.lower <= 1) {
    report.verdict = PerronVerdict::kNotCertified;
    report.reasons.push_back("radius not certified above 1");
    return report;
  }
  report.verdict = PerronVerdict::kPerronCertified;
  if (!report.certificate.strongly_connected) {
    report.reasons.push_back("radius attained by a single primitive component");
  }

  if (!options.check_separation) return report;
  const auto& comp = partition.components[dominant.component];
  if (comp.size() > options.char_poly_cap) {
    report.separation = SeparationCheck::kSkippedDimensionCap;
    return report;
  }
  TransferMatrix block = m.submatrix(comp);
  IntPoly cp = char_poly(block, options.char_poly_cap);
  report.char_poly = cp;
  const Rational& lo = dominant.enclosure.lower;
  const Rational& hi = dominant.enclosure.upper;

  bool real_root_ok = true;
  if (lo < hi) {
    if (cp.sign_at(lo) != 0 && cp.sign_at(hi) != 0) {
      auto roots = count_real_roots(cp, lo, hi);
      real_root_ok = roots && *roots == 1;
    }
  } else {
    real_root_ok = cp.sign_at(lo) == 0;
  }

  // Strip the zero roots, then ask for deg - 1 roots inside |z| < r <= rho.
  std::size_t zeros = 0;
  while (cp.coefficient(zeros) == 0) ++zeros;
  std::vector<BigInt> shifted(cp.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros), cp.coefficients().end());
  IntPoly reduced(std::move(shifted));
  bool disc_ok = false;
  if (reduced.degree() == 1) {
    disc_ok = true;
  } else {
    for (const Rational& r : {lo, Rational(lo * Rational(999'999, 1'000'000)), Rational(lo * Rational(999, 1000))}) {
      auto inside = count_roots_in_disc(reduced, r);
      if (inside && *inside + 1 == reduced.degree()) {
        disc_ok = true;
        break;
      }
    }
  }
  report.separation = real_root_ok && disc_ok ? SeparationCheck::kVerified : SeparationCheck::kInconclusive;
  if (report.separation == SeparationCheck::kInconclusive) {
    report.reasons.push_back("dominant-root separation check inconclusive");
  }
  return report;
}

std::pair<std::vector<long double>, std::vector<long double>> perron_vectors(const TransferMatrix& m) {
  const std::size_t n = m.dimension();
  auto iterate = [&](bool transpose) {
    std::vector<long double> x(n, 1.0L), y(n);
    for (int iter = 0; iter < 200000; ++iter) {
      std::fill(y.begin(), y.end(), 0.0L);
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : m.row(i)) {
          if (transpose) {
            y[e.column] += e.weight * x[i];
          } else {
            y[i] += e.weight * x[e.column];
          }
        }
      }
      long double top = 0;
      for (std::size_t i = 0; i < n; ++i) {
        y[i] += x[i];  // M + I shares the Perron vector and is primitive
        top = std::max(top, y[i]);
      }
      long double change = 0;
      for (std::size_t i = 0; i < n; ++i) {
        y[i] /= top;
        change = std::max(change, std::fabs(y[i] - x[i]));
      }
      std::swap(x, y);
      if (change < 1e-18L) break;
    }
    return x;
  };
  return {iterate(false), iterate(true)};
}

AsymptoticConstant asymptotic_constant(const TransferMatrix& m, std::size_t window_lo, std::size_t window_hi) {
  if (window_lo > window_hi || window_lo == 0) throw Error(ErrorCode::kInvalidArgument, "bad coefficient window");
  PrimitivityCertificate cert = certify_primitive(m);
  if (!cert.primitive) throw Error(ErrorCode::kNotPrimitive, "asymptotic constant needs a primitive matrix");
  RateEnclosure enc = spectral_radius(m, pow10_inverse(15));
  if (enc.lower <= 1) throw Error(ErrorCode::kNotPrimitive, "asymptotic constant needs radius > 1");

  AsymptoticConstant out;
  out.rho = to_long_double(Rational((enc.lower + enc.upper) / 2));
  auto [r, l] = perron_vectors(m);
  const std::size_t n = m.dimension();
  long double ur = 0, l1 = 0, lr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ur += static_cast<long double>(m.start_vector()[i]) * r[i];
    l1 += l[i];
    lr += l[i] * r[i];
  }
  out.constant = ur * l1 / (lr * out.rho);

  long double residual = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long double mr = 0;
    for (const auto& e : m.row(i)) mr += e.weight * r[e.column];
    residual = std::max(residual, std::fabs(mr - out.rho * r[i]));
  }
  out.eigen_residual = residual;

  out.window_lo = window_lo;
  out.window_hi = window_hi;
  auto counts = count_words(m, window_hi);
  long double sum = 0;
  for (std::size_t k = window_lo; k <= window_hi; ++k) {
    long double ratio = to_long_double(counts[k]) / std::pow(out.rho, static_cast<long double>(k));
    out.window_ratios.push_back(ratio);
    sum += ratio;
    out.max_relative_deviation = std::max(out.max_relative_deviation, std::fabs(ratio - out.constant) / out.constant);
  }
  out.window_estimate = sum / static_cast<long double>(out.window_ratios.size());
  return out;
}

}  // namespace racgrowth
