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

#include "racgrowth/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "racgrowth/automaton.hpp"
#include "racgrowth/error.hpp"
#include "racgrowth/transfer_matrix.hpp"

namespace racgrowth {

const char* to_string(FactorClass c) {
  switch (c) {
    case FactorClass::kFinite: return "Finite";
    case FactorClass::kZ2: return "Z2";
    case FactorClass::kDinfinity: return "Dinfinity";
    case FactorClass::kZfactor: return "Zfactor";
    case FactorClass::kGeneral: return "General";
  }
  return "General";
}

FactorClass factor_class_from_string(std::string_view text) {
  for (auto c : {FactorClass::kFinite, FactorClass::kZ2, FactorClass::kDinfinity, FactorClass::kZfactor,
                 FactorClass::kGeneral}) {
    if (text == to_string(c)) return c;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown factor classification '" + std::string(text) + "'");
}

Rate Rate::exact(long value) {
  Rate r;
  r.enclosure = RateEnclosure::exact(Rational(value));
  r.verdict = value == 0 ? PerronVerdict::kRateZero
              : value == 1 ? PerronVerdict::kRateOne
                           : PerronVerdict::kPerronCertified;
  return r;
}

namespace {

DefiningGraph working_graph(const GroupSpec& spec) {
  return spec.kind == GroupKind::kRacg ? spec.graph : double_graph(spec.graph);
}

struct FactorPlan {
  VertexSet vertices;
  FactorClass classification;
};

std::vector<FactorPlan> plan_factors(const GroupSpec& spec) {
  std::vector<FactorPlan> plans;
  const auto components = complement_components(spec.graph);
  if (spec.kind == GroupKind::kRacg) {
    if (spec.graph.size() == 1) return {{spec.graph.all(), FactorClass::kZ2}};
    // Vertices commuting with everything generate one finite factor.
    VertexSet central;
    for (VertexSet c : components) {
      if (c.size() == 1) {
        central = central | c;
      } else {
        plans.push_back({c, c.size() == 2 ? FactorClass::kDinfinity : FactorClass::kGeneral});
      }
    }
    if (!central.empty()) plans.push_back({central, FactorClass::kFinite});
  } else {
    for (VertexSet c : components) {
      plans.push_back({c, c.size() == 1 ? FactorClass::kZfactor : FactorClass::kGeneral});
    }
  }
  std::sort(plans.begin(), plans.end(),
            [](const FactorPlan& a, const FactorPlan& b) { return a.vertices.min() < b.vertices.min(); });
  return plans;
}

struct GeneralMatrices {
  TransferMatrix shortlex;
  TransferMatrix geodesic;
  bool tree_order = false;
};

// The shortlex automaton can have dead ends in an arbitrary order; the
// complement spanning-tree order always gives a primitive matrix.
GeneralMatrices factor_matrices(const GroupSpec& spec, VertexSet vertices, std::uint64_t state_cap) {
  GroupSpec sub{spec.graph.induced(vertices), spec.kind};
  DefiningGraph work = working_graph(sub);
  GeneralMatrices m{prune(build_automaton(work, AutomatonKind::kShortlex, state_cap)),
                    prune(build_automaton(work, AutomatonKind::kGeodesic, state_cap))};
  if (!certify_primitive(m.shortlex).primitive) {
    const auto order = complement_tree_order(work);
    m.shortlex = prune(build_automaton(reordered(work, order), AutomatonKind::kShortlex, state_cap));
    m.tree_order = true;
  }
  return m;
}

Rate rate_of(const PerronReport& report) { return {report.enclosure, report.verdict}; }

Rate combine_max(const std::vector<Rate>& rates) {
  Rate out;
  out.enclosure = rates.front().enclosure;
  for (const auto& r : rates) {
    out.enclosure.lower = std::max(out.enclosure.lower, r.enclosure.lower);
    out.enclosure.upper = std::max(out.enclosure.upper, r.enclosure.upper);
    out.enclosure.converged = out.enclosure.converged && r.enclosure.converged;
    out.enclosure.non_primitive = out.enclosure.non_primitive || r.enclosure.non_primitive;
    out.enclosure.iterations = std::max(out.enclosure.iterations, r.enclosure.iterations);
  }
  out.enclosure.value_hint = to_long_double(Rational((out.enclosure.lower + out.enclosure.upper) / 2));
  if (out.enclosure.upper == 0) {
    out.verdict = PerronVerdict::kRateZero;
  } else if (out.enclosure.lower == 1 && out.enclosure.upper == 1) {
    out.verdict = PerronVerdict::kRateOne;
  } else {
    // The maximum is one of the candidate factor rates.
    out.verdict = PerronVerdict::kPerronCertified;
    for (const auto& r : rates) {
      if (r.enclosure.upper >= out.enclosure.lower && r.verdict != PerronVerdict::kPerronCertified) {
        out.verdict = PerronVerdict::kNotCertified;
      }
    }
  }
  return out;
}

// Perron numbers are closed under sums, and so is {Perron numbers} ∪ {1}
// once at least two non-zero terms are present.
Rate combine_sum(const std::vector<Rate>& rates) {
  Rate out;
  out.enclosure = RateEnclosure::exact(0);
  std::size_t nonzero = 0;
  bool certified = true;
  for (const auto& r : rates) {
    out.enclosure.lower += r.enclosure.lower;
    out.enclosure.upper += r.enclosure.upper;
    out.enclosure.converged = out.enclosure.converged && r.enclosure.converged;
    out.enclosure.non_primitive = out.enclosure.non_primitive || r.enclosure.non_primitive;
    out.enclosure.iterations = std::max(out.enclosure.iterations, r.enclosure.iterations);
    if (r.verdict == PerronVerdict::kNotCertified) certified = false;
    if (r.verdict != PerronVerdict::kRateZero) ++nonzero;
  }
  out.enclosure.value_hint = to_long_double(Rational((out.enclosure.lower + out.enclosure.upper) / 2));
  if (!certified) {
    out.verdict = PerronVerdict::kNotCertified;
  } else if (nonzero == 0) {
    out.verdict = PerronVerdict::kRateZero;
  } else if (out.enclosure.lower == 1 && out.enclosure.upper == 1) {
    out.verdict = PerronVerdict::kRateOne;
  } else {
    out.verdict = PerronVerdict::kPerronCertified;
  }
  return out;
}

ConstantEstimate estimate_constant(const GeneralMatrices& m, const std::vector<BigInt>& a,
                                   const std::vector<BigInt>& b, const RateEnclosure& delta,
                                   std::size_t lo, std::size_t hi) {
  ConstantEstimate c;
  c.window_lo = lo;
  c.window_hi = hi;
  c.eigen_estimate = asymptotic_constant(m.geodesic, lo, hi).constant /
                     asymptotic_constant(m.shortlex, lo, hi).constant;
  const Rational d = (delta.lower + delta.upper) / 2;
  Rational power(1);
  for (std::size_t n = 1; n < lo; ++n) power *= d;
  long double sum = 0;
  for (std::size_t n = lo; n <= hi; ++n) {
    power *= d;
    const Rational r = Rational(b[n]) / (power * Rational(a[n]));
    c.ratios.push_back(to_long_double(r));
    sum += c.ratios.back();
  }
  c.window_estimate = sum / static_cast<long double>(c.ratios.size());
  for (std::size_t i = 1; i < c.ratios.size(); ++i) {
    c.max_successive_change =
        std::max(c.max_successive_change, std::fabs(c.ratios[i] - c.ratios[i - 1]) / c.ratios[i - 1]);
  }
  c.discrepancy = std::fabs(c.eigen_estimate - c.window_estimate) / c.window_estimate;
  return c;
}

RateEnclosure ratio_enclosure(const Rate& alpha, const Rate& beta) {
  RateEnclosure d;
  d.lower = beta.enclosure.lower / alpha.enclosure.upper;
  d.upper = beta.enclosure.upper / alpha.enclosure.lower;
  d.value_hint = to_long_double(Rational((d.lower + d.upper) / 2));
  d.converged = alpha.enclosure.converged && beta.enclosure.converged;
  return d;
}

}  // namespace

std::pair<std::vector<BigInt>, std::vector<BigInt>> growth_coefficients(const GroupSpec& spec,
                                                                        std::size_t n_max,
                                                                        std::uint64_t state_cap) {
  DefiningGraph work = working_graph(spec);
  return {count_words(build_automaton(work, AutomatonKind::kShortlex, state_cap), n_max),
          count_words(build_automaton(work, AutomatonKind::kGeodesic, state_cap), n_max)};
}

bool theorem_e_hypothesis(const GroupSpec& spec) {
  const DefiningGraph& g = spec.graph;
  if (spec.kind == GroupKind::kRaag) return !g.is_edgeless();
  // Γ̄ is a complete graph plus isolated vertices exactly when its
  // non-isolated vertices are pairwise non-adjacent in Γ.
  VertexSet moving;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.star(v).size() + 1 < g.size()) moving = moving.with(v);
  }
  for (std::size_t u : moving.members()) {
    if (!(g.star(u) & moving).empty()) return true;
  }
  return false;
}

GrowthReport analyze(const GroupSpec& spec, const AnalyzeOptions& options) {
  if (options.terms < 1) throw Error(ErrorCode::kInvalidArgument, "terms must be at least 1");
  if (options.tolerance <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (options.window_lo < 1 || options.window_hi < options.window_lo) {
    throw Error(ErrorCode::kInvalidArgument, "invalid asymptotic window");
  }
  GrowthReport report;
  report.kind = spec.kind;
  report.order_used = spec.graph.labels();

  PerronOptions perron;
  perron.check_separation = options.certify;

  std::optional<GeneralMatrices> single_general;
  const auto plans = plan_factors(spec);
  for (const auto& plan : plans) {
    FactorReport f;
    f.vertices = plan.vertices;
    for (std::size_t v : plan.vertices.members()) f.labels.push_back(spec.graph.label(v));
    f.classification = plan.classification;
    switch (plan.classification) {
      case FactorClass::kFinite:
      case FactorClass::kZ2:
        f.alpha = f.beta = Rate::exact(0);
        break;
      case FactorClass::kDinfinity:
      case FactorClass::kZfactor:
        f.alpha = f.beta = Rate::exact(1);
        break;
      case FactorClass::kGeneral: {
        GeneralMatrices m = factor_matrices(spec, plan.vertices, options.state_cap);
        f.alpha_certificate = perron_certificate(m.shortlex, options.tolerance, perron);
        f.beta_certificate = perron_certificate(m.geodesic, options.tolerance, perron);
        f.alpha = rate_of(*f.alpha_certificate);
        f.beta = rate_of(*f.beta_certificate);
        if (m.tree_order) {
          std::string labels;
          for (const auto& l : f.labels) labels += (labels.empty() ? "" : ",") + l;
          report.notes.push_back("shortlex automaton on {" + labels +
                                 "} is reducible in the given order; alpha certified in the complement "
                                 "spanning-tree order");
        }
        if (plans.size() == 1) single_general = std::move(m);
        break;
      }
    }
    report.factors.push_back(std::move(f));
  }

  std::vector<Rate> alphas, betas;
  for (const auto& f : report.factors) {
    alphas.push_back(f.alpha);
    betas.push_back(f.beta);
  }
  report.alpha = combine_max(alphas);
  report.beta = combine_sum(betas);

  const bool asymptotics = options.asymptotics && single_general && report.alpha.enclosure.lower > 0;
  std::size_t n_max = std::max(options.terms, options.oracle_terms);
  if (asymptotics) n_max = std::max(n_max, options.window_hi);
  auto [a, b] = growth_coefficients(spec, n_max, options.state_cap);

  if (asymptotics) {
    report.delta = ratio_enclosure(report.alpha, report.beta);
    report.constant = estimate_constant(*single_general, a, b, *report.delta, options.window_lo, options.window_hi);
  } else if (options.asymptotics && plans.size() > 1) {
    report.notes.push_back("complement is disconnected: delta and C are not reported");
  }
  if (options.oracle_terms > 0) {
    auto layers = oracle::cayley_layers(spec, options.oracle_terms, options.frontier_cap);
    OracleCheck check{options.oracle_terms, true};
    for (std::size_t n = 0; n <= options.oracle_terms; ++n) {
      check.agrees = check.agrees && layers.spherical[n] == a[n] && layers.geodesic[n] == b[n];
    }
    report.oracle = check;
  }
  if (spec.kind == GroupKind::kRaag) report.notes.push_back("rates and coefficients computed on the doubled graph");

  a.resize(options.terms + 1);
  b.resize(options.terms + 1);
  report.a_coeffs = std::move(a);
  report.b_coeffs = std::move(b);
  return report;
}

TheoremECheck theorem_e_check(const GroupSpec& spec, const GrowthReport& report, const TheoremEOptions& options) {
  if (!theorem_e_hypothesis(spec)) {
    throw Error(ErrorCode::kHypothesisNotMet,
                spec.kind == GroupKind::kRacg
                    ? "complement graph is a complete graph plus isolated vertices"
                    : "defining graph has no edges");
  }
  TheoremECheck check;
  check.alpha = report.alpha;
  check.beta = report.beta;
  check.tolerance_used = std::max(report.alpha.enclosure.width(), report.beta.enclosure.width());
  if (check.tolerance_used == 0) check.tolerance_used = default_tolerance();

  AnalyzeOptions tighter;
  tighter.terms = 1;
  tighter.certify = false;
  tighter.asymptotics = false;
  tighter.state_cap = options.state_cap;
  while (!(check.alpha.enclosure.upper < check.beta.enclosure.lower)) {
    tighter.tolerance = check.tolerance_used / Rational(1'000'000);
    if (tighter.tolerance < options.finest_tolerance) break;
    GrowthReport refined = analyze(spec, tighter);
    check.alpha = refined.alpha;
    check.beta = refined.beta;
    check.tolerance_used = tighter.tolerance;
  }
  check.inequality_certified = check.alpha.enclosure.upper < check.beta.enclosure.lower;

  const bool single_general = report.factors.size() == 1 &&
                              report.factors.front().classification == FactorClass::kGeneral;
  if (!single_general) {
    check.skip_reason = "complement is disconnected: only beta > alpha is checked";
    return check;
  }
  if (report.constant && report.constant->window_lo == options.window_lo &&
      report.constant->window_hi == options.window_hi) {
    check.delta = report.delta;
    check.constant = report.constant;
  } else {
    AnalyzeOptions windowed;
    windowed.terms = 1;
    windowed.certify = false;
    windowed.window_lo = options.window_lo;
    windowed.window_hi = options.window_hi;
    windowed.state_cap = options.state_cap;
    windowed.tolerance = check.tolerance_used;
    GrowthReport refined = analyze(spec, windowed);
    check.delta = refined.delta;
    check.constant = refined.constant;
  }
  check.asymptotic_checked = check.constant.has_value();
  if (!check.asymptotic_checked) check.skip_reason = "no primitive dominant block";
  return check;
}

}  // namespace racgrowth
