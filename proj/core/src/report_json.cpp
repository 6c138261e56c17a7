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

#include "racgrowth/report_json.hpp"

#include <algorithm>
#include <cmath>

#include "racgrowth/error.hpp"
#include "racgrowth/graph_io.hpp"

namespace racgrowth {

namespace {

using nlohmann::json;

constexpr int kMinPlaces = 24;
constexpr int kMaxPlaces = 400;

int places_for(const RateEnclosure& e) {
  if (e.width() <= 0) return kMinPlaces;
  const double w = to_long_double(e.width());
  const int needed = w > 0 ? static_cast<int>(std::ceil(-std::log10(w))) + 6 : kMaxPlaces;
  return std::clamp(needed, kMinPlaces, kMaxPlaces);
}

// Fractional digits of a terminating decimal, or -1.
int terminating_digits(const Rational& q) {
  BigInt den = q.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  return den == 1 ? std::max(twos, fives) : -1;
}

// An endpoint already written with at most one digit more than the width
// calls for is kept exact, so that a parsed report renders identically.
std::string endpoint(const Rational& q, int places, Rounding rounding) {
  const int digits = terminating_digits(q);
  if (digits > places && digits <= places + 1) places = digits;
  return to_decimal(q, places, rounding);
}

json enclosure_json(const RateEnclosure& e) {
  const int places = places_for(e);
  return {{"lower", endpoint(e.lower, places, Rounding::kDown)},
          {"upper", endpoint(e.upper, places, Rounding::kUp)},
          {"hint", e.value_hint},
          {"converged", e.converged}};
}

json rate_json(const Rate& r) {
  json j = enclosure_json(r.enclosure);
  j["verdict"] = to_string(r.verdict);
  return j;
}

json certificate_json(const PerronReport& p) {
  return {{"strongly_connected", p.certificate.strongly_connected},
          {"period", p.certificate.period},
          {"primitive", p.certificate.primitive},
          {"separation", to_string(p.separation)},
          {"reasons", p.reasons}};
}

json coeffs_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

// Reading side.

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing \"" + key + "\"");
  return *it;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

bool bool_at(const json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected a boolean");
  return j.get<bool>();
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::uint64_t unsigned_at(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::vector<std::string> strings_at(const json& j, const std::string& where) {
  std::vector<std::string> out;
  const json& a = array_at(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string_at(a[i], where + "/" + std::to_string(i)));
  return out;
}

Rational decimal_at(const json& j, const std::string& where) {
  const std::string text = string_at(j, where);
  try {
    return parse_rational(text);
  } catch (const Error&) {
    fail(where, "not a decimal number: '" + text + "'");
  }
}

RateEnclosure enclosure_from(const json& j, const std::string& where) {
  RateEnclosure e;
  e.lower = decimal_at(member(j, "lower", where), where + "/lower");
  e.upper = decimal_at(member(j, "upper", where), where + "/upper");
  if (e.lower > e.upper) fail(where, "lower exceeds upper");
  if (e.lower < 0) fail(where, "negative rate");
  if (j.contains("hint")) e.value_hint = number_at(j["hint"], where + "/hint");
  if (j.contains("converged")) e.converged = bool_at(j["converged"], where + "/converged");
  return e;
}

PerronVerdict verdict_from(const json& j, const std::string& where) {
  const std::string text = string_at(j, where);
  for (auto v : {PerronVerdict::kPerronCertified, PerronVerdict::kRateOne, PerronVerdict::kRateZero,
                 PerronVerdict::kNotCertified}) {
    if (text == to_string(v)) return v;
  }
  fail(where, "unknown verdict '" + text + "'");
}

Rate rate_from(const json& j, const std::string& where) {
  Rate r;
  r.enclosure = enclosure_from(j, where);
  r.verdict = verdict_from(member(j, "verdict", where), where + "/verdict");
  return r;
}

PerronReport certificate_from(const json& j, const std::string& where) {
  PerronReport p;
  p.certificate.strongly_connected =
      bool_at(member(j, "strongly_connected", where), where + "/strongly_connected");
  p.certificate.period = unsigned_at(member(j, "period", where), where + "/period");
  p.certificate.primitive = bool_at(member(j, "primitive", where), where + "/primitive");
  const std::string sep = string_at(member(j, "separation", where), where + "/separation");
  bool known = false;
  for (auto s : {SeparationCheck::kVerified, SeparationCheck::kSkippedDimensionCap, SeparationCheck::kInconclusive,
                 SeparationCheck::kNotApplicable}) {
    if (sep == to_string(s)) {
      p.separation = s;
      known = true;
    }
  }
  if (!known) fail(where + "/separation", "unknown value '" + sep + "'");
  p.reasons = strings_at(member(j, "reasons", where), where + "/reasons");
  return p;
}

std::vector<BigInt> coeffs_from(const json& j, const std::string& where) {
  std::vector<BigInt> out;
  const json& a = array_at(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const std::string text = string_at(a[i], at);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail(at, "not a non-negative integer: '" + text + "'");
    }
    out.emplace_back(text);
  }
  if (out.empty() || out.front() != 1) fail(where, "coefficient list must start with 1");
  return out;
}

}  // namespace

nlohmann::json report_to_json(const GrowthReport& report) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = to_string(report.kind);
  j["order_used"] = report.order_used;
  json factors = json::array();
  for (const auto& f : report.factors) {
    json jf = {{"vertices", f.labels},
               {"classification", to_string(f.classification)},
               {"alpha", rate_json(f.alpha)},
               {"beta", rate_json(f.beta)}};
    if (f.alpha_certificate) jf["alpha_certificate"] = certificate_json(*f.alpha_certificate);
    if (f.beta_certificate) jf["beta_certificate"] = certificate_json(*f.beta_certificate);
    factors.push_back(std::move(jf));
  }
  j["factors"] = std::move(factors);
  j["alpha"] = rate_json(report.alpha);
  j["beta"] = rate_json(report.beta);
  if (report.delta) {
    json d = enclosure_json(*report.delta);
    d.erase("converged");
    j["delta"] = std::move(d);
  }
  if (report.constant) {
    const auto& c = *report.constant;
    json ratios = json::array();
    for (long double r : c.ratios) ratios.push_back(static_cast<double>(r));
    j["C"] = {{"eigen_estimate", static_cast<double>(c.eigen_estimate)},
              {"window_estimate", static_cast<double>(c.window_estimate)},
              {"window", {c.window_lo, c.window_hi}},
              {"ratios", std::move(ratios)},
              {"max_successive_change", static_cast<double>(c.max_successive_change)},
              {"discrepancy", static_cast<double>(c.discrepancy)}};
  }
  if (report.oracle) j["oracle"] = {{"terms", report.oracle->terms}, {"agrees", report.oracle->agrees}};
  j["a_coeffs"] = coeffs_json(report.a_coeffs);
  j["b_coeffs"] = coeffs_json(report.b_coeffs);
  j["notes"] = report.notes;
  return j;
}

GrowthReport report_from_json(const nlohmann::json& j) {
  GrowthReport r;
  if (!j.is_object()) fail("", "report must be an object");
  if (unsigned_at(member(j, "schema_version", ""), "/schema_version") != kReportSchemaVersion) {
    fail("/schema_version", "unsupported schema version");
  }
  try {
    r.kind = group_kind_from_string(string_at(member(j, "kind", ""), "/kind"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail("/kind", e.what());
  }
  r.order_used = strings_at(member(j, "order_used", ""), "/order_used");

  const json& factors = array_at(member(j, "factors", ""), "/factors");
  if (factors.empty()) fail("/factors", "at least one factor expected");
  std::vector<bool> seen(r.order_used.size(), false);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string at = "/factors/" + std::to_string(i);
    const json& jf = factors[i];
    FactorReport f;
    f.labels = strings_at(member(jf, "vertices", at), at + "/vertices");
    for (const auto& label : f.labels) {
      auto it = std::find(r.order_used.begin(), r.order_used.end(), label);
      if (it == r.order_used.end()) fail(at + "/vertices", "unknown vertex '" + label + "'");
      const auto v = static_cast<std::size_t>(it - r.order_used.begin());
      if (seen[v]) fail(at + "/vertices", "vertex '" + label + "' appears in two factors");
      seen[v] = true;
      f.vertices = f.vertices.with(v);
    }
    const std::string cls = string_at(member(jf, "classification", at), at + "/classification");
    try {
      f.classification = factor_class_from_string(cls);
    } catch (const Error& e) {
      fail(at + "/classification", e.what());
    }
    f.alpha = rate_from(member(jf, "alpha", at), at + "/alpha");
    f.beta = rate_from(member(jf, "beta", at), at + "/beta");
    if (jf.contains("alpha_certificate")) {
      f.alpha_certificate = certificate_from(jf["alpha_certificate"], at + "/alpha_certificate");
    }
    if (jf.contains("beta_certificate")) {
      f.beta_certificate = certificate_from(jf["beta_certificate"], at + "/beta_certificate");
    }
    r.factors.push_back(std::move(f));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail("/factors", "factors do not cover every vertex");

  r.alpha = rate_from(member(j, "alpha", ""), "/alpha");
  r.beta = rate_from(member(j, "beta", ""), "/beta");
  if (j.contains("delta")) r.delta = enclosure_from(j["delta"], "/delta");
  if (j.contains("C")) {
    const json& jc = j["C"];
    ConstantEstimate c;
    c.eigen_estimate = number_at(member(jc, "eigen_estimate", "/C"), "/C/eigen_estimate");
    c.window_estimate = number_at(member(jc, "window_estimate", "/C"), "/C/window_estimate");
    const json& w = array_at(member(jc, "window", "/C"), "/C/window");
    if (w.size() != 2) fail("/C/window", "expected [lo, hi]");
    c.window_lo = unsigned_at(w[0], "/C/window/0");
    c.window_hi = unsigned_at(w[1], "/C/window/1");
    if (c.window_lo > c.window_hi) fail("/C/window", "lo exceeds hi");
    const json& ratios = array_at(member(jc, "ratios", "/C"), "/C/ratios");
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      c.ratios.push_back(number_at(ratios[i], "/C/ratios/" + std::to_string(i)));
    }
    c.max_successive_change =
        number_at(member(jc, "max_successive_change", "/C"), "/C/max_successive_change");
    c.discrepancy = number_at(member(jc, "discrepancy", "/C"), "/C/discrepancy");
    r.constant = c;
  }
  if (j.contains("oracle")) {
    const json& jo = j["oracle"];
    r.oracle = OracleCheck{unsigned_at(member(jo, "terms", "/oracle"), "/oracle/terms"),
                           bool_at(member(jo, "agrees", "/oracle"), "/oracle/agrees")};
  }
  r.a_coeffs = coeffs_from(member(j, "a_coeffs", ""), "/a_coeffs");
  r.b_coeffs = coeffs_from(member(j, "b_coeffs", ""), "/b_coeffs");
  if (r.a_coeffs.size() != r.b_coeffs.size()) fail("/b_coeffs", "length differs from a_coeffs");
  for (std::size_t n = 0; n < r.a_coeffs.size(); ++n) {
    if (r.a_coeffs[n] > r.b_coeffs[n]) fail("/b_coeffs/" + std::to_string(n), "fewer geodesics than elements");
  }
  if (j.contains("notes")) r.notes = strings_at(j["notes"], "/notes");
  return r;
}

}  // namespace racgrowth
