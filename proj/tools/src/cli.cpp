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

#include "racgrowth/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "racgrowth/analysis.hpp"
#include "racgrowth/error.hpp"
#include "racgrowth/graph_io.hpp"
#include "racgrowth/report_json.hpp"
#include "racgrowth/transfer_matrix.hpp"

namespace racgrowth::cli {

namespace {

using nlohmann::json;

constexpr int kTextPlaces = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

// What a certify input can be.
struct LoadedInput {
  std::optional<GroupSpec> group;
  std::optional<TransferMatrix> digraph;
  std::optional<Automaton> automaton;
};

LoadedInput load(const CommandConfig& config) {
  const std::string text = read_input(config.input_path);
  LoadedInput in;
  if (looks_like_json(text)) {
    json j = parse_json_text(text);
    if (j.is_object() && j.contains("transitions")) {
      in.automaton = automaton_from_json(j);
      return in;
    }
    if (j.is_object() && j.contains("nodes")) {
      in.digraph = parse_digraph_json(j);
      return in;
    }
    in.group = parse_graph_json(j, config.kind_override);
    return in;
  }
  in.group = parse_graph(text, config.kind_override);
  return in;
}

GroupSpec load_group(const CommandConfig& config) {
  LoadedInput in = load(config);
  if (!in.group) throw ParseError("expected a graph, got a digraph or automaton fixture");
  return *in.group;
}

std::string interval_text(const RateEnclosure& e, int places = kTextPlaces) {
  if (e.lower == e.upper) return approx_string(e.lower);
  return "[" + to_decimal(e.lower, places, Rounding::kDown) + ", " + to_decimal(e.upper, places, Rounding::kUp) + "]";
}

std::string rate_text(const Rate& r) { return interval_text(r.enclosure) + "  " + to_string(r.verdict); }

std::string set_text(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

std::string fixed(long double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
  return buf;
}

std::string scientific(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2Le", x);
  return buf;
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) text += "  ";
      text += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    out << text << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
}

json coeffs_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

// analyze

int cmd_analyze(const CommandConfig& config, std::ostream& out) {
  GroupSpec spec = load_group(config);
  AnalyzeOptions options;
  options.terms = config.terms;
  options.tolerance = config.tolerance;
  options.state_cap = config.state_cap;
  GrowthReport report = analyze(spec, options);
  if (config.format == OutputFormat::kJson) {
    out << report_to_json(report).dump(2) << "\n";
    return kExitOk;
  }
  if (config.format == OutputFormat::kDot) throw UsageError("analyze supports text or json output");

  out << "group    " << to_string(spec.kind) << ", vertices " << spec.graph.size() << ", edges "
      << spec.graph.edge_count() << "\n";
  out << "order   ";
  for (const auto& l : report.order_used) out << " " << l;
  out << "\n";
  for (const auto& f : report.factors) {
    out << "factor   " << set_text(f.labels) << " " << to_string(f.classification) << "\n"
        << "           alpha " << rate_text(f.alpha) << "\n"
        << "           beta  " << rate_text(f.beta) << "\n";
  }
  out << "alpha    " << rate_text(report.alpha) << "\n";
  out << "beta     " << rate_text(report.beta) << "\n";
  if (report.delta) out << "delta    " << interval_text(*report.delta) << "\n";
  if (report.constant) {
    const auto& c = *report.constant;
    out << "C        eigen " << fixed(c.eigen_estimate, 8) << ", window " << fixed(c.window_estimate, 8)
        << " (n = " << c.window_lo << ".." << c.window_hi << ", max change " << scientific(c.max_successive_change)
        << ", discrepancy " << scientific(c.discrepancy) << ")\n";
  }
  if (theorem_e_hypothesis(spec)) {
    TheoremECheck check = theorem_e_check(spec, report);
    out << "beta > alpha  " << (check.inequality_certified ? "certified" : "not certified") << " (tolerance "
        << approx_string(check.tolerance_used, 3) << ")\n";
  } else {
    out << "beta > alpha  not expected (complement is a complete graph plus isolated vertices"
        << (spec.kind == GroupKind::kRaag ? ", or no edges" : "") << ")\n";
  }
  for (const auto& note : report.notes) out << "note     " << note << "\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n < report.a_coeffs.size(); ++n) {
    rows.push_back({std::to_string(n), abbreviate(report.a_coeffs[n]), abbreviate(report.b_coeffs[n])});
  }
  out << "\n";
  print_table(out, {"n", "a_n", "b_n"}, rows);
  return kExitOk;
}

// count

int cmd_count(const CommandConfig& config, std::ostream& out) {
  GroupSpec spec = load_group(config);
  auto [a, b] = growth_coefficients(spec, config.terms, config.state_cap);
  if (config.format == OutputFormat::kJson) {
    out << json{{"order_used", spec.graph.labels()}, {"a_coeffs", coeffs_json(a)}, {"b_coeffs", coeffs_json(b)}}.dump(2)
        << "\n";
    return kExitOk;
  }
  if (config.format == OutputFormat::kDot) throw UsageError("count supports text or json output");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n < a.size(); ++n) rows.push_back({std::to_string(n), abbreviate(a[n]), abbreviate(b[n])});
  print_table(out, {"n", "a_n", "b_n"}, rows);
  return kExitOk;
}

// automaton

int cmd_automaton(const CommandConfig& config, std::ostream& out) {
  GroupSpec spec = load_group(config);
  DefiningGraph work = spec.kind == GroupKind::kRacg ? spec.graph : double_graph(spec.graph);
  Automaton a = build_automaton(work, config.automaton_kind, config.state_cap);
  if (config.format == OutputFormat::kJson) {
    out << automaton_to_json(a).dump(2) << "\n";
  } else {
    out << export_dot(a);
  }
  return kExitOk;
}

// oracle

int cmd_oracle(const CommandConfig& config, std::ostream& out) {
  GroupSpec spec = load_group(config);
  auto layers = oracle::cayley_layers(spec, config.terms, config.frontier_cap);
  std::optional<std::vector<BigInt>> series;
  if (spec.kind == GroupKind::kRacg) series = oracle::steinberg_series(spec, config.terms, config.state_cap);
  if (config.format == OutputFormat::kJson) {
    json j{{"order_used", spec.graph.labels()},
           {"spherical", coeffs_json(layers.spherical)},
           {"geodesic", coeffs_json(layers.geodesic)}};
    if (series) j["series"] = coeffs_json(*series);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (config.format == OutputFormat::kDot) throw UsageError("oracle supports text or json output");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n <= config.terms; ++n) {
    std::vector<std::string> row{std::to_string(n), abbreviate(layers.spherical[n]), abbreviate(layers.geodesic[n])};
    if (series) row.push_back(abbreviate((*series)[n]));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header{"n", "cayley", "geodesic"};
  if (series) header.push_back("series");
  print_table(out, header, rows);
  return kExitOk;
}

// compare

int cmd_compare(const CommandConfig& config, std::ostream& out) {
  GroupSpec spec = load_group(config);
  auto [a, b] = growth_coefficients(spec, config.terms, config.state_cap);
  auto layers = oracle::cayley_layers(spec, config.terms, config.frontier_cap);
  std::optional<std::vector<BigInt>> series;
  if (spec.kind == GroupKind::kRacg) series = oracle::steinberg_series(spec, config.terms, config.state_cap);

  bool all_pass = true;
  std::vector<std::vector<std::string>> rows;
  json lengths = json::array();
  for (std::size_t n = 0; n <= config.terms; ++n) {
    bool pass = a[n] == layers.spherical[n] && b[n] == layers.geodesic[n] && (!series || (*series)[n] == a[n]);
    all_pass = all_pass && pass;
    std::vector<std::string> row{std::to_string(n), abbreviate(a[n]), abbreviate(layers.spherical[n])};
    if (series) row.push_back(abbreviate((*series)[n]));
    row.insert(row.end(), {abbreviate(b[n]), abbreviate(layers.geodesic[n]), pass ? "PASS" : "FAIL"});
    rows.push_back(std::move(row));
    json jl{{"n", n},
            {"a_automaton", a[n].get_str()},
            {"a_oracle", layers.spherical[n].get_str()},
            {"b_automaton", b[n].get_str()},
            {"b_oracle", layers.geodesic[n].get_str()},
            {"verdict", pass ? "PASS" : "FAIL"}};
    if (series) jl["a_series"] = (*series)[n].get_str();
    lengths.push_back(std::move(jl));
  }
  if (config.format == OutputFormat::kJson) {
    out << json{{"lengths", lengths}, {"verdict", all_pass ? "PASS" : "FAIL"}}.dump(2) << "\n";
  } else {
    std::vector<std::string> header{"n", "a_automaton", "a_oracle"};
    if (series) header.push_back("a_series");
    header.insert(header.end(), {"b_automaton", "b_oracle", "verdict"});
    print_table(out, header, rows);
    out << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? kExitOk : kExitCompareFail;
}

// certify

std::string headline(const PerronReport& r) {
  std::string text = to_string(r.verdict);
  if (r.verdict == PerronVerdict::kNotCertified) {
    for (const auto& reason : r.reasons) {
      if (reason == "not strongly connected") continue;
      text += ": " + reason;
      break;
    }
  }
  return text + "; radius encloses " + fixed(r.enclosure.value_hint, 8);
}

struct ComponentInfo {
  std::size_t size;
  std::uint64_t period;
  bool cyclic;
  bool terminal;
};

std::vector<ComponentInfo> components_of(const TransferMatrix& m, const PerronReport& r) {
  const auto& p = r.certificate.partition;
  auto terminal = p.terminal_components(m);
  std::vector<ComponentInfo> out;
  for (std::size_t c = 0; c < p.components.size(); ++c) {
    ComponentInfo info{p.components[c].size(), 0, p.is_cyclic(m, c),
                       std::find(terminal.begin(), terminal.end(), c) != terminal.end()};
    if (info.cyclic) info.period = period(m, p.components[c]).period;
    out.push_back(info);
  }
  return out;
}

json certificate_json(const TransferMatrix& m, const PerronReport& r) {
  json comps = json::array();
  for (const auto& c : components_of(m, r)) {
    comps.push_back({{"size", c.size}, {"period", c.period}, {"cyclic", c.cyclic}, {"attracting", c.terminal}});
  }
  json dominant = json::array();
  for (std::size_t c : r.dominant_components) dominant.push_back(c);
  json j{{"verdict", to_string(r.verdict)},
         {"reasons", r.reasons},
         {"dimension", m.dimension()},
         {"strongly_connected", r.certificate.strongly_connected},
         {"period", r.certificate.period},
         {"primitive", r.certificate.primitive},
         {"lower", to_decimal(r.enclosure.lower, 24, Rounding::kDown)},
         {"upper", to_decimal(r.enclosure.upper, 24, Rounding::kUp)},
         {"hint", r.enclosure.value_hint},
         {"components", comps},
         {"dominant_components", dominant},
         {"dominant_period", r.dominant_period},
         {"separation", to_string(r.separation)}};
  if (r.char_poly) j["char_poly"] = r.char_poly->to_string();
  return j;
}

void certificate_text(std::ostream& out, const std::string& prefix, const TransferMatrix& m, const PerronReport& r) {
  out << prefix << headline(r) << "\n";
  out << "  states " << m.dimension() << ", strongly connected components " << r.certificate.partition.components.size()
      << (r.certificate.strongly_connected ? " (strongly connected)" : "") << "\n";
  for (const auto& c : components_of(m, r)) {
    if (!c.cyclic) continue;
    out << "  " << (c.terminal ? "attracting" : "transient") << " component of size " << c.size << ", period "
        << c.period << "\n";
  }
  out << "  enclosure " << interval_text(r.enclosure) << "\n";
  if (r.char_poly) out << "  char poly " << r.char_poly->to_string() << "\n";
  if (r.separation != SeparationCheck::kNotApplicable) out << "  separation " << to_string(r.separation) << "\n";
  for (const auto& reason : r.reasons) out << "  reason: " << reason << "\n";
}

int cmd_certify(const CommandConfig& config, std::ostream& out) {
  if (config.format == OutputFormat::kDot) throw UsageError("certify supports text or json output");
  LoadedInput in = load(config);
  std::vector<std::pair<std::string, TransferMatrix>> matrices;
  if (in.digraph) {
    matrices.emplace_back("", std::move(*in.digraph));
  } else if (in.automaton) {
    matrices.emplace_back("", prune(*in.automaton));
  } else {
    DefiningGraph work = in.group->kind == GroupKind::kRacg ? in.group->graph : double_graph(in.group->graph);
    matrices.emplace_back("shortlex", prune(build_automaton(work, AutomatonKind::kShortlex, config.state_cap)));
    matrices.emplace_back("geodesic", prune(build_automaton(work, AutomatonKind::kGeodesic, config.state_cap)));
  }
  json all = json::object();
  for (const auto& [name, m] : matrices) {
    PerronReport r = perron_certificate(m, config.tolerance);
    if (config.format == OutputFormat::kJson) {
      all[name.empty() ? "certificate" : name] = certificate_json(m, r);
    } else {
      certificate_text(out, name.empty() ? "" : name + ": ", m, r);
    }
  }
  if (config.format == OutputFormat::kJson) out << all.dump(2) << "\n";
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kUnknownVertex:
      return kExitParse;
    case ErrorCode::kCliqueExplosion:
    case ErrorCode::kFrontierCap:
    case ErrorCode::kDimensionCap:
      return kExitCap;
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    default:
      return kExitInternal;
  }
}

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  std::uint64_t out = 0;
  const char* end = value + std::char_traits<char>::length(value);
  auto [ptr, ec] = std::from_chars(value, end, out);
  if (ec != std::errc() || ptr != end || out == 0) {
    throw UsageError(std::string(name) + " must be a positive integer, got '" + value + "'");
  }
  return out;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.terms < 1) throw UsageError("--terms must be at least 1");
    if (config.tolerance <= 0) throw UsageError("--tolerance must be positive");
    switch (config.command) {
      case Command::kAnalyze: return cmd_analyze(config, out);
      case Command::kCount: return cmd_count(config, out);
      case Command::kAutomaton: return cmd_automaton(config, out);
      case Command::kOracle: return cmd_oracle(config, out);
      case Command::kCompare: return cmd_compare(config, out);
      case Command::kCertify: return cmd_certify(config, out);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth rates of right-angled Coxeter and Artin groups"};
  app.require_subcommand(1);

  CommandConfig config;
  std::string group, tolerance, format, kind;
  const std::pair<const char*, Command> commands[] = {
      {"analyze", Command::kAnalyze}, {"count", Command::kCount},     {"automaton", Command::kAutomaton},
      {"oracle", Command::kOracle},   {"compare", Command::kCompare}, {"certify", Command::kCertify},
  };
  const char* descriptions[] = {
      "rates, certificates and coefficients of a group",
      "a_n and b_n tables",
      "export the shortlex or geodesic automaton",
      "brute-force Cayley-graph counts",
      "automaton counts against the oracles, PASS/FAIL per length",
      "Perron certificate of a group, digraph fixture or automaton dump",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    sub->add_option("input", config.input_path, "graph file (JSON or edge list), '-' for stdin")->required();
    sub->add_option("--group", group, "override the group kind")->check(CLI::IsMember({"racg", "raag"}));
    sub->add_option("--terms,--max", config.terms, "largest word length")->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", tolerance, "enclosure width, e.g. 1e-12 or 1/1000");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    if (commands[i].second == Command::kAutomaton) {
      sub->add_option("--kind", kind, "automaton language")->check(CLI::IsMember({"shortlex", "geodesic"}));
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) config.command = commands[i].second;
  }
  try {
    if (!group.empty()) config.kind_override = group_kind_from_string(group);
    if (!tolerance.empty()) config.tolerance = parse_rational(tolerance);
    if (format == "json") config.format = OutputFormat::kJson;
    if (format == "dot") config.format = OutputFormat::kDot;
    if (!kind.empty()) config.automaton_kind = automaton_kind_from_string(kind);
    config.state_cap = env_cap("GROWTH_STATE_CAP", config.state_cap);
    config.frontier_cap = env_cap("GROWTH_FRONTIER_CAP", config.frontier_cap);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace racgrowth::cli
