#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bergek4/bound.hpp"
#include "bergek4/detect.hpp"
#include "bergek4/extremal.hpp"
#include "bergek4/json.hpp"
#include "bergek4/search.hpp"
#include "bergek4/text_format.hpp"
#include "bergek4/trace.hpp"

namespace bergek4::cli {
namespace {

using nlohmann::json;

/// Raised for bad flag values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = -1;
  std::string input = "-";
  std::string pattern = "k4";
  std::string mode = "any";
  std::string spec = "berge";
  std::vector<int> core;
  int workers = 1;
  std::uint64_t node_budget = SearchConfig{}.node_budget;
  int iso_depth = SearchConfig{}.iso_depth;
  std::optional<int> claim;
  bool json = false;
  bool fast = false;
  bool bound_report = false;
};

PatternGraph pattern_graph(const std::string& name) {
  if (name == "k3") return complete_graph(3);
  if (name == "k4") return complete_graph(4);
  throw UsageError("unknown pattern '" + name + "' (expected k3 or k4)");
}

DetectMode detect_mode(const std::string& name) {
  if (name == "any") return DetectMode::Any;
  if (name == "non-expansion") return DetectMode::NonExpansion;
  throw UsageError("unknown mode '" + name + "' (expected any or non-expansion)");
}

ForbiddenSpec forbidden_spec(const Options& o) {
  if (o.spec == "berge") return BergePattern{pattern_graph(o.pattern)};
  if (o.spec == "berge-minus-expansion") return BergeMinusExpansion{pattern_graph(o.pattern)};
  if (o.spec == "graph-clique") return GraphClique{pattern_graph(o.pattern).vertex_count()};
  throw UsageError("unknown spec '" + o.spec + "'");
}

SearchConfig search_config(const Options& o) {
  SearchConfig c;
  c.workers = o.workers;
  c.node_budget = o.node_budget;
  c.iso_depth = o.iso_depth;
  return c;
}

TripleSystem read_system(const Options& o, std::istream& in) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot open " + o.input);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse(text);
}

int require_n(const Options& o) {
  if (o.n < 0) throw UsageError("--n is required");
  return o.n;
}

void print_witness(std::ostream& out, const Witness& w) {
  if (const auto* h = std::get_if<TripleSystem>(&w)) {
    out << serialize(*h);
    return;
  }
  const Graph& g = std::get<Graph>(w);
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Pair& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

template <class Range>
std::string join(const Range& r) {
  std::string s;
  for (const auto& v : r) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const TripleSystem h = balanced_3partite(require_n(o));
  if (o.json) {
    out << json{{"n", h.vertex_count()}, {"edges", h}}.dump() << '\n';
  } else {
    out << serialize(h);
  }
  return kOk;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

int cmd_detect(const Options& o, std::istream& in, std::ostream& out) {
  const TripleSystem h = read_system(o, in);
  const PatternGraph g = pattern_graph(o.pattern);
  const auto emb = find_berge(h, g, detect_mode(o.mode));
  if (o.json) {
    out << (emb ? json(*emb) : json(nullptr)).dump() << '\n';
  } else if (emb) {
    out << "found Berge-" << upper(o.pattern) << " on core " << join(emb->core) << '\n';
    for (const auto& [pair, triple] : emb->assignment) {
      out << "  " << emb->core[pair.first] << ' ' << emb->core[pair.second] << " -> " << triple[0] << ' ' << triple[1]
          << ' ' << triple[2] << '\n';
    }
  } else {
    out << "Berge-" << upper(o.pattern) << "-free (" << o.mode << ")\n";
  }
  return emb ? kFound : kOk;
}

int cmd_trace(const Options& o, std::istream& in, std::ostream& out) {
  const TripleSystem h = read_system(o, in);
  if (o.core.empty()) throw UsageError("--core is required");
  std::vector<Vertex> core(o.core.begin(), o.core.end());
  const TraceMultigraph t = trace(h, core);
  const bool blocks_ok = check_bad_components_have_bad_block(t);
  if (o.json) {
    out << json(t).dump() << '\n';
    return blocks_ok ? kOk : kFound;
  }
  out << "core " << join(t.core()) << ": " << t.loops().size() << " loops, " << t.links().size() << " links, surplus "
      << surplus(t) << '\n';
  for (const TraceLoop& l : t.loops()) out << "  loop " << l.v << " [" << l.label.first << l.label.second << "]\n";
  for (const TraceLink& l : t.links()) out << "  link " << l.ends.first << '-' << l.ends.second << " [" << l.label << "]\n";
  for (const Component& c : components(t)) {
    out << "component {" << join(c.vertices) << "} surplus " << c.surplus;
    if (c.bad) out << " bad, " << to_string(classify_bad_component(t, c).shape);
    out << '\n';
  }
  for (const Component& b : blocks(t)) {
    if (b.surplus > 0) out << "block {" << join(b.vertices) << "} surplus " << b.surplus << (b.bad ? " bad" : "") << '\n';
  }
  out << "every bad component has a bad block: " << yes_no(blocks_ok) << '\n';
  return blocks_ok ? kOk : kFound;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  const int n = require_n(o);
  const ForbiddenSpec spec = forbidden_spec(o);
  const SearchConfig config = search_config(o);
  const SearchResult r = max_edges(n, spec, config);
  if (o.json) {
    json j = r;
    j["spec"] = describe(spec);
    j["config"] = config;
    out << j.dump() << '\n';
  } else {
    out << "ex(" << n << ", " << describe(spec) << ") " << (r.exhausted ? "= " : ">= ") << r.value << "  nodes "
        << r.stats.nodes << ", bound prunes " << r.stats.bound_prunes << ", canonical prunes " << r.stats.canonical_prunes
        << ", " << std::fixed << std::setprecision(3) << r.stats.seconds << "s\n";
    print_witness(out, r.witness);
  }
  return r.exhausted ? kOk : kBudget;
}

int outcome_exit(CertificationOutcome c) {
  switch (c) {
    case CertificationOutcome::Certified:
      return kOk;
    case CertificationOutcome::Inconclusive:
      return kBudget;
    default:
      return kFound;
  }
}

int cmd_certify(const Options& o, std::ostream& out) {
  const int n = require_n(o);
  if (!o.claim) throw UsageError("--claim is required");
  const ForbiddenSpec spec = forbidden_spec(o);
  const Certification c = certify_extremal(n, spec, *o.claim, search_config(o));
  if (o.json) {
    out << json(c).dump() << '\n';
  } else {
    out << "claim ex(" << n << ", " << c.spec << ") = " << c.claimed << ": " << to_string(c.outcome) << " (search value "
        << c.result.value << (c.result.exhausted ? ", exhausted" : ", not exhausted") << ", nodes " << c.result.stats.nodes
        << ")\n";
    print_witness(out, c.result.witness);
  }
  return outcome_exit(c.outcome);
}

int cmd_bound_report(const Options& o, std::istream& in, std::ostream& out) {
  const TripleSystem h = read_system(o, in);
  const auto anchor = find_berge_triangle_anchored(h);
  if (!anchor) {
    if (o.json) {
      out << "null\n";
    } else {
      out << "no anchored Berge triangle\n";
    }
    return kFound;
  }
  const BoundReport r = bound_report(h, *anchor);
  if (o.json) {
    out << json(r).dump() << '\n';
    return kOk;
  }
  const auto& l = anchor->labels;
  out << "anchor base " << l[0] << l[1] << l[2] << ", x " << anchor->x << ", y " << anchor->y << '\n';
  out << "s(G) " << r.total_surplus << " (bad " << r.bad_surplus << ", good " << r.good_surplus << ")\n";
  for (const auto& c : r.bad_components) {
    out << "  bad component {" << join(c.component.vertices) << "} surplus " << c.component.surplus << ' '
        << to_string(c.cls.shape) << '\n';
  }
  out << "m " << r.m << ", p " << r.p << ", q " << r.q << ", unclassified " << r.unclassified << ", rho " << r.rho
      << ", alpha " << rational_text(r.alpha) << ", |U| " << r.uncovered.size() << '\n';
  out << "s(G) <= sum s(C) + |U|: " << yes_no(r.count_inequality_holds) << '\n';
  out << "s(G) <= n - 3 + rho + p + q: " << yes_no(r.surplus_bound_holds) << '\n';
  out << "min degree hypothesis: " << yes_no(r.min_degree_hypothesis) << '\n';
  out << "M " << r.lower_bound_m << ", |E(G*[U])| " << r.gstar_u_edges << ", |U|^2/3 " << rational_text(r.turan_rhs)
      << ", K4 in G*[U]: " << yes_no(r.gstar_u_has_k4) << '\n';
  return kOk;
}

int cmd_inequality(const Options& o, std::istream& in, std::ostream& out) {
  if (o.bound_report) return cmd_bound_report(o, in, out);
  const std::int64_t n_max = o.n < 0 ? 300 : o.n;
  if (n_max < 6 || n_max > 10000) throw UsageError("--n must lie in [6, 10000]");
  const bool ok = check_toomany(n_max);
  const auto gaps = diff_discrepancies(n_max);
  if (o.json) {
    json rows = json::array();
    for (const auto& d : gaps) rows.push_back({{"n", d.n}, {"table", d.table}, {"direct", d.direct}});
    out << json{{"n_max", n_max}, {"toomany_nonnegative", ok}, {"discrepancies", std::move(rows)}}.dump() << '\n';
  } else {
    out << "toomany(n, alpha) >= 0 on [0, 1] for n in [6, " << n_max << "]: " << yes_no(ok) << '\n';
    out << "diff table vs direct evaluation, " << gaps.size() << " mismatches:\n";
    for (const auto& d : gaps) out << "  n=" << d.n << ": table " << d.table << " vs direct " << d.direct << '\n';
  }
  return ok ? kOk : kFound;
}

struct ReproduceRow {
  std::string label;
  int n;
  ForbiddenSpec spec;
  int expected;
};

std::vector<ReproduceRow> reproduce_rows(bool fast) {
  std::vector<ReproduceRow> rows;
  const std::vector<int> k4{1, 4, 5, 8, 12};
  const std::vector<int> k3{1, 2, 3, 4, 6};
  for (int n = 3; n <= 7; ++n) {
    if (fast && n == 7) continue;
    rows.push_back({"Berge(K4)", n, BergePattern{complete_graph(4)}, k4[n - 3]});
  }
  for (int n = 3; n <= 7; ++n) rows.push_back({"Berge(K3)", n, BergePattern{complete_graph(3)}, k3[n - 3]});
  rows.push_back({"Berge(K4) minus expansion", 6, BergeMinusExpansion{complete_graph(4)}, 8});
  for (int m = 4; m <= 8; ++m) rows.push_back({"Turan K4-free graph", m, GraphClique{4}, m * m / 3});
  return rows;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  const SearchConfig config = search_config(o);
  json records = json::array();
  int code = kOk;
  if (!o.json) {
    out << std::left << std::setw(28) << "family" << std::setw(4) << "n" << std::setw(10) << "expected" << std::setw(8)
        << "value" << std::setw(14) << "outcome" << std::setw(12) << "nodes"
        << "seconds\n";
  }
  for (const ReproduceRow& row : reproduce_rows(o.fast)) {
    const Certification c = certify_extremal(row.n, row.spec, row.expected, config);
    const int e = outcome_exit(c.outcome);
    if (e == kBudget || (e == kFound && code != kBudget)) code = e;
    if (o.json) {
      records.push_back(c);
      continue;
    }
    out << std::left << std::setw(28) << row.label << std::setw(4) << row.n << std::setw(10) << row.expected
        << std::setw(8) << c.result.value << std::setw(14) << to_string(c.outcome) << std::setw(12)
        << c.result.stats.nodes << std::fixed << std::setprecision(3) << c.result.stats.seconds << '\n';
  }
  if (o.json) out << records.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berge-K4 triple systems: detection, traces, extremal search"};
  app.name("bergek4");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON"); };
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "Triple-system file, - for stdin"); };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Vertex count")->required();
    sub->add_option("--spec", o.spec, "berge | berge-minus-expansion | graph-clique");
    sub->add_option("--pattern", o.pattern, "k3 | k4");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--node-budget", o.node_budget, "Search node budget")->check(CLI::PositiveNumber);
    sub->add_option("--iso-depth", o.iso_depth, "Isomorph rejection depth")->check(CLI::NonNegativeNumber);
  };

  auto* construct = app.add_subcommand("construct", "Balanced complete 3-partite triple system");
  construct->add_option("--n", o.n, "Vertex count")->required();
  add_common(construct);

  auto* detect = app.add_subcommand("detect", "Search a triple system for a Berge copy of a pattern");
  add_input(detect);
  detect->add_option("--pattern", o.pattern, "k3 | k4");
  detect->add_option("--mode", o.mode, "any | non-expansion");
  add_common(detect);

  auto* trace_cmd = app.add_subcommand("trace", "Trace multigraph of a core set");
  add_input(trace_cmd);
  trace_cmd->add_option("--core", o.core, "Core vertices, comma separated")->delimiter(',')->required();
  add_common(trace_cmd);

  auto* extremal = app.add_subcommand("extremal", "Exact extremal number by exhaustive search");
  add_search(extremal);
  add_common(extremal);

  auto* certify = app.add_subcommand("certify", "Certify a claimed extremal number");
  add_search(certify);
  certify->add_option("--claim", o.claim, "Claimed extremal number")->required();
  add_common(certify);

  auto* inequality = app.add_subcommand("inequality", "toomany check and diff table report, or a bound report");
  inequality->add_option("--n", o.n, "Largest n for the toomany check (default 300)");
  inequality->add_option("--input", o.input, "Triple system for a surplus bound report");
  add_common(inequality);

  auto* reproduce = app.add_subcommand("reproduce", "Certify the table of small extremal numbers");
  reproduce->add_flag("--fast", o.fast, "Skip the n=7 Berge(K4) certification");
  reproduce->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  reproduce->add_option("--node-budget", o.node_budget, "Search node budget")->check(CLI::PositiveNumber);
  add_common(reproduce);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (detect->parsed()) return cmd_detect(o, in, out);
    if (trace_cmd->parsed()) return cmd_trace(o, in, out);
    if (extremal->parsed()) return cmd_extremal(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (inequality->parsed()) {
      o.bound_report = inequality->count("--input") > 0;
      return cmd_inequality(o, in, out);
    }
    return cmd_reproduce(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace bergek4::cli
