#include "tdp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "tdp/analysis.hpp"
#include "tdp/closed_forms.hpp"
#include "tdp/engine.hpp"
#include "tdp/equivalence.hpp"
#include "tdp/families.hpp"
#include "tdp/graph.hpp"
#include "tdp/jsonio.hpp"

namespace tdp {

namespace {

const char* rule_json_name(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::kSupportAdjacent:
      return "support_adjacent";
    case ReductionRule::kTwinDominated:
      return "twin_dominated";
    case ReductionRule::kTwinEdgeSplit:
      return "twin_edge_split";
    case ReductionRule::kDominatingVertex:
      return "dominating_vertex";
  }
  return "?";
}

const char* rule_human_name(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::kSupportAdjacent:
      return "support-adjacent";
    case ReductionRule::kTwinDominated:
      return "twin-dominated";
    case ReductionRule::kTwinEdgeSplit:
      return "twin-split";
    case ReductionRule::kDominatingVertex:
      return "dominating-vertex";
  }
  return "?";
}

Json step_json(const ReductionStep& step) {
  Json j;
  j["rule"] = rule_json_name(step.rule);
  if (step.rule == ReductionRule::kDominatingVertex) {
    j["vertex"] = step.vertex;
  } else {
    j["edge"] = Json::array({step.edge.u, step.edge.v});
  }
  if (step.certified) j["certified"] = *step.certified;
  return j;
}

void print_step_human(std::ostream& out, const ReductionStep& step) {
  out << "  ";
  if (step.rule == ReductionRule::kDominatingVertex) {
    out << "remove vertex " << step.vertex;
  } else {
    out << "delete edge (" << step.edge.u << "," << step.edge.v << ")";
  }
  out << " [" << rule_human_name(step.rule) << "]";
  if (step.certified) {
    out << (*step.certified ? " certified" : " CERTIFICATION FAILED");
  }
  out << '\n';
}

Json gamma_json(const Polynomial& p) {
  int lo = p.low_degree();
  if (lo < 0) return nullptr;
  return lo;
}

// Bound per subcommand; presence is tracked through the CLI11 option counts.
struct GraphInput {
  std::string g6;
  std::string edges;
  std::string spec;
  CLI::Option* g6_opt = nullptr;
  CLI::Option* edges_opt = nullptr;
  CLI::Option* spec_opt = nullptr;

  CLI::Option_group* attach(CLI::App* sub) {
    auto* group = sub->add_option_group("input", "graph input (exactly one)");
    g6_opt = group->add_option("--g6", g6, "graph6 string");
    edges_opt = group->add_option("--edges", edges,
                                  "edge list file: header 'n m', then edges");
    spec_opt = group->add_option("--spec", spec,
                                 "family spec, e.g. lollipop:m=6,n=1");
    group->require_option(1);
    return group;
  }

  Graph load() const {
    if (g6_opt->count()) return parse_graph6(g6);
    if (edges_opt->count()) {
      std::ifstream in(edges);
      if (!in) {
        throw std::invalid_argument("cannot open edge list file '" + edges +
                                    "'");
      }
      return parse_edge_list(in);
    }
    return make_family(parse_family_spec(spec));
  }
};

std::ifstream open_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open catalog file '" + path + "'");
  }
  return in;
}

void print_poly_human(std::ostream& out, const Polynomial& p) {
  out << "D_t(G, x) = " << p.to_string() << '\n';
  int lo = p.low_degree();
  if (lo >= 0) {
    out << "gamma_t = " << lo << '\n';
  } else {
    out << "gamma_t = undefined (no total dominating set)\n";
  }
}

int cmd_compute(std::ostream& out, const GraphInput& input, bool reduce,
                bool json, int threads) {
  Graph g = input.load();
  Polynomial p;
  ReductionTrace trace;
  if (reduce) {
    std::tie(p, trace) = reduce_tdp(g, threads);
  } else {
    p = brute_force_tdp(g, threads);
  }
  if (json) {
    Json j;
    j["v"] = 1;
    j["command"] = "compute";
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["poly"] = coeffs_json(p);
    j["poly_text"] = p.to_string();
    j["gamma_t"] = gamma_json(p);
    if (reduce) {
      Json steps = Json::array();
      for (const auto& s : trace.steps) steps.push_back(step_json(s));
      j["trace"] = std::move(steps);
    }
    out << j.dump() << '\n';
  } else {
    print_poly_human(out, p);
    if (reduce) {
      out << "reduction steps: " << trace.steps.size() << '\n';
      for (const auto& s : trace.steps) print_step_human(out, s);
    }
  }
  return 0;
}

int cmd_family(std::ostream& out, const std::string& spec_text, bool want_poly,
               bool g6_only, bool json, int threads) {
  FamilySpec spec = parse_family_spec(spec_text);
  Graph g = make_family(spec);
  std::string g6 = write_graph6(g);
  std::optional<Polynomial> poly;
  if (want_poly) {
    // The closed form covers members past brute-force capacity.
    poly = closed_form_for(spec);
    if (!poly) poly = brute_force_tdp(g, threads);
  }
  if (json) {
    Json j;
    j["v"] = 1;
    j["command"] = "family";
    j["spec"] = to_string(spec);
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["g6"] = g6;
    if (poly) {
      j["poly"] = coeffs_json(*poly);
      j["poly_text"] = poly->to_string();
    }
    out << j.dump() << '\n';
    return 0;
  }
  if (g6_only) {
    out << g6 << '\n';
    if (poly) out << poly->to_string() << '\n';
    return 0;
  }
  out << "spec: " << to_string(spec) << '\n';
  out << "order " << g.order() << ", " << g.edge_count() << " edges\n";
  out << "graph6: " << g6 << '\n';
  if (poly) out << "D_t(G, x) = " << poly->to_string() << '\n';
  return 0;
}

int cmd_verify(std::ostream& out, const std::string& spec_text, int max_order,
               bool json, int threads) {
  FamilySpec spec = parse_family_spec(spec_text);
  std::optional<Polynomial> formula = closed_form_for(spec);
  if (!formula) {
    throw std::invalid_argument("no closed form for family '" +
                                family_name(spec.kind) + "'");
  }
  Graph g = make_family(spec);
  if (g.order() > max_order) {
    throw std::invalid_argument(
        "family member has order " + std::to_string(g.order()) +
        ", above --max-order " + std::to_string(max_order));
  }
  Polynomial oracle = brute_force_tdp(g, threads);
  const bool match = *formula == oracle;
  if (json) {
    Json j;
    j["v"] = 1;
    j["command"] = "verify";
    j["spec"] = to_string(spec);
    j["n"] = g.order();
    j["match"] = match;
    j["formula"] = coeffs_json(*formula);
    j["oracle"] = coeffs_json(oracle);
    out << j.dump() << '\n';
  } else {
    out << "spec: " << to_string(spec) << '\n';
    out << "order: " << g.order() << '\n';
    out << "formula == oracle: " << (match ? "PASS" : "FAIL") << '\n';
    if (!match) {
      out << "formula: " << formula->to_string() << '\n';
      out << "oracle:  " << oracle.to_string() << '\n';
    }
  }
  return match ? 0 : 1;
}

int cmd_classes(std::ostream& out, std::ostream& err,
                const std::string& catalog, const std::string& scope,
                const std::string& out_path, bool json, int threads) {
  std::ifstream in = open_catalog(catalog);
  ClassReport report = partition_catalog(in, scope, threads);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      throw std::invalid_argument("cannot open output file '" + out_path +
                                  "'");
    }
    write_jsonl(report, f);
  }
  if (json) {
    write_jsonl(report, out);
    return 0;
  }
  out << "catalog: " << report.total << " graphs, " << report.class_count()
      << " classes, " << report.singleton_count() << " singletons (order "
      << report.order << ", scope " << report.scope << ")\n";
  for (const auto& cls : report.classes) {
    if (cls.members.size() < 2) continue;
    out << "  class " << cls.key.to_string() << " size " << cls.members.size()
        << ":";
    for (const auto& m : cls.members) out << ' ' << m;
    out << '\n';
  }
  if (!out_path.empty()) {
    out << "wrote " << report.class_count() << " classes to " << out_path
        << '\n';
  }
  return 0;
}

int cmd_unique(std::ostream& out, std::ostream& err, const GraphInput& input,
               const std::string& catalog, const std::string& scope, bool json,
               int threads) {
  Graph g = input.load();
  std::ifstream in = open_catalog(catalog);
  UniquenessResult result = is_dt_unique(g, in, threads);
  if (!result.in_catalog) {
    err << "warning: graph not found in catalog (scope " << scope
        << "); isomorphic relabelings there count as witnesses\n";
  }
  if (json) {
    Json j;
    j["v"] = 1;
    j["command"] = "unique";
    j["unique"] = result.unique;
    j["in_catalog"] = result.in_catalog;
    j["witnesses"] = result.witnesses;
    out << j.dump() << '\n';
  } else {
    out << "unique within catalog: " << (result.unique ? "yes" : "no") << '\n';
    for (const auto& w : result.witnesses) out << "  witness: " << w << '\n';
  }
  return 0;
}

int cmd_analyze(std::ostream& out, const GraphInput& input,
                const std::string& poly_text, bool has_poly, bool json,
                int threads) {
  Polynomial p;
  if (has_poly) {
    Json parsed;
    try {
      parsed = Json::parse(poly_text);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("polynomial json: ") + e.what());
    }
    p = poly_from_json(parsed);
  } else {
    p = brute_force_tdp(input.load(), threads);
  }
  SequenceVerdict v = analyze_sequence(p);
  const bool rooted = is_all_real_rooted(p);
  std::optional<int> roots;
  if (!p.is_zero()) roots = count_distinct_real_roots(p);

  if (json) {
    Json j;
    j["v"] = 1;
    j["command"] = "analyze";
    j["poly"] = coeffs_json(p);
    j["poly_text"] = p.to_string();
    j["gamma_t"] = gamma_json(p);
    j["unimodal"] = v.unimodal;
    j["mode"] = v.mode ? Json(*v.mode) : Json(nullptr);
    j["unimodal_full"] = v.unimodal_full;
    j["first_violation"] =
        v.first_violation ? Json(*v.first_violation) : Json(nullptr);
    j["log_concave"] = v.log_concave;
    j["symmetric"] = v.symmetric;
    j["real_rooted"] = rooted;
    j["distinct_real_roots"] = roots ? Json(*roots) : Json(nullptr);
    out << j.dump() << '\n';
    return 0;
  }
  out << "poly: " << p.to_string() << '\n';
  if (v.unimodal) {
    out << "unimodal: yes (mode " << *v.mode << ")\n";
  } else {
    out << "unimodal: no (first violation at index " << *v.first_violation
        << ")\n";
  }
  out << "log-concave: " << (v.log_concave ? "yes" : "no") << '\n';
  out << "symmetric: " << (v.symmetric ? "yes" : "no") << '\n';
  out << "real-rooted: " << (rooted ? "yes" : "no");
  if (roots) out << " (" << *roots << " distinct real roots)";
  out << '\n';
  return 0;
}

int cmd_simplify(std::ostream& out, const GraphInput& input, bool certify,
                 bool json) {
  Graph g = input.load();
  auto [reduced, trace] = simplify(g, certify);
  if (json) {
    Json j;
    j["v"] = 1;
    j["command"] = "simplify";
    j["n"] = g.order();
    j["edges_before"] = g.edge_count();
    j["edges_after"] = reduced.edge_count();
    j["g6"] = write_graph6(reduced);
    Json steps = Json::array();
    for (const auto& s : trace.steps) steps.push_back(step_json(s));
    j["steps"] = std::move(steps);
    out << j.dump() << '\n';
  } else {
    out << "order " << g.order() << ": " << g.edge_count() << " -> "
        << reduced.edge_count() << " edges, " << trace.steps.size()
        << " deletions\n";
    for (const auto& s : trace.steps) print_step_human(out, s);
    out << "graph6: " << write_graph6(reduced) << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"total domination polynomial toolkit", "tdp"};
  app.require_subcommand(1);

  int exit_code = 0;

  // compute
  auto* compute = app.add_subcommand(
      "compute", "total domination polynomial of one graph");
  GraphInput compute_in;
  compute_in.attach(compute);
  bool compute_reduce = false;
  bool compute_json = false;
  int compute_threads = 1;
  compute->add_flag("--reduce", compute_reduce,
                    "apply reductions before enumeration and report the trace");
  compute->add_flag("--json", compute_json, "machine-readable output");
  compute->add_option("--threads", compute_threads, "worker threads (0 = auto)");
  compute->callback([&] {
    exit_code = cmd_compute(out, compute_in, compute_reduce, compute_json,
                            compute_threads);
  });

  // family
  auto* family =
      app.add_subcommand("family", "construct a named family member");
  std::string family_spec;
  bool family_poly = false;
  bool family_g6_out = false;
  bool family_json = false;
  int family_threads = 1;
  family->add_option("--spec", family_spec, "family spec")->required();
  family->add_flag("--poly", family_poly, "include the polynomial");
  family->add_flag("--g6-out", family_g6_out, "print the bare graph6 line");
  family->add_flag("--json", family_json, "machine-readable output");
  family->add_option("--threads", family_threads, "worker threads (0 = auto)");
  family->callback([&] {
    exit_code = cmd_family(out, family_spec, family_poly, family_g6_out,
                           family_json, family_threads);
  });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check a family closed form against enumeration");
  std::string verify_spec;
  int verify_max_order = 11;
  bool verify_json = false;
  int verify_threads = 1;
  verify->add_option("--spec", verify_spec, "family spec")->required();
  verify->add_option("--max-order", verify_max_order,
                     "refuse members larger than this");
  verify->add_flag("--json", verify_json, "machine-readable output");
  verify->add_option("--threads", verify_threads, "worker threads (0 = auto)");
  verify->callback([&] {
    exit_code =
        cmd_verify(out, verify_spec, verify_max_order, verify_json,
                   verify_threads);
  });

  // classes
  auto* classes = app.add_subcommand(
      "classes", "partition a graph6 catalog by polynomial");
  std::string classes_catalog;
  std::string classes_scope = "connected";
  std::string classes_out;
  bool classes_json = false;
  int classes_threads = 1;
  classes->add_option("--catalog", classes_catalog, "graph6 file, one per line")
      ->required();
  classes->add_option("--scope", classes_scope,
                      "catalog scope label recorded in the report")
      ->check(CLI::IsMember({"connected", "all"}));
  classes->add_option("--out", classes_out, "write the JSONL report here");
  classes->add_flag("--json", classes_json, "JSONL report on stdout");
  classes->add_option("--threads", classes_threads,
                      "worker threads (0 = auto)");
  classes->callback([&] {
    exit_code = cmd_classes(out, err, classes_catalog, classes_scope,
                            classes_out, classes_json, classes_threads);
  });

  // unique
  auto* unique = app.add_subcommand(
      "unique", "is the polynomial unique within a catalog");
  GraphInput unique_in;
  unique_in.attach(unique);
  std::string unique_catalog;
  std::string unique_scope = "connected";
  bool unique_json = false;
  int unique_threads = 1;
  unique->add_option("--catalog", unique_catalog, "graph6 file, one per line")
      ->required();
  unique->add_option("--scope", unique_scope, "catalog scope label")
      ->check(CLI::IsMember({"connected", "all"}));
  unique->add_flag("--json", unique_json, "machine-readable output");
  unique->add_option("--threads", unique_threads, "worker threads (0 = auto)");
  unique->callback([&] {
    exit_code = cmd_unique(out, err, unique_in, unique_catalog, unique_scope,
                           unique_json, unique_threads);
  });

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "coefficient shape and real-rootedness");
  GraphInput analyze_in;
  auto* analyze_group = analyze_in.attach(analyze);
  std::string analyze_poly;
  CLI::Option* analyze_poly_opt = analyze_group->add_option(
      "--poly", analyze_poly, "JSON coefficient array, ascending");
  bool analyze_json = false;
  int analyze_threads = 1;
  analyze->add_flag("--json", analyze_json, "machine-readable output");
  analyze->add_option("--threads", analyze_threads,
                      "worker threads (0 = auto)");
  analyze->callback([&] {
    exit_code =
        cmd_analyze(out, analyze_in, analyze_poly,
                    analyze_poly_opt->count() > 0, analyze_json,
                    analyze_threads);
  });

  // simplify
  auto* simplify_cmd = app.add_subcommand(
      "simplify", "delete provably irrelevant edges and show the trace");
  GraphInput simplify_in;
  simplify_in.attach(simplify_cmd);
  bool simplify_certify = false;
  bool simplify_json = false;
  simplify_cmd->add_flag("--certify", simplify_certify,
                         "brute-force check each deletion");
  simplify_cmd->add_flag("--json", simplify_json, "machine-readable output");
  simplify_cmd->callback([&] {
    exit_code = cmd_simplify(out, simplify_in, simplify_certify, simplify_json);
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tdp");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}

}  // namespace tdp
