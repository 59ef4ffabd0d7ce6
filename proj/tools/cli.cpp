#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chroma/coloring.hpp"
#include "chroma/critical.hpp"
#include "chroma/fixtures.hpp"
#include "chroma/harness.hpp"
#include "chroma/implicit.hpp"
#include "chroma/io.hpp"
#include "chroma/kempe.hpp"
#include "chroma/polynomial.hpp"

namespace chroma {

namespace {

Graph load_graph(const std::string& input_path, std::istream& in) {
  if (input_path.empty() || input_path == "-") return parse_dimacs(in);
  std::ifstream file(input_path);
  if (!file)
    throw RefusalError("cannot open input file '" + input_path + "'");
  return parse_dimacs(file);
}

std::pair<Vertex, Vertex> to_internal_pair(const std::vector<int>& pair,
                                           const Graph& g) {
  Vertex u = pair[0] - 1, v = pair[1] - 1;  // 1-based on the command line
  g.require_vertex(u);
  g.require_vertex(v);
  return {u, v};
}

void print_chromatic(const Graph& g, const std::string& format,
                     std::ostream& out) {
  int chi = chromatic_number(g);
  ChromaticPolynomial p = chromatic_polynomial(g);
  if (format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (int k = 0; k <= g.order(); ++k)
      values.push_back({{"k", k}, {"colorings", evaluate(p, k).str()}});
    out << nlohmann::json{{"chromaticNumber", chi},
                          {"polynomial", polynomial_json(p)},
                          {"values", values}}
               .dump(2)
        << "\n";
    return;
  }
  out << "chromatic number: " << chi << "\n";
  out << "P(G,k) = " << p.to_string() << "\n";
  for (int k = 0; k <= g.order(); ++k)
    out << "P(G," << k << ") = " << evaluate(p, k).str() << "\n";
}

void print_relations(const Graph& g, int k, const std::vector<int>& pair,
                     const std::string& format, std::ostream& out) {
  if (!pair.empty()) {
    auto [u, v] = to_internal_pair(pair, g);
    PairClassification c = classify_pair(g, k, u, v);
    if (format == "json") {
      out << pair_classification_json(c).dump(2) << "\n";
    } else {
      out << "pair (" << c.u + 1 << "," << c.v + 1
          << "): " << to_string(c.status)
          << (c.vacuous ? " [vacuous: no " + std::to_string(k) +
                              "-coloring exists]"
                        : "")
          << "\n";
    }
    return;
  }
  RelationReport r = explicit_graph(g, k);
  if (format == "json") {
    out << relation_report_json(r).dump(2) << "\n";
  } else if (format == "dot") {
    out << to_dot(r);
  } else {
    out << "k = " << r.k << (r.vacuous ? " (vacuous)" : "") << "\n";
    for (const PairClassification& c : r.pairs)
      if (c.status != PairStatus::kFree)
        out << "(" << c.u + 1 << "," << c.v + 1
            << "): " << to_string(c.status) << "\n";
  }
}

void print_explicit(const Graph& g, int k, const std::string& format,
                    std::ostream& out) {
  RelationReport r = explicit_graph(g, k);
  if (format == "json")
    out << graph_echo_json(r.explicit_graph).dump(2) << "\n";
  else if (format == "dot")
    out << to_dot(r);
  else
    out << emit_dimacs(r.explicit_graph);
}

void print_kempe(const Graph& g, int k, const std::vector<int>& pair,
                 const std::string& format, std::ostream& out) {
  std::optional<Coloring> c = find_k_coloring(g, k);
  if (!c)
    throw RefusalError("no " + std::to_string(k) +
                       "-coloring exists; no chains to report");
  // Every chain of every color pairing, deduplicated by component.
  std::vector<KempeChain> chains;
  for (int c1 = 1; c1 <= k; ++c1)
    for (int c2 = c1 + 1; c2 <= k; ++c2) {
      VertexSet seen = 0;
      for (Vertex v : g.vertices()) {
        int col = c->color_of(v);
        if ((col != c1 && col != c2) || (seen & vbit(v))) continue;
        KempeChain chain = kempe_chain(g, *c, v, c1, c2);
        seen |= chain.members;
        chains.push_back(chain);
      }
    }
  if (format == "json") {
    nlohmann::json body{{"coloring", coloring_json(*c)}};
    nlohmann::json arr = nlohmann::json::array();
    for (const KempeChain& chain : chains) arr.push_back(chain_json(chain));
    body["chains"] = arr;
    if (!pair.empty()) {
      auto [x, y] = to_internal_pair(pair, g);
      ChainConnectivity cc = connecting_chain_report(g, *c, x, y);
      body["pair"] = {{"u", x + 1},
                      {"v", y + 1},
                      {"edgeChain", cc.edge_chain},
                      {"identityChainCount", cc.identity_chain_count}};
    }
    out << body.dump(2) << "\n";
    return;
  }
  out << "coloring:";
  for (Vertex v : g.vertices()) out << " " << v + 1 << ":" << c->color_of(v);
  out << "\n";
  for (const KempeChain& chain : chains) {
    out << "chain colors (" << chain.color_a << "," << chain.color_b << "):";
    for (Vertex v : to_vertex_list(chain.members)) out << " " << v + 1;
    out << "\n";
  }
  if (!pair.empty()) {
    auto [x, y] = to_internal_pair(pair, g);
    ChainConnectivity cc = connecting_chain_report(g, *c, x, y);
    out << "pair (" << x + 1 << "," << y + 1
        << "): edge-chain=" << (cc.edge_chain ? "yes" : "no")
        << " identity-chains=" << cc.identity_chain_count << "\n";
  }
}

void print_critical(const Graph& g, const std::string& format,
                    std::ostream& out) {
  CriticalityReport r = criticality_report(g);
  if (format == "json") {
    out << criticality_json(r).dump(2) << "\n";
    return;
  }
  out << "chi = " << r.chi << "\n";
  out << "critical vertices:";
  for (Vertex v : to_vertex_list(r.critical_vertices)) out << " " << v + 1;
  out << "\ncritical edges:";
  for (auto [u, v] : r.critical_edges)
    out << " (" << u + 1 << "," << v + 1 << ")";
  out << "\nk-critical: " << (r.is_k_critical ? "yes" : "no");
  out << "\ndouble-critical: " << (r.is_double_critical ? "yes" : "no") << "\n";
  for (const std::string& s : r.property_violations)
    out << "property violation: " << s << "\n";
}

int print_verify(const SuiteConfig& cfg, const std::string& format,
                 std::ostream& out) {
  std::vector<TheoremVerdict> verdicts = run_theorem_suite(cfg);
  if (format == "json") {
    out << suite_report_json(verdicts).dump(2) << "\n";
  } else {
    for (const TheoremVerdict& v : verdicts) {
      out << v.theorem_id << ": " << to_string(v.status) << " (checked "
          << v.instances_checked << ")"
          << (v.complete ? "" : " [incomplete: time budget exhausted]")
          << "\n";
      for (const Counterexample& ce : v.counterexamples) {
        out << "  counterexample:";
        for (const auto& [key, value] : ce.params)
          out << " " << key << "=" << value;
        out << "\n";
        std::istringstream dimacs(emit_dimacs(ce.graph));
        std::string line;
        while (std::getline(dimacs, line)) out << "    " << line << "\n";
      }
    }
  }
  return suite_passed(verdicts) ? 0 : 1;
}

int print_fixtures(const std::string& name, const std::string& format,
                   std::ostream& out) {
  if (!name.empty()) {
    const Fixture& f = fixture_by_name(name);
    if (format == "dot")
      out << to_dot(f.graph);
    else if (format == "json")
      out << graph_echo_json(f.graph).dump(2) << "\n";
    else
      out << emit_dimacs(f.graph, f.name + ": " + f.description);
    return 0;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const Fixture& f : builtin_fixtures())
    arr.push_back({{"name", f.name},
                   {"description", f.description},
                   {"k", f.k},
                   {"pair", {f.u + 1, f.v + 1}},
                   {"graph", graph_echo_json(f.graph)},
                   {"dimacs", emit_dimacs(f.graph)},
                   {"verified", fixture_verified(f)}});
  out << arr.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"exact analysis of forced color relations in small graphs"};
  app.require_subcommand(1);

  std::string input_path;
  std::string format;
  int k = -1;
  std::vector<int> pair;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input_path,
                    "DIMACS .col input path (default: stdin)");
  };
  auto add_format = [&](CLI::App* sub, const std::string& def) {
    format = def;
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("-k", k, "number of colors")->required();
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--pair", pair, "vertex pair (1-based labels)")
        ->expected(2);
  };

  CLI::App* chromatic =
      app.add_subcommand("chromatic", "chromatic number and polynomial");
  add_input(chromatic);
  add_format(chromatic, "json");

  CLI::App* relations =
      app.add_subcommand("relations", "classify vertex pairs at k");
  add_input(relations);
  add_format(relations, "json");
  add_k(relations);
  add_pair(relations);

  CLI::App* explicit_cmd =
      app.add_subcommand("explicit", "emit the explicit closure at k");
  add_input(explicit_cmd);
  add_format(explicit_cmd, "text");
  add_k(explicit_cmd);

  CLI::App* kempe =
      app.add_subcommand("kempe", "chains of a found k-coloring");
  add_input(kempe);
  add_format(kempe, "json");
  add_k(kempe);
  add_pair(kempe);

  CLI::App* critical =
      app.add_subcommand("critical", "criticality report");
  add_input(critical);
  add_format(critical, "json");

  CLI::App* verify = app.add_subcommand(
      "verify", "exhaustively verify the structural claims on small graphs");
  add_format(verify, "text");
  SuiteConfig cfg;
  verify->add_option("--max-n", cfg.max_n,
                     "largest graph order to sweep (hard cap 8)")
      ->capture_default_str();
  verify->add_option("--theorem", cfg.theorems,
                     "restrict to these theorem ids (repeatable)");
  std::string policy = "chromatic";
  verify->add_option("--k-policy", policy, "chromatic | range")
      ->check(CLI::IsMember({"chromatic", "range"}));
  double budget = 0.0;
  verify->add_option("--budget", budget,
                     "time budget in seconds (0 = unlimited)");

  CLI::App* fixtures = app.add_subcommand(
      "fixtures", "built-in example graphs with known implicit pairs");
  add_format(fixtures, "text");
  std::string fixture_name;
  fixtures->add_option("name", fixture_name,
                       "emit one fixture as DIMACS instead of listing all");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (chromatic->parsed()) {
      print_chromatic(load_graph(input_path, in), format, out);
    } else if (relations->parsed()) {
      print_relations(load_graph(input_path, in), k, pair, format, out);
    } else if (explicit_cmd->parsed()) {
      print_explicit(load_graph(input_path, in), k, format, out);
    } else if (kempe->parsed()) {
      print_kempe(load_graph(input_path, in), k, pair, format, out);
    } else if (critical->parsed()) {
      print_critical(load_graph(input_path, in), format, out);
    } else if (verify->parsed()) {
      cfg.k_policy =
          policy == "range" ? KPolicy::kRange : KPolicy::kChromaticOnly;
      if (budget > 0.0) cfg.time_budget_seconds = budget;
      return print_verify(cfg, format, out);
    } else if (fixtures->parsed()) {
      return print_fixtures(fixture_name, format, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace chroma
