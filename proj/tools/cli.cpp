#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "scminor/antimorphism.hpp"
#include "scminor/construction.hpp"
#include "scminor/errors.hpp"
#include "scminor/generators.hpp"
#include "scminor/graph6.hpp"
#include "scminor/oracle.hpp"
#include "scminor/topology.hpp"

namespace scminor::cli {

using json = nlohmann::ordered_json;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SCMINOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultBudget;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputGraph {
  std::size_t line = 0;
  std::string text;
  Graph graph;
};

struct Common {
  bool json = false;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  std::string input = "-";
};

std::vector<InputGraph> read_graphs(const std::string& source, std::istream& in) {
  std::ifstream file;
  std::istream* stream = &in;
  if (source != "-") {
    file.open(source);
    if (!file) throw UsageError("cannot read input file '" + source + "'");
    stream = &file;
  }
  std::vector<InputGraph> graphs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(*stream, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back({number, line, parse_graph6(line)});
    } catch (const ParseError& e) {
      throw UsageError((source == "-" ? std::string("<stdin>") : source) + ":" + std::to_string(number) + ": " +
                       e.what());
    }
  }
  if (graphs.empty()) throw UsageError("no graphs on input");
  return graphs;
}

std::string set_string(const VertexSet& s) {
  std::string out = "{";
  for (int v : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string cycle_string(const std::vector<int>& cycle) {
  std::string out = "(";
  for (std::size_t i = 0; i < cycle.size(); ++i) out += (i ? " " : "") + std::to_string(cycle[i]);
  return out + ")";
}

int cmd_check(const Common& c, std::istream& in, std::ostream& out) {
  int code = kSuccess;
  for (const InputGraph& g : read_graphs(c.input, in)) {
    const std::optional<Permutation> rho = find_antimorphism(g.graph);
    std::optional<SachsCheck> sachs;
    if (rho) sachs = check_sachs(cycle_decomposition(*rho), g.graph.order());
    if (!rho) code = kNegative;
    if (c.json) {
      out << json{{"graph", g.text},
                  {"self_complementary", rho.has_value()},
                  {"rho", rho ? json(to_cycle_notation(*rho)) : json(nullptr)},
                  {"sachs", sachs ? json{{"ok", sachs->ok}, {"reason", sachs->reason}} : json(nullptr)}}
                 .dump()
          << '\n';
      continue;
    }
    if (!rho) {
      out << "self-complementary: no\n";
      continue;
    }
    out << "self-complementary: yes, rho=" << to_cycle_notation(*rho)
        << ", sachs=" << (sachs->ok ? std::string("ok") : "fail (" + sachs->reason + ")") << '\n';
  }
  return code;
}

int cmd_theorem_minor(const Common& c, std::istream& in, std::ostream& out) {
  int code = kSuccess;
  for (const InputGraph& g : read_graphs(c.input, in)) {
    const std::optional<TheoremConstruction> built = construct_theorem_minor(g.graph);
    if (!built) code = kNegative;
    if (c.json) {
      json j{{"graph", g.text}, {"self_complementary", built.has_value()}};
      if (built) {
        j["rho"] = to_cycle_notation(built->rho);
        j["plan"] = to_json(built->plan);
        j["model"] = to_json(built->model);
      }
      out << j.dump() << '\n';
      continue;
    }
    out << "graph " << g.text << '\n';
    if (!built) {
      out << "self-complementary: no\n";
      continue;
    }
    out << "rho = " << to_cycle_notation(built->rho) << '\n';
    for (const CycleMatching& cm : built->plan.per_cycle) {
      out << "cycle " << cycle_string(cm.cycle) << ": generator " << cm.generator << ", shift " << cm.shift
          << ", contract";
      for (const Edge& e : cm.edges) out << " {" << e.u << "," << e.v << "}";
      out << '\n';
    }
    if (built->plan.fixed_vertex) out << "fixed vertex " << *built->plan.fixed_vertex << " joins every pair\n";
    out << "K" << built->model.order() << " model verified:";
    for (const VertexSet& s : built->model.branch_sets) out << ' ' << set_string(s);
    out << '\n' << to_json(built->model).dump() << '\n';
  }
  return code;
}

int cmd_oracle_minor(const Common& c, const std::string& target_text, std::istream& in, std::ostream& out) {
  Graph target;
  try {
    target = parse_graph6(target_text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--target: ") + e.what());
  }
  int code = kSuccess;
  for (const InputGraph& g : read_graphs(c.input, in)) {
    const MinorResult r = has_minor(MinorQuery{g.graph, target, c.budget});
    if (r.answer == Answer::budget_exceeded) {
      code = kBudget;
    } else if (r.answer == Answer::no && code == kSuccess) {
      code = kNegative;
    }
    if (c.json) {
      json j = to_json(r);
      j["graph"] = g.text;
      out << j.dump() << '\n';
      continue;
    }
    out << "answer: " << to_string(r.answer) << '\n';
    if (r.witness) out << to_json(*r.witness).dump() << '\n';
    out << "expansions: " << r.expansions << '\n';
  }
  return code;
}

int cmd_hadwiger(const Common& c, std::istream& in, std::ostream& out) {
  int code = kSuccess;
  for (const InputGraph& g : read_graphs(c.input, in)) {
    const HadwigerResult h = hadwiger(g.graph, c.budget);
    if (!h.exact()) code = kBudget;
    if (c.json) {
      out << json{{"graph", g.text},          {"hadwiger", h.exact() ? json(h.lower) : json(nullptr)},
                  {"lower", h.lower},         {"upper", h.upper},
                  {"exact", h.exact()},       {"witness", to_json(h.witness)},
                  {"expansions", h.expansions}}
                 .dump()
          << '\n';
      continue;
    }
    if (h.exact()) {
      out << "hadwiger: " << h.lower << '\n';
    } else {
      out << "hadwiger: between " << h.lower << " and " << h.upper << " (budget exhausted)\n";
    }
    out << to_json(h.witness).dump() << '\n';
  }
  return code;
}

Graph family_graph(const std::string& family, int n, int m) {
  if (family == "sharp4n") return sharp_4n(n);
  if (family == "sharp4n1") return sharp_4n_plus_1(n);
  if (family == "complete") return complete_graph(n);
  if (family == "empty") return empty_graph(n);
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "bipartite") return complete_bipartite(n, m);
  throw UsageError("unknown family '" + family + "'");
}

void emit_graphs(const Common& c, const std::vector<Graph>& graphs, std::ostream& out) {
  if (c.json) {
    json list = json::array();
    for (const Graph& g : graphs) list.push_back(write_graph6(g));
    out << json{{"count", graphs.size()}, {"graphs", std::move(list)}}.dump() << '\n';
    return;
  }
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
}

struct VerifyTally {
  int graphs = 0;
  int sachs_ok = 0;
  int verified = 0;
};

int cmd_verify_theorem(const Common& c, int n, bool large, int random_count, std::ostream& out) {
  std::vector<Graph> graphs;
  std::string source;
  if (random_count > 0) {
    source = "random";
    for (int i = 0; i < random_count; ++i) graphs.push_back(random_sc(n, c.seed + static_cast<std::uint64_t>(i)).graph);
  } else {
    source = "enumeration";
    graphs = enumerate_sc(n, EnumerateOptions{large});
  }
  const int k = guaranteed_clique_order(n);
  const Graph clique = complete_graph(k);
  VerifyTally tally;
  for (const Graph& g : graphs) {
    ++tally.graphs;
    const std::optional<TheoremConstruction> built = construct_theorem_minor(g);
    if (!built) continue;
    if (check_sachs(cycle_decomposition(built->rho), n).ok) ++tally.sachs_ok;
    if (built->model.order() == k && verify_minor_model(g, built->model, clique).ok) ++tally.verified;
  }
  const bool all = tally.verified == tally.graphs && tally.sachs_ok == tally.graphs;
  if (c.json) {
    out << json{{"n", n},          {"source", source},           {"graphs", tally.graphs}, {"k", k},
                {"sachs_ok", tally.sachs_ok}, {"verified", tally.verified}, {"all_verified", all}}
               .dump()
        << '\n';
  } else {
    out << "n   source       graphs  sachs_ok  verified  k\n";
    std::ostringstream row;
    row << std::left;
    row.width(4);
    row << n;
    row.width(13);
    row << source;
    row.width(8);
    row << tally.graphs;
    row.width(10);
    row << tally.sachs_ok;
    row.width(10);
    row << tally.verified;
    row << k;
    out << row.str() << '\n';
    out << tally.graphs << " graphs, " << tally.verified << "/" << tally.graphs << " K" << k
        << "-minor certificates verified\n";
  }
  return all ? kSuccess : kNegative;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_topo(const Common& c, int max_apex, std::istream& in, std::ostream& out) {
  int code = kSuccess;
  for (const InputGraph& g : read_graphs(c.input, in)) {
    const TopologyReport r = report(g.graph, max_apex, c.budget);
    if (r.indeterminate()) code = kBudget;
    if (c.json) {
      json j = to_json(r);
      j["graph"] = g.text;
      out << j.dump() << '\n';
      continue;
    }
    out << "graph " << g.text << '\n';
    out << "outerplanar: " << yes_no(r.outerplanar) << '\n';
    out << "planar: " << yes_no(r.planar) << '\n';
    for (const auto& [name, cert] : {std::pair{"il_certificate (K6)", &r.il}, std::pair{"ik_certificate (K7)", &r.ik}}) {
      out << name << ": " << to_string(cert->status) << " via " << cert->source;
      if (cert->model) out << ' ' << to_json(*cert->model).dump();
      out << '\n';
    }
    for (const auto& [j, a] : r.apex) {
      out << j << "-apex: " << yes_no(a.holds);
      if (a.deleted) out << " delete " << set_string(*a.deleted);
      out << '\n';
    }
    if (r.not_il_by_apex()) out << "linklessly embeddable (1-apex)\n";
    if (r.not_ik_by_apex()) out << "not intrinsically knotted (2-apex or better)\n";
  }
  return code;
}

void add_common(CLI::App* cmd, Common& c, bool takes_input) {
  cmd->add_flag("--json", c.json, "Machine-readable JSON output");
  cmd->add_option("--budget", c.budget, "Oracle node-expansion budget (default: $SCMINOR_BUDGET or 1e8)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Random seed");
  if (takes_input) cmd->add_option("input", c.input, "graph6 file, one graph per line ('-' for stdin)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique minors of self-complementary graphs", "scminor"};
  app.require_subcommand(1);

  Common c;
  c.budget = default_budget();

  CLI::App* check = app.add_subcommand("check", "Decide self-complementarity and print an antimorphism");
  add_common(check, c, true);

  std::string target;
  CLI::App* minor = app.add_subcommand("minor", "Construct the guaranteed clique minor (or query --target)");
  add_common(minor, c, true);
  minor->add_option("--target", target, "graph6 target: run the exact oracle instead of the construction");

  CLI::App* had = app.add_subcommand("hadwiger", "Exact Hadwiger number with witness");
  add_common(had, c, true);

  std::string family;
  int n = -1;
  int m = 0;
  bool random = false;
  int count = 1;
  CLI::App* gen = app.add_subcommand("gen", "Emit graph6 for a named family or random self-complementary graphs");
  add_common(gen, c, false);
  gen->add_option("--family", family, "sharp4n, sharp4n1, complete, empty, path, cycle, bipartite");
  gen->add_option("--n", n, "Family parameter or vertex count")->required();
  gen->add_option("--m", m, "Second part size for bipartite");
  gen->add_flag("--random", random, "Random self-complementary graphs on n vertices");
  gen->add_option("--count", count, "Number of random graphs (seeds seed, seed+1, ...)")->check(CLI::PositiveNumber);

  bool large = false;
  CLI::App* en = app.add_subcommand("enum", "All self-complementary graphs on n vertices up to isomorphism");
  add_common(en, c, false);
  en->add_option("--n", n, "1, 4, 5, 8, 9 (12, 13 with --large)")->required();
  en->add_flag("--large", large, "Allow n = 12, 13");

  int max_apex = 2;
  CLI::App* topo = app.add_subcommand("topo", "Outerplanarity, planarity, IL/IK certificates, apex numbers");
  add_common(topo, c, true);
  topo->add_option("--apex", max_apex, "Largest j for j-apex testing")->check(CLI::Range(0, 3));

  int random_count = 0;
  CLI::App* verify = app.add_subcommand("verify-theorem", "Construct and verify the clique minor over a family");
  add_common(verify, c, false);
  verify->add_option("--n", n, "Vertex count")->required();
  verify->add_flag("--large", large, "Allow enumeration at n = 12, 13");
  verify->add_option("--random", random_count, "Use this many random graphs instead of enumeration")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kSuccess : kUsage;
  }

  try {
    if (*check) return cmd_check(c, in, out);
    if (*minor) return target.empty() ? cmd_theorem_minor(c, in, out) : cmd_oracle_minor(c, target, in, out);
    if (*had) return cmd_hadwiger(c, in, out);
    if (*gen) {
      std::vector<Graph> graphs;
      if (random) {
        for (int i = 0; i < count; ++i) graphs.push_back(random_sc(n, c.seed + static_cast<std::uint64_t>(i)).graph);
      } else {
        if (family.empty()) throw UsageError("gen needs --family or --random");
        graphs.push_back(family_graph(family, n, m));
      }
      emit_graphs(c, graphs, out);
      return kSuccess;
    }
    if (*en) {
      emit_graphs(c, enumerate_sc(n, EnumerateOptions{large}), out);
      return kSuccess;
    }
    if (*topo) return cmd_topo(c, max_apex, in, out);
    if (*verify) return cmd_verify_theorem(c, n, large, random_count, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace scminor::cli
