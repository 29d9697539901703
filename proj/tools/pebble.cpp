// pebble: command-line front end for the pebbling library.
//
// Exit codes: 0 success, 1 verification failure or inequality violation,
// 2 usage or parse error, 3 size cap or budget exhausted, 4 no reduction applies.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pebbling/pebbling.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pebbling;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCaps = 3;
constexpr int kExitNotApplicable = 4;

struct Options {
  bool json = false;
  bool csv = false;
  bool timing = false;
  std::size_t jobs = 1;
  std::size_t max_vertices = 20;
  std::size_t max_pebbles = 64;
  std::uint64_t budget_states = 0;
  std::uint64_t budget_distributions = 0;
  std::size_t max_product = 16;
  std::size_t max_graph_vertices = 64;

  SearchLimits engine() const { return {max_vertices, max_pebbles, budget_states}; }
  GraphLimits graph() const { return {max_graph_vertices, 10}; }

  OptimalSearchOptions search() const {
    OptimalSearchOptions o;
    o.engine = engine();
    o.max_vertices = max_vertices;
    o.jobs = jobs;
    o.max_distributions = budget_distributions;
    return o;
  }
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::size_limit:
    case ErrorKind::budget: return kExitCaps;
    case ErrorKind::not_applicable: return kExitNotApplicable;
    default: return kExitUsage;
  }
}

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Without --timing the elapsed time is null so identical runs print identical JSON.
void emit_json(const Options& opt, const std::string& command, json inputs, json result,
               std::uint64_t states, std::uint64_t distributions, const Stopwatch& clock) {
  json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["result"] = std::move(result);
  out["stats"] = {{"states_explored", states},
                  {"distributions_examined", distributions},
                  {"elapsed_ms", opt.timing ? json(clock.elapsed_ms()) : json(nullptr)}};
  std::cout << out.dump(2) << "\n";
}

json to_json(const Distribution& d) { return json(d.counts()); }

json to_json(const MoveSequence& moves) {
  json out = json::array();
  for (const Move& m : moves) out.push_back({m.from, m.to});
  return out;
}

std::string format_moves(const MoveSequence& moves) {
  std::string out;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(moves[k].from) + "→" + std::to_string(moves[k].to);
  }
  return out.empty() ? "(none)" : out;
}

Distribution parse_dist_for(const Graph& g, const std::string& text) {
  Distribution d = parse_distribution(text);
  if (d.vertex_count() != g.size())
    throw Error(ErrorKind::invalid_argument,
                "distribution has " + std::to_string(d.vertex_count()) + " entries but " +
                    g.label() + " has " + std::to_string(g.size()) + " vertices");
  return d;
}

// --------------------------------------------------------------------------

int cmd_fopt(const Options& opt, const std::string& spec_text, bool construct) {
  Stopwatch clock;
  const GraphSpec spec = parse_graph_spec_text(spec_text);
  const Graph g = build_graph(spec, opt.graph());
  json inputs = {{"graph", spec_text}, {"construct", construct}};

  std::size_t value = 0;
  Distribution witness;
  std::uint64_t states = 0, examined = 0;
  if (construct) {
    if (spec.kind == GraphSpec::Kind::path) {
      witness = construct_optimal_path_distribution(spec.n);
    } else if (spec.kind == GraphSpec::Kind::cycle) {
      witness = construct_optimal_cycle_distribution(spec.n);
    } else {
      std::cerr << "--construct applies to path:N and cycle:N only\n";
      return kExitUsage;
    }
    value = witness.size();
  } else {
    const NumberReport report = optimal_pebbling_number(g, opt.search());
    value = report.value;
    witness = *report.witness;
    states = report.states_explored;
    examined = report.distributions_examined;
  }

  if (opt.json) {
    emit_json(opt, "fopt", inputs,
              {{"value", value},
               {"witness", to_json(witness)},
               {"method", construct ? "construction" : "search"}},
              states, examined, clock);
  } else {
    std::cout << "f_opt(" << spec_text << ") = " << value << "\n";
    std::cout << "witness: " << format_distribution(witness) << "\n";
    if (!construct)
      std::cout << "distributions examined: " << examined << ", states explored: " << states
                << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& family, std::size_t max_n) {
  Stopwatch clock;
  const bool cycles = family == "cycle";
  if (!cycles && family != "path") {
    std::cerr << "family must be 'path' or 'cycle'\n";
    return kExitUsage;
  }
  const std::size_t first = cycles ? 3 : 1;
  json rows = json::array();
  bool all_match = true, budget_hit = false;
  std::uint64_t states = 0, examined = 0;

  if (!opt.json && opt.csv) std::cout << "n,formula,brute_force,match\n";
  if (!opt.json && !opt.csv) std::cout << "n\tformula\tbrute_force\tmatch\n";

  for (std::size_t n = first; n <= max_n; ++n) {
    const std::size_t formula = cycles ? formula_fopt_cycle(n) : formula_fopt_path(n);
    const Graph g = cycles ? make_cycle(n) : make_path(n);
    json row = {{"n", n}, {"formula", formula}};
    std::string brute = "-", match = "false";
    try {
      const NumberReport r = optimal_pebbling_number(g, opt.search());
      states += r.states_explored;
      examined += r.distributions_examined;
      row["brute_force"] = r.value;
      row["match"] = r.value == formula;
      brute = std::to_string(r.value);
      match = r.value == formula ? "true" : "false";
      all_match = all_match && r.value == formula;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::budget && e.kind() != ErrorKind::size_limit) throw;
      budget_hit = true;
      row["brute_force"] = nullptr;
      row["match"] = false;
      row["error"] = e.what();
      match = std::string("error: ") + e.what();
    }
    rows.push_back(row);
    if (opt.csv && !opt.json)
      std::cout << n << "," << formula << "," << brute << "," << match << "\n";
    else if (!opt.json)
      std::cout << n << "\t" << formula << "\t" << brute << "\t" << match << "\n";
  }

  if (opt.json)
    emit_json(opt, "verify", {{"family", family}, {"max_n", max_n}},
              {{"rows", rows}, {"all_match", all_match && !budget_hit}}, states, examined, clock);
  if (!all_match) return kExitFailed;
  return budget_hit ? kExitCaps : kExitOk;
}

// Pairs of factors from {P1..P5, C3..C5} whose product has at most max_product vertices.
std::vector<std::pair<std::string, std::string>> standard_pairs(std::size_t max_product) {
  std::vector<std::pair<std::string, std::size_t>> factors;
  for (std::size_t n = 1; n <= 5; ++n) factors.emplace_back("path:" + std::to_string(n), n);
  for (std::size_t n = 3; n <= 5; ++n) factors.emplace_back("cycle:" + std::to_string(n), n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j)
      if (factors[i].second * factors[j].second <= max_product)
        pairs.emplace_back(factors[i].first, factors[j].first);
  return pairs;
}

int cmd_graham(const Options& opt, const std::vector<std::string>& specs, bool standard) {
  Stopwatch clock;
  std::vector<std::pair<std::string, std::string>> pairs;
  if (standard) pairs = standard_pairs(opt.max_product);
  if (specs.size() % 2 != 0) {
    std::cerr << "graham expects factor specs in pairs\n";
    return kExitUsage;
  }
  for (std::size_t i = 0; i < specs.size(); i += 2) pairs.emplace_back(specs[i], specs[i + 1]);
  if (pairs.empty()) {
    std::cerr << "graham needs at least one pair (or --standard)\n";
    return kExitUsage;
  }

  GrahamOptions options;
  options.search = opt.search();
  options.max_product_vertices = opt.max_product;

  json rows = json::array();
  bool all_hold = true, budget_hit = false;
  std::uint64_t states = 0, examined = 0;
  if (!opt.json && opt.csv) std::cout << "g,h,fopt_g,fopt_h,fopt_product,bound,holds,tight\n";
  if (!opt.json && !opt.csv)
    std::cout << "g\th\tfopt_g\tfopt_h\tfopt_product\tbound\tholds\ttight\n";

  for (const auto& [gs, hs] : pairs) {
    json row = {{"g", gs}, {"h", hs}};
    try {
      const Graph g = parse_graph_spec(gs, opt.graph());
      const Graph h = parse_graph_spec(hs, opt.graph());
      const GrahamRow r = graham_optimal_check(g, h, options);
      states += r.states_explored;
      examined += r.distributions_examined;
      row["fopt_g"] = r.fopt_g;
      row["fopt_h"] = r.fopt_h;
      row["fopt_product"] = r.fopt_product;
      row["bound"] = r.fopt_g * r.fopt_h;
      row["holds"] = r.holds;
      row["tight"] = r.tight;
      all_hold = all_hold && r.holds;
      const char* sep = opt.csv ? "," : "\t";
      if (!opt.json)
        std::cout << gs << sep << hs << sep << r.fopt_g << sep << r.fopt_h << sep
                  << r.fopt_product << sep << r.fopt_g * r.fopt_h << sep
                  << (r.holds ? "true" : "false") << sep << (r.tight ? "true" : "false") << "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::budget && e.kind() != ErrorKind::size_limit) throw;
      budget_hit = true;
      row["error"] = e.what();
      if (!opt.json) std::cout << gs << (opt.csv ? "," : "\t") << hs << " error: " << e.what() << "\n";
    }
    rows.push_back(row);
  }

  if (opt.json)
    emit_json(opt, "graham", {{"pairs", json(pairs)}, {"standard", standard}},
              {{"rows", rows}, {"all_hold", all_hold && !budget_hit}}, states, examined, clock);
  if (!all_hold) return kExitFailed;
  return budget_hit ? kExitCaps : kExitOk;
}

int cmd_solvable(const Options& opt, const std::string& spec_text, const std::string& dist_text,
                 std::optional<std::size_t> target) {
  Stopwatch clock;
  const Graph g = parse_graph_spec(spec_text, opt.graph());
  const Distribution d = parse_dist_for(g, dist_text);
  json inputs = {{"graph", spec_text}, {"dist", dist_text}};
  if (target) inputs["target"] = *target;

  if (target) {
    const SolveReport r = is_reachable(g, d, *target, opt.engine());
    if (opt.json) {
      emit_json(opt, "solvable", inputs,
                {{"reachable", r.verdict},
                 {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}},
                r.states_explored, 0, clock);
    } else {
      std::cout << (r.verdict ? "reachable" : "unreachable") << "\n";
      if (r.witness) std::cout << "witness: " << format_moves(*r.witness) << "\n";
    }
    return r.verdict ? kExitOk : kExitFailed;
  }

  const SolvabilityReport r = check_solvability(g, d, opt.engine(), false);
  if (opt.json) {
    json per_vertex = json::array();
    for (const auto& v : r.reachable) per_vertex.push_back(v.value_or(false));
    emit_json(opt, "solvable", inputs, {{"solvable", r.solvable}, {"reachable", per_vertex}},
              r.states_explored, 0, clock);
  } else {
    for (std::size_t v = 0; v < g.size(); ++v)
      std::cout << "vertex " << v << ": "
                << (r.reachable[v].value_or(false) ? "reachable" : "unreachable") << "\n";
    std::cout << (r.solvable ? "solvable" : "unsolvable") << "\n";
  }
  return r.solvable ? kExitOk : kExitFailed;
}

std::string format_index_map(const IndexMap& map) {
  std::string out;
  for (std::size_t u = 0; u < map.size(); ++u) {
    if (u) out += " ";
    out += std::to_string(u) + "->" + (map[u] ? std::to_string(*map[u]) : std::string("x"));
  }
  return out;
}

int cmd_reduce(const Options& opt, const std::string& spec_text, const std::string& dist_text,
               bool to_fixpoint, bool check) {
  Stopwatch clock;
  Graph g = parse_graph_spec(spec_text, opt.graph());
  Distribution d = parse_dist_for(g, dist_text);
  json steps = json::array();
  bool preserved = true;
  std::uint64_t states = 0;

  while (true) {
    std::optional<SurgeryResult> step = try_reduce(g, d);
    if (!step) break;
    json row = {{"operation", step->operation},
                {"graph_before", g.label()},
                {"dist_before", to_json(d)},
                {"graph_after", step->graph_after.label()},
                {"dist_after", to_json(step->dist_after)},
                {"pebbles_removed_net", step->pebbles_removed_net}};
    json map = json::array();
    for (const auto& m : step->index_map) map.push_back(m ? json(*m) : json(nullptr));
    row["index_map"] = map;
    std::optional<bool> before, after;
    if (check) {
      const auto rb = check_solvability(g, d, opt.engine());
      const auto ra = check_solvability(step->graph_after, step->dist_after, opt.engine());
      states += rb.states_explored + ra.states_explored;
      before = rb.solvable;
      after = ra.solvable;
      row["solvable_before"] = *before;
      row["solvable_after"] = *after;
      if (*before && !*after) preserved = false;
    }
    if (!opt.json) {
      std::cout << "applied " << step->operation << ": " << g.label() << " ["
                << format_distribution(d) << "] -> " << step->graph_after.label() << " ["
                << format_distribution(step->dist_after) << "]\n";
      std::cout << "  index map: " << format_index_map(step->index_map) << "\n";
      if (check)
        std::cout << "  solvable before: " << (*before ? "yes" : "no")
                  << ", after: " << (*after ? "yes" : "no") << "\n";
    }
    steps.push_back(row);
    g = step->graph_after;
    d = step->dist_after;
    if (!to_fixpoint) break;
  }

  if (opt.json)
    emit_json(opt, "reduce",
              {{"graph", spec_text}, {"dist", dist_text}, {"to_fixpoint", to_fixpoint},
               {"check", check}},
              {{"steps", steps}, {"applied", !steps.empty()}, {"preserved", preserved}}, states, 0,
              clock);
  if (steps.empty()) {
    std::cerr << "no reduction applies to [" << dist_text << "] on " << spec_text << "\n";
    return kExitNotApplicable;
  }
  return preserved ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph pebbling: optimal pebbling numbers, solvability, reductions"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON on stdout");
  app.add_flag("--csv", opt.csv, "Tables as CSV (verify, graham)");
  app.add_flag("--timing", opt.timing, "Report elapsed_ms in JSON output");
  app.add_option("--jobs", opt.jobs, "Worker threads for brute-force sweeps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--max-vertices", opt.max_vertices,
                 "Vertex cap for the engine and the f_opt search")
      ->capture_default_str();
  app.add_option("--max-pebbles", opt.max_pebbles, "Pebble cap per engine query (at most 255)")
      ->capture_default_str();
  app.add_option("--budget-states", opt.budget_states,
                 "State budget per engine query (0 = unbounded)")
      ->capture_default_str();
  app.add_option("--budget-distributions", opt.budget_distributions,
                 "Distribution budget per f_opt search (0 = unbounded)")
      ->capture_default_str();
  app.add_option("--max-product", opt.max_product, "Product vertex cap for graham checks")
      ->capture_default_str();
  app.add_option("--max-graph-vertices", opt.max_graph_vertices,
                 "Vertex cap when building product graphs")
      ->capture_default_str();

  std::string spec, dist, family;
  bool construct = false, to_fixpoint = false, check = false, standard = false;
  std::size_t max_n = 9;
  std::optional<std::size_t> target;
  std::vector<std::string> pair_specs;

  auto* fopt = app.add_subcommand("fopt", "Optimal pebbling number by exhaustive search");
  fopt->add_option("spec", spec, "Graph spec, e.g. cycle:7 or product(path:3,path:3)")->required();
  fopt->add_flag("--construct", construct, "Emit the closed-form optimal distribution (path/cycle)");

  auto* verify = app.add_subcommand("verify", "Compare 2t+r with brute force for n up to --max-n");
  verify->add_option("family", family, "path or cycle")->required();
  verify->add_option("--max-n", max_n, "Largest n")->capture_default_str();

  auto* graham = app.add_subcommand("graham", "Check f_opt(GxH) <= f_opt(G) f_opt(H) per pair");
  graham->add_option("specs", pair_specs, "Factor specs, two per pair");
  graham->add_flag("--standard", standard,
                   "All pairs from {path:1..5, cycle:3..5} within --max-product");

  auto* solvable = app.add_subcommand("solvable", "Solvability or single-target reachability");
  solvable->add_option("spec", spec, "Graph spec")->required();
  solvable->add_option("--dist", dist, "Comma-separated pebble counts")->required();
  solvable->add_option("--target", target, "Target vertex");

  auto* reduce = app.add_subcommand("reduce", "Apply a distribution reduction");
  reduce->add_option("spec", spec, "Graph spec (path or cycle)")->required();
  reduce->add_option("--dist", dist, "Comma-separated pebble counts")->required();
  reduce->add_flag("--to-fixpoint", to_fixpoint, "Repeat until no reduction applies");
  reduce->add_flag("--check", check, "Engine-check solvability before and after each step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fopt) return cmd_fopt(opt, spec, construct);
    if (*verify) return cmd_verify(opt, family, max_n);
    if (*graham) return cmd_graham(opt, pair_specs, standard);
    if (*solvable) return cmd_solvable(opt, spec, dist, target);
    if (*reduce) return cmd_reduce(opt, spec, dist, to_fixpoint, check);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
