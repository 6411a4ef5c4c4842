#include "rulingset/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "rulingset/domination.hpp"
#include "rulingset/edge_list.hpp"
#include "rulingset/generators.hpp"
#include "rulingset/independence.hpp"
#include "rulingset/power.hpp"
#include "rulingset/ruling.hpp"

namespace rulingset::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string input = "-";
  std::string output;
  std::string set_file;
  bool json = false;
  std::size_t max_exact_n = kDefaultExactCap;
  std::size_t max_oracle_n = kDefaultOracleCap;

  std::uint32_t k = 1;
  std::uint32_t alpha = 2;
  std::uint32_t beta = 1;
  std::uint64_t seed = 0;
  std::string method;
  std::string mode = "bfs";

  std::string family = "path";
  std::size_t n = 0;
  double p = 0.0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t budget = 100;
  std::string witness_family = "mixed";
  double bench_p = 0.3;

  std::vector<std::string> bench_families{"path", "cycle", "random_gnp"};
  std::vector<std::size_t> bench_sizes{8, 12, 16};
  std::vector<std::uint64_t> bench_seeds{0};
  std::vector<std::uint32_t> bench_k{1, 2, 3};
  std::vector<std::uint32_t> bench_alpha{2, 3};
  std::vector<std::string> bench_methods{"mds-exact", "mds-greedy", "mis-luby", "mis-greedy"};
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

LabeledGraph load_graph(const Options& opt, std::istream& in) {
  return parse_edge_list(read_text(opt.input, in));
}

json id_array(const VertexSet& s) {
  json arr = json::array();
  for (Vertex v : s) arr.push_back(v);
  return arr;
}

json label_array(const VertexSet& s, const LabeledGraph& g) {
  json arr = json::array();
  for (Vertex v : s) arr.push_back(g.labels[v]);
  return arr;
}

std::string join_labels(const VertexSet& s, const LabeledGraph& g) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += g.labels[v];
  }
  return out;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Report {
  json spec;
  std::string method;
  VertexSet set;
  bool valid = false;
  bool optimal = false;
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> seed;
  json extra = json::object();
};

Report from_ruling(const RulingReport& r) {
  Report out;
  if (const auto* plain = std::get_if<PlainK>(&r.spec)) {
    out.spec = {{"k", plain->k}};
  } else {
    const auto& ab = std::get<AlphaBeta>(r.spec);
    out.spec = {{"alpha", ab.alpha}, {"beta", ab.beta}};
  }
  out.method = r.method;
  out.set = r.set;
  out.valid = r.valid;
  out.optimal = r.optimal;
  out.elapsed_ms = r.elapsed_ms;
  out.seed = r.seed;
  return out;
}

int emit(const Report& r, const LabeledGraph& g, const Options& opt, std::ostream& out) {
  if (opt.json) {
    json doc;
    doc["n"] = g.graph.vertex_count();
    doc["m"] = g.graph.edge_count();
    for (const auto& [key, value] : r.spec.items()) doc[key] = value;
    doc["method"] = r.method;
    doc["set"] = id_array(r.set);
    doc["labels"] = label_array(r.set, g);
    doc["size"] = r.set.size();
    doc["valid"] = r.valid;
    doc["optimal"] = r.optimal;
    doc["elapsed_ms"] = r.elapsed_ms;
    if (r.seed) doc["seed"] = *r.seed;
    for (const auto& [key, value] : r.extra.items()) doc[key] = value;
    out << doc.dump() << '\n';
  } else {
    out << "method " << r.method;
    for (const auto& [key, value] : r.spec.items()) out << ' ' << key << '=' << value;
    if (r.seed) out << " seed=" << *r.seed;
    out << "\nsize " << r.set.size() << "\nvalid " << (r.valid ? "true" : "false")
        << "\noptimal " << (r.optimal ? "true" : "false") << "\nset " << join_labels(r.set, g)
        << '\n';
  }
  return r.valid ? kOk : kRejected;
}

DominationMethod domination_method(const std::string& name) {
  if (name.empty() || name == "exact") return DominationMethod::Exact;
  if (name == "greedy") return DominationMethod::Greedy;
  throw UsageError("--method must be exact or greedy");
}

MisMethod mis_method(const std::string& name) {
  if (name.empty() || name == "luby") return MisMethod::Luby;
  if (name == "greedy") return MisMethod::Greedy;
  throw UsageError("--method must be luby or greedy");
}

GeneratorSpec generator_spec(const std::string& family_name, std::size_t n, double p,
                             std::uint64_t seed, std::size_t rows, std::size_t cols) {
  auto family = parse_family(family_name);
  if (!family) throw UsageError("unknown family '" + family_name + "'");
  GeneratorSpec spec{*family, n, p, seed, rows, cols};
  if (spec.family == Family::Grid && rows == 0 && cols == 0) {
    auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    spec.rows = spec.cols = side;
  }
  return spec;
}

// Subcommands.

int cmd_gen(const Options& opt, std::ostream& out) {
  std::size_t n = opt.n;
  if (opt.family == "grid" && n == 0) n = opt.rows * opt.cols;
  Graph g = generate(generator_spec(opt.family, n, opt.p, opt.seed, opt.rows, opt.cols));
  write_text(opt.output, serialize_edge_list(LabeledGraph::with_numeric_labels(std::move(g))),
             out);
  return kOk;
}

int cmd_power(const Options& opt, std::istream& in, std::ostream& out) {
  LabeledGraph g = load_graph(opt, in);
  auto start = Clock::now();
  std::optional<IterativeTrace> trace;
  Graph power;
  if (opt.mode == "bfs") {
    power = power_graph(g.graph, opt.k, PowerMode::Canonical);
  } else if (opt.mode == "iterative") {
    trace = power_graph_iterative(g.graph, opt.k);
    power = trace->graph;
  } else {
    throw UsageError("--mode must be bfs or iterative");
  }
  double elapsed = ms_since(start);
  LabeledGraph result = g.with_graph(std::move(power));
  if (opt.json) {
    json doc{{"n", result.graph.vertex_count()},
             {"m", result.graph.edge_count()},
             {"k", opt.k},
             {"mode", opt.mode},
             {"input_m", g.graph.edge_count()},
             {"elapsed_ms", elapsed}};
    if (trace) {
      doc["rounds"] = trace->rounds;
      doc["reached_fixpoint"] = trace->reached_fixpoint;
    }
    if (!opt.output.empty() && opt.output != "-") {
      write_text(opt.output, serialize_edge_list(result), out);
    }
    out << doc.dump() << '\n';
  } else {
    write_text(opt.output, serialize_edge_list(result), out);
  }
  return kOk;
}

int cmd_solve(const Options& opt, std::istream& in, std::ostream& out) {
  LabeledGraph g = load_graph(opt, in);
  auto report = min_k_ruling_set(g.graph, opt.k, domination_method(opt.method), opt.max_exact_n);
  return emit(from_ruling(report), g, opt, out);
}

int cmd_solve_alpha(const Options& opt, std::istream& in, std::ostream& out) {
  LabeledGraph g = load_graph(opt, in);
  auto report = alpha_ruling_set(g.graph, opt.alpha, mis_method(opt.method), opt.seed);
  return emit(from_ruling(report), g, opt, out);
}

int cmd_mds(const Options& opt, std::istream& in, std::ostream& out) {
  LabeledGraph g = load_graph(opt, in);
  auto method = domination_method(opt.method);
  auto start = Clock::now();
  DominationResult result = method == DominationMethod::Exact
                                ? min_dominating_set(g.graph, opt.max_exact_n)
                                : greedy_dominating_set(g.graph);
  Report r;
  r.elapsed_ms = ms_since(start);
  r.spec = {{"k", 1}};
  r.method = method == DominationMethod::Exact ? "mds-exact" : "mds-greedy";
  r.set = result.set;
  r.valid = is_dominating(g.graph, result.set).dominating;
  r.optimal = result.optimal;
  r.extra["nodes_explored"] = result.nodes_explored;
  return emit(r, g, opt, out);
}

int cmd_mis(const Options& opt, std::istream& in, std::ostream& out) {
  LabeledGraph g = load_graph(opt, in);
  auto method = mis_method(opt.method);
  auto start = Clock::now();
  MisResult result = method == MisMethod::Luby ? luby_mis(g.graph, opt.seed) : greedy_mis(g.graph);
  Report r;
  r.elapsed_ms = ms_since(start);
  r.spec = {{"alpha", 2}, {"beta", 1}};
  r.method = method == MisMethod::Luby ? "mis-luby" : "mis-greedy";
  r.set = result.set;
  r.valid = is_maximal_independent(g.graph, result.set).ok();
  r.seed = result.seed;
  if (method == MisMethod::Luby) r.extra["rounds"] = result.rounds;
  return emit(r, g, opt, out);
}

int cmd_verify(const Options& opt, bool has_k, bool has_alpha, bool has_beta, std::istream& in,
               std::ostream& out) {
  if (has_k == (has_alpha || has_beta) || has_alpha != has_beta) {
    throw UsageError("verify needs either --k or both --alpha and --beta");
  }
  if (opt.set_file.empty()) throw UsageError("verify needs --set");
  LabeledGraph g = load_graph(opt, in);
  VertexSet s = parse_vertex_set(read_text(opt.set_file, in), g);

  std::vector<Vertex> uncovered;
  std::vector<Edge> close_pairs;
  json spec;
  if (has_k) {
    uncovered = verify_k_ruling(g.graph, s, opt.k).violators;
    spec = {{"k", opt.k}};
  } else {
    auto check = verify_alpha_beta(g.graph, s, opt.alpha, opt.beta);
    uncovered = std::move(check.uncovered);
    close_pairs = std::move(check.close_pairs);
    spec = {{"alpha", opt.alpha}, {"beta", opt.beta}};
  }
  const bool valid = uncovered.empty() && close_pairs.empty();

  if (opt.json) {
    json doc{{"n", g.graph.vertex_count()}, {"m", g.graph.edge_count()}};
    for (const auto& [key, value] : spec.items()) doc[key] = value;
    doc["set"] = id_array(s);
    doc["labels"] = label_array(s, g);
    doc["size"] = s.size();
    doc["valid"] = valid;
    json uncovered_labels = json::array();
    for (Vertex v : uncovered) uncovered_labels.push_back(g.labels[v]);
    doc["uncovered"] = uncovered_labels;
    if (!has_k) {
      json pairs = json::array();
      for (auto [a, b] : close_pairs) pairs.push_back({g.labels[a], g.labels[b]});
      doc["close_pairs"] = pairs;
    }
    out << doc.dump() << '\n';
  } else {
    out << "valid " << (valid ? "true" : "false") << '\n';
    for (Vertex v : uncovered) out << "uncovered " << g.labels[v] << '\n';
    for (auto [a, b] : close_pairs) {
      out << "too-close " << g.labels[a] << ' ' << g.labels[b] << '\n';
    }
  }
  return valid ? kOk : kRejected;
}

int cmd_oracle(const Options& opt, std::istream& in, std::ostream& out) {
  LabeledGraph g = load_graph(opt, in);
  auto report = brute_force_min_k_ruling(g.graph, opt.k, opt.max_oracle_n);
  return emit(from_ruling(report), g, opt, out);
}

int cmd_witness(const Options& opt, std::ostream& out) {
  auto family = parse_witness_family(opt.witness_family);
  if (!family) throw UsageError("--family must be path, cycle, random or mixed");
  WitnessSearch search{*family, opt.alpha, opt.beta, opt.budget, opt.seed, opt.max_exact_n};
  auto witness = find_beta_mismatch_witness(search);
  if (!witness) {
    if (opt.json) {
      out << json{{"alpha", opt.alpha}, {"beta", opt.beta}, {"budget", opt.budget},
                  {"found", false}}.dump()
          << '\n';
    } else {
      out << "no witness within " << opt.budget << " instances\n";
    }
    return kOk;
  }

  LabeledGraph g = LabeledGraph::with_numeric_labels(witness->graph);
  if (!opt.output.empty()) {
    write_text(opt.output + ".edges", serialize_edge_list(g), out);
    write_text(opt.output + ".set", serialize_vertex_set(witness->set, g), out);
  }
  if (opt.json) {
    json pairs = json::array();
    for (auto [a, b] : witness->check.close_pairs) pairs.push_back({a, b});
    json doc{{"alpha", opt.alpha},
             {"beta", opt.beta},
             {"budget", opt.budget},
             {"found", true},
             {"instance", witness->instance},
             {"generator", describe(witness->generator)},
             {"pipeline", witness->pipeline},
             {"n", witness->graph.vertex_count()},
             {"m", witness->graph.edge_count()},
             {"set", id_array(witness->set)},
             {"close_pairs", pairs},
             {"uncovered", witness->check.uncovered},
             {"valid", false}};
    out << doc.dump() << '\n';
  } else {
    out << "witness at instance " << witness->instance << ": " << describe(witness->generator)
        << '\n'
        << "pipeline " << witness->pipeline << '\n'
        << "set " << join_labels(witness->set, g) << '\n';
    for (auto [a, b] : witness->check.close_pairs) out << "too-close " << a << ' ' << b << '\n';
    for (Vertex v : witness->check.uncovered) out << "uncovered " << v << '\n';
  }
  return kRejected;
}

std::string format_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  csv << "family,n,p,seed,k_or_alpha,method,size,valid,elapsed_ms\n";
  for (const auto& family : opt.bench_families) {
    for (std::size_t n : opt.bench_sizes) {
      for (std::uint64_t seed : opt.bench_seeds) {
        Graph g = generate(generator_spec(family, n, opt.bench_p, seed, 0, 0));
        for (const auto& method : opt.bench_methods) {
          const bool mds = method == "mds-exact" || method == "mds-greedy";
          if (!mds && method != "mis-luby" && method != "mis-greedy") {
            throw UsageError("unknown bench method '" + method + "'");
          }
          for (std::uint32_t param : mds ? opt.bench_k : opt.bench_alpha) {
            RulingReport r;
            try {
              r = mds ? min_k_ruling_set(g, param,
                                         method == "mds-exact" ? DominationMethod::Exact
                                                               : DominationMethod::Greedy,
                                         opt.max_exact_n)
                      : alpha_ruling_set(g, param,
                                         method == "mis-luby" ? MisMethod::Luby : MisMethod::Greedy,
                                         seed);
            } catch (const SizeLimitError& e) {
              err << "skipping " << family << " n=" << n << ' ' << method << ": " << e.what()
                  << '\n';
              continue;
            }
            csv << family << ',' << n << ',' << opt.bench_p << ',' << seed << ',' << param << ','
                << method << ',' << r.size() << ',' << (r.valid ? "true" : "false") << ','
                << format_ms(r.elapsed_ms) << '\n';
          }
        }
      }
    }
  }
  write_text(opt.output, csv.str(), out);
  return kOk;
}

void add_input(CLI::App* sub, Options& opt) {
  sub->add_option("-i,--input", opt.input, "edge-list file, '-' for stdin");
  sub->add_flag("--json", opt.json, "emit a JSON report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Minimum k-ruling sets via graph powers, and (alpha, alpha-1) ruling sets via MIS",
               "rulingset"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a graph family as an edge list");
  gen->add_option("--family", opt.family,
                  "path|cycle|star|grid|random_gnp|random_tree|complete|empty")
      ->required();
  gen->add_option("--n", opt.n, "vertex count");
  gen->add_option("--p", opt.p, "edge probability (random_gnp)");
  gen->add_option("--seed", opt.seed, "RNG seed (default 0)");
  gen->add_option("--rows", opt.rows, "grid rows");
  gen->add_option("--cols", opt.cols, "grid columns");
  gen->add_option("-o,--output", opt.output, "output file (default stdout)");

  auto* power = app.add_subcommand("power", "write the k-th power graph");
  add_input(power, opt);
  power->add_option("--k", opt.k, "power exponent")->required();
  power->add_option("--mode", opt.mode, "bfs|iterative")->check(CLI::IsMember({"bfs", "iterative"}));
  power->add_option("-o,--output", opt.output, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "minimum k-ruling set via power + dominating set");
  add_input(solve, opt);
  solve->add_option("--k", opt.k, "ruling distance")->required();
  solve->add_option("--method", opt.method, "exact|greedy (default exact)");
  solve->add_option("--max-exact-n", opt.max_exact_n, "exact solver vertex cap");

  auto* solve_alpha = app.add_subcommand("solve-alpha", "(alpha, alpha-1) ruling set via power + MIS");
  add_input(solve_alpha, opt);
  solve_alpha->add_option("--alpha", opt.alpha, "minimum pairwise distance (>= 2)")->required();
  solve_alpha->add_option("--method", opt.method, "luby|greedy (default luby)");
  solve_alpha->add_option("--seed", opt.seed, "RNG seed (default 0)");

  auto* mds = app.add_subcommand("mds", "minimum dominating set of the input graph");
  add_input(mds, opt);
  mds->add_option("--method", opt.method, "exact|greedy (default exact)");
  mds->add_option("--max-exact-n", opt.max_exact_n, "exact solver vertex cap");

  auto* mis = app.add_subcommand("mis", "maximal independent set of the input graph");
  add_input(mis, opt);
  mis->add_option("--method", opt.method, "luby|greedy (default luby)");
  mis->add_option("--seed", opt.seed, "RNG seed (default 0)");

  auto* verify = app.add_subcommand("verify", "check a vertex set against a ruling condition");
  add_input(verify, opt);
  auto* verify_k = verify->add_option("--k", opt.k, "ruling distance");
  auto* verify_alpha = verify->add_option("--alpha", opt.alpha, "minimum pairwise distance");
  auto* verify_beta = verify->add_option("--beta", opt.beta, "maximum distance from the set");
  verify->add_option("--set", opt.set_file, "vertex-set file")->required();

  auto* oracle = app.add_subcommand("oracle", "minimum k-ruling set by exhaustive search");
  add_input(oracle, opt);
  oracle->add_option("--k", opt.k, "ruling distance")->required();
  oracle->add_option("--max-oracle-n", opt.max_oracle_n, "oracle vertex cap");

  auto* witness = app.add_subcommand("witness", "search for a beta != alpha-1 counterexample");
  witness->add_option("--alpha", opt.alpha, "minimum pairwise distance")->required();
  witness->add_option("--beta", opt.beta, "maximum distance from the set")->required();
  witness->add_option("--budget", opt.budget, "instances to try (default 100)");
  witness->add_option("--family", opt.witness_family, "path|cycle|random|mixed (default mixed)");
  witness->add_option("--seed", opt.seed, "RNG seed for random instances (default 0)");
  witness->add_option("-o,--output", opt.output, "write PREFIX.edges and PREFIX.set");
  witness->add_option("--max-exact-n", opt.max_exact_n, "skip instances above this size");
  witness->add_flag("--json", opt.json, "emit a JSON report");

  auto* bench = app.add_subcommand("bench", "CSV timings over generated instances");
  bench->add_option("--families", opt.bench_families, "generator families")->delimiter(',');
  bench->add_option("--sizes", opt.bench_sizes, "vertex counts")->delimiter(',');
  bench->add_option("--p", opt.bench_p, "edge probability for random_gnp (default 0.3)");
  bench->add_option("--seeds", opt.bench_seeds, "seeds")->delimiter(',');
  bench->add_option("--k", opt.bench_k, "k values for mds methods")->delimiter(',');
  bench->add_option("--alpha", opt.bench_alpha, "alpha values for mis methods")->delimiter(',');
  bench->add_option("--methods", opt.bench_methods, "mds-exact,mds-greedy,mis-luby,mis-greedy")
      ->delimiter(',');
  bench->add_option("--max-exact-n", opt.max_exact_n, "exact solver vertex cap");
  bench->add_option("-o,--output", opt.output, "output CSV (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(opt, out);
    if (*power) return cmd_power(opt, in, out);
    if (*solve) return cmd_solve(opt, in, out);
    if (*solve_alpha) return cmd_solve_alpha(opt, in, out);
    if (*mds) return cmd_mds(opt, in, out);
    if (*mis) return cmd_mis(opt, in, out);
    if (*verify) {
      return cmd_verify(opt, verify_k->count() > 0, verify_alpha->count() > 0,
                        verify_beta->count() > 0, in, out);
    }
    if (*oracle) return cmd_oracle(opt, in, out);
    if (*witness) return cmd_witness(opt, out);
    if (*bench) return cmd_bench(opt, out, err);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeCap;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rulingset::cli
