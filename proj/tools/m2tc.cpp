// Command-line front end: connectivity checks, sparsification, the exact
// solver, instance generation and benchmarking.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "m2tc/bench.hpp"
#include "m2tc/connectivity.hpp"
#include "m2tc/dominators.hpp"
#include "m2tc/errors.hpp"
#include "m2tc/exact.hpp"
#include "m2tc/generators.hpp"
#include "m2tc/io.hpp"
#include "m2tc/sparsify.hpp"

namespace fs = std::filesystem;
using namespace m2tc;

namespace {

struct InputArgs {
  std::string file;
  std::string t_set;
  bool one_based = false;
};

void add_input_options(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("file", args.file, "edge-list file")->required();
  cmd->add_option("--t-set", args.t_set,
                  "terminals: all, none, an inline list like 1,4,7, or a file of ids; "
                  "defaults to the file's T line, else none");
  cmd->add_flag("--one-based", args.one_based, "vertex ids in files and output start at 1");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

VertexSet parse_id_list(const std::string& text, std::size_t n, bool one_based) {
  VertexSet t(n);
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    std::istringstream parts(token);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      if (piece.empty()) continue;
      std::size_t pos = 0;
      long long id = -1;
      try {
        id = std::stoll(piece, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != piece.size()) throw InvalidInput("bad vertex id '" + piece + "' in --t-set");
      if (one_based) --id;
      if (id < 0 || static_cast<std::size_t>(id) >= n) {
        throw InvalidInput("--t-set vertex " + piece + " out of range");
      }
      t.insert(static_cast<Vertex>(id));
    }
  }
  return t;
}

struct LoadedInput {
  Digraph graph;
  VertexSet terminals;
};

LoadedInput load(const InputArgs& args) {
  ParsedGraph parsed = read_digraph_file(args.file, {.one_based = args.one_based});
  const std::size_t n = parsed.graph.num_vertices();
  VertexSet t(n);
  if (args.t_set.empty()) {
    if (parsed.terminals) t = *parsed.terminals;
  } else if (args.t_set == "all") {
    t = VertexSet::all(n);
  } else if (args.t_set == "none") {
    t = VertexSet(n);
  } else if (fs::is_regular_file(args.t_set)) {
    t = parse_id_list(read_text(args.t_set), n, args.one_based);
  } else {
    t = parse_id_list(args.t_set, n, args.one_based);
  }
  return {std::move(parsed.graph), std::move(t)};
}

std::string id(Vertex v, bool one_based) { return std::to_string(v + (one_based ? 1 : 0)); }

std::string join(const std::vector<Vertex>& vs, bool one_based) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + id(v, one_based);
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int run_check(const InputArgs& args, bool csv, bool header) {
  LoadedInput in = load(args);
  ConnectivityReport r = connectivity_report(in.graph, in.terminals);
  if (csv) {
    if (header) {
      std::cout << "n,m,t_size,strongly_connected,sap_count,strong_bridge_count,two_edge,"
                   "two_vertex,two_t\n";
    }
    std::cout << in.graph.num_vertices() << ',' << in.graph.num_edges() << ','
              << in.terminals.size() << ',' << yes_no(r.strongly_connected) << ',' << r.sap.size()
              << ',' << r.strong_bridges.size() << ',' << yes_no(r.two_edge) << ','
              << yes_no(r.two_vertex) << ',' << yes_no(r.two_t) << '\n';
    return 0;
  }
  std::cout << "n: " << in.graph.num_vertices() << '\n'
            << "m: " << in.graph.num_edges() << '\n'
            << "terminals: " << join(in.terminals.members(), args.one_based) << '\n'
            << "strongly_connected: " << yes_no(r.strongly_connected) << '\n'
            << "strong_articulation_points: " << join(r.sap.members(), args.one_based) << '\n'
            << "strong_bridges:";
  for (EdgeId e : r.strong_bridges) {
    const Edge& edge = in.graph.edge(e);
    std::cout << ' ' << id(edge.from, args.one_based) << "->" << id(edge.to, args.one_based);
  }
  std::cout << '\n'
            << "two_edge_connected: " << yes_no(r.two_edge) << '\n'
            << "two_vertex_connected: " << yes_no(r.two_vertex) << '\n'
            << "two_t_connected: " << yes_no(r.two_t) << '\n';
  return 0;
}

int run_sparsify(const InputArgs& args, bool prune, const std::string& emit,
                 const std::string& out_path) {
  LoadedInput in = load(args);
  SparsifyResult approx = m2tc_approx(in.graph, in.terminals);
  SparsifyResult final_result = prune ? m2tc_prune(in.graph, in.terminals, approx) : approx;
  const Digraph kept = in.graph.edge_subgraph(final_result.kept);
  const bool feasible = is_2T_connected(kept, in.terminals);

  std::ostringstream os;
  if (emit == "csv-summary") {
    os << "n,m,t_size,case,e_alpha,e_pruned,bound_8n_ok,feasible\n"
       << in.graph.num_vertices() << ',' << in.graph.num_edges() << ',' << in.terminals.size()
       << ',' << to_string(approx.case_taken) << ',' << approx.kept.size() << ','
       << (prune ? std::to_string(final_result.kept.size()) : "") << ','
       << yes_no(final_result.bound_8n_ok) << ',' << yes_no(feasible) << '\n';
  } else {
    os << "# case " << to_string(approx.case_taken) << ", " << approx.kept.size()
       << " edges after sparsify";
    if (prune) os << ", " << final_result.kept.size() << " after prune";
    os << '\n' << format_digraph(kept, in.terminals, args.one_based);
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream(out_path) << os.str();
  }
  return feasible ? 0 : 2;
}

int run_exact(const InputArgs& args, std::uint64_t budget) {
  LoadedInput in = load(args);
  ExactResult r = m2tc_exact(in.graph, in.terminals, {.budget = budget});
  std::cout << "status: " << (r.status == ExactStatus::solved ? "solved" : "inconclusive") << '\n'
            << "lower_bound: " << r.lower_bound_used << '\n'
            << "nodes_explored: " << r.nodes_explored << '\n';
  if (r.status == ExactStatus::solved) {
    std::cout << "opt_size: " << r.opt_size << '\n';
    for (EdgeId e : r.optimum) {
      const Edge& edge = in.graph.edge(e);
      std::cout << id(edge.from, args.one_based) << ' ' << id(edge.to, args.one_based) << '\n';
    }
  }
  return 0;
}

int run_gen(const GenSpec& base, std::size_t count, const std::string& out_dir) {
  if (out_dir.empty() && count != 1) throw InvalidInput("--count above 1 needs --out-dir");
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec spec = base;
    spec.seed += i;
    Instance inst = generate_instance(spec);
    std::string text = "# n=" + std::to_string(spec.n) + " extra=" +
                       std::to_string(spec.extra_edges) + " seed=" + std::to_string(spec.seed) +
                       "\n" + format_digraph(inst.graph, inst.terminals);
    if (out_dir.empty()) {
      std::cout << text;
    } else {
      fs::path path = fs::path(out_dir) / ("instance_" + std::to_string(spec.seed) + ".txt");
      std::ofstream(path) << text;
    }
  }
  return 0;
}

int run_bench_cmd(const std::string& spec_file, const GenSpec& gen, std::size_t count,
                  const BenchOptions& options, const std::string& csv_path) {
  std::vector<BenchSpec> specs = spec_file.empty() ? std::vector<BenchSpec>{{gen, count}}
                                                   : parse_bench_specs(read_text(spec_file));
  auto records = run_bench(specs, options);
  std::string csv = bench_csv(records);
  std::ostream& summary = csv_path.empty() ? std::cerr : std::cout;
  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream(csv_path) << csv;
  }
  std::size_t errors = 0, infeasible = 0;
  for (const auto& r : records) {
    if (!r.error.empty()) ++errors;
    else if (!r.feasible) ++infeasible;
  }
  summary << "instances: " << records.size() << ", errors: " << errors
          << ", infeasible: " << infeasible << '\n'
          << format_scaling(runtime_scaling(records));
  return infeasible ? 2 : 0;
}

int run_domtree(const InputArgs& args, Vertex root, bool reversed, bool trees) {
  LoadedInput in = load(args);
  if (args.one_based) {
    if (root == 0) throw InvalidInput("--root is 1-based with --one-based");
    --root;
  }
  Flowgraph fg(reversed ? reverse(in.graph) : in.graph, root);
  DominatorTree dt = dominator_tree(fg);
  auto dump = [&](const char* title, const std::vector<Vertex>& parent) {
    std::cout << "# " << title << '\n';
    for (Vertex v = 0; v < parent.size(); ++v) {
      if (v != root) std::cout << id(v, args.one_based) << ' ' << id(parent[v], args.one_based) << '\n';
    }
  };
  dump("v idom(v)", dt.idoms());
  if (trees) {
    IndependentTrees it = independent_spanning_trees(fg);
    dump("v parent in first tree", it.first.parent);
    dump("v parent in second tree", it.second.parent);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse 2-T-connected spanning subgraphs of directed graphs"};
  app.require_subcommand(1);

  InputArgs input;
  bool csv = false, header = false;
  auto* check = app.add_subcommand("check", "report strong connectivity, SAPs, bridges and 2-T");
  add_input_options(check, input);
  check->add_flag("--csv", csv, "print one CSV row instead of key: value lines");
  check->add_flag("--header", header, "with --csv, print the header line first");

  bool prune = false;
  std::string emit = "edge-list", out_path;
  auto* sparsify = app.add_subcommand("sparsify", "run the 8n-edge construction");
  add_input_options(sparsify, input);
  sparsify->add_flag("--prune", prune, "then delete edges greedily until minimal");
  sparsify->add_option("--emit", emit, "output format")
      ->check(CLI::IsMember({"edge-list", "csv-summary"}));
  sparsify->add_option("--out", out_path, "write to this file instead of stdout");

  std::uint64_t budget = ExactOptions{}.budget;
  auto* exact = app.add_subcommand("exact", "minimum 2-T-connected subgraph by exhaustive search");
  add_input_options(exact, input);
  exact->add_option("--budget", budget, "search node limit");

  GenSpec gen;
  gen.n = 10;
  std::string t_mode = "empty", out_dir;
  std::size_t count = 1;
  auto add_gen_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", gen.n, "vertex count")->check(CLI::Range(3, 1 << 20));
    cmd->add_option("--extra", gen.extra_edges, "random edges on top of the backbone");
    cmd->add_option("--t-mode", t_mode, "empty, all, random or fixed:K");
    cmd->add_option("--seed", gen.seed, "seed of the first instance");
    cmd->add_option("--count", count, "number of instances, seeds seed..seed+count-1");
    cmd->add_flag("--bidirected-chords", gen.bidirected_chords,
                  "add extras as antiparallel pairs");
    cmd->add_flag("--rejection", gen.rejection,
                  "sample two random Hamiltonian cycles plus extras until feasible");
  };
  auto* gen_cmd = app.add_subcommand("gen", "write random feasible instances");
  add_gen_options(gen_cmd);
  gen_cmd->add_option("--out-dir", out_dir, "directory for instance_<seed>.txt files");

  std::string spec_file, csv_path;
  BenchOptions bench_options;
  auto* bench = app.add_subcommand("bench", "sparsify and prune many instances, emit CSV");
  add_gen_options(bench);
  bench->add_option("--spec-file", spec_file, "JSON list of generator specs");
  bench->add_flag("--with-exact", bench_options.with_exact, "solve instances with n <= 7 exactly");
  bench->add_option("--budget", bench_options.exact_budget, "exact search node limit");
  bench->add_option("--threads", bench_options.threads, "worker threads, 0 = all cores");
  bench->add_option("--csv", csv_path, "write CSV here; the scaling summary goes to stdout");

  Vertex root = 0;
  bool reversed = false, trees = false;
  auto* domtree = app.add_subcommand("domtree", "print the dominator tree as 'v idom(v)' lines");
  add_input_options(domtree, input);
  domtree->add_option("--root", root, "flowgraph root");
  domtree->add_flag("--reverse", reversed, "use the reverse graph");
  domtree->add_flag("--trees", trees, "also print two independent spanning trees");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_cmd->parsed() || bench->parsed()) {
      auto mode = parse_t_mode(t_mode, &gen.k);
      if (!mode) throw InvalidInput("unknown --t-mode '" + t_mode + "'");
      gen.t_mode = *mode;
    }
    if (check->parsed()) return run_check(input, csv, header);
    if (sparsify->parsed()) return run_sparsify(input, prune, emit, out_path);
    if (exact->parsed()) return run_exact(input, budget);
    if (gen_cmd->parsed()) return run_gen(gen, count, out_dir);
    if (bench->parsed()) return run_bench_cmd(spec_file, gen, count, bench_options, csv_path);
    if (domtree->parsed()) return run_domtree(input, root, reversed, trees);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
