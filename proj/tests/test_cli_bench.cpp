#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "m2tc/bench.hpp"
#include "m2tc/connectivity.hpp"
#include "m2tc/errors.hpp"
#include "m2tc/generators.hpp"
#include "oracles.hpp"

using namespace m2tc;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(M2TC_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(M2TC_DATA_DIR) + "/" + name; }

std::string strip_timing(const std::string& row) {
  // The last three columns are timings.
  std::string s = row;
  for (int i = 0; i < 3; ++i) s = s.substr(0, s.rfind(','));
  return s;
}

}  // namespace

TEST_CASE("generator examples") {
  Instance tri = generate_instance({.n = 3, .t_mode = TMode::all});
  CHECK(tri.graph.num_edges() == 6);
  CHECK(tri.terminals.size() == 3);
  Instance c5 = generate_instance({.n = 5, .seed = 9});
  CHECK(c5.graph.num_edges() == 10);
  CHECK(is_2_vertex_connected(c5.graph));
  CHECK_THROWS_AS(generate_instance({.n = 4, .extra_edges = 5}), InvalidInput);
  CHECK_THROWS_AS(generate_instance({.n = 2}), InvalidInput);
  CHECK(generate_instance({.n = 4, .extra_edges = 4}).graph.num_edges() == 12);
}

TEST_CASE("generator is deterministic and always feasible") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenSpec spec{.n = 3 + seed % 12, .extra_edges = seed % 9, .t_mode = TMode::random,
                 .seed = seed, .bidirected_chords = seed % 2 == 0, .rejection = seed % 3 == 0};
    spec.extra_edges =
        std::min(spec.extra_edges, oracle::backbone_room(spec.n, spec.bidirected_chords));
    Instance a = generate_instance(spec), b = generate_instance(spec);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.terminals == b.terminals);
    CHECK(is_strongly_connected(a.graph));
    CHECK(is_2T_connected(a.graph, a.terminals));
  }
  GenSpec fixed{.n = 9, .t_mode = TMode::fixed_k, .k = 4, .seed = 1};
  CHECK(generate_instance(fixed).terminals.size() == 4);
}

TEST_CASE("t-mode parsing") {
  std::size_t k = 0;
  CHECK(parse_t_mode("fixed:3", &k) == TMode::fixed_k);
  CHECK(k == 3);
  CHECK(parse_t_mode("all") == TMode::all);
  CHECK_FALSE(parse_t_mode("fixed:"));
  CHECK_FALSE(parse_t_mode("some"));
}

TEST_CASE("bench records are reproducible and schema stable") {
  std::vector<BenchSpec> specs = {{{.n = 6, .extra_edges = 3, .t_mode = TMode::random, .seed = 5}, 6},
                                  {{.n = 20, .extra_edges = 20, .t_mode = TMode::fixed_k, .k = 5,
                                    .seed = 1},
                                   4}};
  auto one = run_bench(specs, {.with_exact = true, .threads = 1});
  auto many = run_bench(specs, {.with_exact = true, .threads = 4});
  REQUIRE(one.size() == 10);
  REQUIRE(many.size() == 10);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].id == i);
    CHECK(strip_timing(bench_csv_row(one[i])) == strip_timing(bench_csv_row(many[i])));
    CHECK(one[i].error.empty());
    CHECK(one[i].feasible);
    CHECK(one[i].e_pruned <= 8 * one[i].n);
    CHECK(one[i].opt_size.has_value() == (one[i].n <= 7));
    if (one[i].ratio_vs_opt) CHECK(*one[i].ratio_vs_opt <= 4.0);
  }
  CHECK(bench_csv_header() ==
        "id,seed,n,m,t_size,case,e_alpha,e_pruned,opt_size,ratio_vs_opt,ratio_vs_2n,feasible,"
        "bound_8n_ok,error,approx_ms,prune_ms,exact_ms");
  auto scaling = runtime_scaling(one);
  CHECK_FALSE(scaling.empty());
}

TEST_CASE("bench keeps going after a failing instance") {
  std::vector<BenchSpec> specs = {{{.n = 4, .extra_edges = 50}, 1}, {{.n = 4}, 1}};
  auto records = run_bench(specs);
  REQUIRE(records.size() == 2);
  CHECK_FALSE(records[0].error.empty());
  CHECK(records[1].error.empty());
}

TEST_CASE("bench spec JSON") {
  auto specs = parse_bench_specs(
      R"([{"n": 8, "extra": 4, "t_mode": "fixed:3", "seed": 2, "count": 5, "rejection": true}])");
  REQUIRE(specs.size() == 1);
  CHECK(specs[0].gen.n == 8);
  CHECK(specs[0].gen.k == 3);
  CHECK(specs[0].gen.rejection);
  CHECK(specs[0].count == 5);
  CHECK_THROWS_AS(parse_bench_specs("{"), InvalidInput);
  CHECK_THROWS_AS(parse_bench_specs(R"([{"extra": 1}])"), InvalidInput);
  CHECK_THROWS_AS(parse_bench_specs(R"([{"n": 5, "t_mode": "odd"}])"), InvalidInput);
}

TEST_CASE("cli check on the figure files") {
  auto a = run("check " + data("figure1_a.txt") + " --one-based --csv");
  CHECK(a.code == 0);
  CHECK(a.out == "13,31,1,true,0,0,true,true,true\n");
  auto b = run("check " + data("figure1_b.txt") + " --one-based");
  CHECK(b.out.find("strong_articulation_points: 8\n") != std::string::npos);
  CHECK(b.out.find("two_t_connected: false") != std::string::npos);
  auto none = run("check " + data("figure1_b.txt") + " --one-based --t-set none --csv");
  CHECK(none.out == "13,28,0,true,1,0,true,false,true\n");
}

TEST_CASE("cli sparsify and exit codes") {
  auto ok = run("sparsify " + data("figure1_a.txt") + " --one-based --prune --emit csv-summary");
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("n,m,t_size,case,e_alpha,e_pruned,bound_8n_ok,feasible\n13,31,1,T_small,", 0) ==
        0);
  auto infeasible = run("sparsify " + data("figure1_b.txt") + " --one-based");
  CHECK(infeasible.code == 1);
  auto listed = run("sparsify " + data("figure1_b.txt") + " --one-based --t-set 1,2");
  CHECK(listed.code == 0);
  auto missing = run("check /nonexistent/file.txt");
  CHECK(missing.code == 1);
  auto usage = run("sparsify");
  CHECK(usage.code != 0);
}

TEST_CASE("cli gen, exact and domtree") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "m2tc_cli_test";
  fs::remove_all(dir);
  auto gen = run("gen --n 5 --extra 2 --t-mode fixed:2 --seed 4 --count 3 --out-dir " +
                 dir.string());
  CHECK(gen.code == 0);
  CHECK(fs::exists(dir / "instance_6.txt"));
  auto exact = run("exact " + (dir / "instance_4.txt").string());
  CHECK(exact.code == 0);
  CHECK(exact.out.find("status: solved") != std::string::npos);
  CHECK(exact.out.find("opt_size: 10") != std::string::npos);
  auto dom = run("domtree " + data("figure1_a.txt") + " --one-based --root 1");
  CHECK(dom.code == 0);
  CHECK(dom.out.rfind("# v idom(v)\n2 1\n", 0) == 0);
  fs::remove_all(dir);
}
