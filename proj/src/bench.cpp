#include "m2tc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "m2tc/connectivity.hpp"
#include "m2tc/errors.hpp"
#include "m2tc/exact.hpp"
#include "m2tc/sparsify.hpp"

namespace m2tc {
namespace {

struct Job {
  std::size_t id;
  GenSpec gen;
};

template <typename F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

BenchRecord run_one(const Job& job, const BenchOptions& options) {
  BenchRecord r;
  r.id = job.id;
  r.seed = job.gen.seed;
  r.n = job.gen.n;
  try {
    Instance inst = generate_instance(job.gen);
    const Digraph& g = inst.graph;
    r.m = g.num_edges();
    r.t_size = inst.terminals.size();
    SparsifyResult approx, pruned;
    r.approx_ms = time_ms([&] { approx = m2tc_approx(g, inst.terminals); });
    r.prune_ms = time_ms([&] { pruned = m2tc_prune(g, inst.terminals, approx); });
    r.case_taken = std::string(to_string(approx.case_taken));
    r.e_alpha = approx.kept.size();
    r.e_pruned = pruned.kept.size();
    r.ratio_vs_2n = static_cast<double>(r.e_pruned) / (2.0 * static_cast<double>(r.n));
    r.bound_8n_ok = approx.bound_8n_ok && pruned.bound_8n_ok;
    r.feasible = is_2T_connected(g.edge_subgraph(pruned.kept), inst.terminals);
    if (options.with_exact && r.n <= 7) {
      ExactResult ex;
      r.exact_ms =
          time_ms([&] { ex = m2tc_exact(g, inst.terminals, {.budget = options.exact_budget}); });
      if (ex.status == ExactStatus::solved) {
        r.opt_size = ex.opt_size;
        r.ratio_vs_opt = static_cast<double>(r.e_pruned) / static_cast<double>(ex.opt_size);
      } else {
        r.error = "exact search budget exhausted";
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::string fmt_ratio(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string fmt_ms(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchSpec>& specs,
                                   const BenchOptions& options) {
  std::vector<Job> jobs;
  for (const BenchSpec& spec : specs) {
    for (std::size_t i = 0; i < spec.count; ++i) {
      GenSpec gen = spec.gen;
      gen.seed += i;
      jobs.push_back({jobs.size(), gen});
    }
  }
  std::vector<BenchRecord> records(jobs.size());
  if (jobs.empty()) return records;

  run_one(jobs.front(), options);  // warm-up, discarded

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(jobs.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      records[i] = run_one(jobs[i], options);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return records;
}

std::string bench_csv_header() {
  return "id,seed,n,m,t_size,case,e_alpha,e_pruned,opt_size,ratio_vs_opt,ratio_vs_2n,feasible,"
         "bound_8n_ok,error,approx_ms,prune_ms,exact_ms";
}

std::string bench_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os << r.id << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.t_size << ','
     << r.case_taken << ',' << r.e_alpha << ',' << r.e_pruned << ','
     << (r.opt_size ? std::to_string(*r.opt_size) : "") << ','
     << (r.ratio_vs_opt ? fmt_ratio(*r.ratio_vs_opt) : "") << ',' << fmt_ratio(r.ratio_vs_2n) << ','
     << (r.feasible ? "true" : "false") << ',' << (r.bound_8n_ok ? "true" : "false") << ','
     << csv_field(r.error) << ',' << fmt_ms(r.approx_ms) << ',' << fmt_ms(r.prune_ms) << ','
     << fmt_ms(r.exact_ms);
  return os.str();
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::string out = bench_csv_header() + "\n";
  for (const BenchRecord& r : records) out += bench_csv_row(r) + "\n";
  return out;
}

std::vector<ScalingPoint> runtime_scaling(const std::vector<BenchRecord>& records) {
  std::map<std::size_t, std::vector<double>> by_m;
  for (const BenchRecord& r : records) {
    if (r.error.empty()) by_m[r.m].push_back(r.approx_ms + r.prune_ms);
  }
  std::vector<ScalingPoint> points;
  for (auto& [m, times] : by_m) {
    std::sort(times.begin(), times.end());
    const std::size_t k = times.size();
    double median = k % 2 ? times[k / 2] : (times[k / 2 - 1] + times[k / 2]) / 2;
    points.push_back({m, k, median});
  }
  return points;
}

std::string format_scaling(const std::vector<ScalingPoint>& points) {
  std::ostringstream os;
  os << "m,samples,median_ms,ratio_to_previous\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << points[i].m << ',' << points[i].samples << ',' << fmt_ms(points[i].median_ms) << ',';
    if (i > 0 && points[i - 1].median_ms > 0) {
      os << fmt_ratio(points[i].median_ms / points[i - 1].median_ms);
    }
    os << '\n';
  }
  return os.str();
}

std::vector<BenchSpec> parse_bench_specs(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("bench spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InvalidInput("bench spec must be a JSON array");
  std::vector<BenchSpec> specs;
  for (const json& item : doc) {
    try {
      BenchSpec spec;
      spec.gen.n = item.at("n").get<std::size_t>();
      spec.gen.extra_edges = item.value("extra", std::size_t{0});
      spec.gen.seed = item.value("seed", std::uint64_t{0});
      spec.count = item.value("count", std::size_t{1});
      spec.gen.bidirected_chords = item.value("bidirected_chords", false);
      spec.gen.rejection = item.value("rejection", false);
      const std::string mode = item.value("t_mode", std::string("empty"));
      auto parsed = parse_t_mode(mode, &spec.gen.k);
      if (!parsed) throw InvalidInput("unknown t_mode '" + mode + "'");
      spec.gen.t_mode = *parsed;
      if (spec.gen.n < 3) throw InvalidInput("bench spec needs n >= 3");
      specs.push_back(spec);
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("bad bench spec entry: ") + e.what());
    }
  }
  return specs;
}

}  // namespace m2tc
