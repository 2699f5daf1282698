#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "m2tc/generators.hpp"

namespace m2tc {

/// `count` instances from `gen`, the i-th with seed gen.seed + i.
struct BenchSpec {
  GenSpec gen;
  std::size_t count = 1;
};

struct BenchOptions {
  /// Solve each instance with n <= 7 exactly; larger ones leave opt empty.
  bool with_exact = false;
  std::uint64_t exact_budget = 50'000'000;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

struct BenchRecord {
  std::size_t id = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t t_size = 0;
  std::string case_taken;
  std::size_t e_alpha = 0;
  std::size_t e_pruned = 0;
  std::optional<std::size_t> opt_size;
  std::optional<double> ratio_vs_opt;
  double ratio_vs_2n = 0;
  bool feasible = false;
  bool bound_8n_ok = false;
  std::string error;  // empty on success
  double approx_ms = 0;
  double prune_ms = 0;
  double exact_ms = 0;
};

/// One record per instance, ordered by id whatever the thread count. An
/// instance that throws gets its message in `error` and the run goes on.
std::vector<BenchRecord> run_bench(const std::vector<BenchSpec>& specs,
                                   const BenchOptions& options = {});

/// Fixed column order; timing columns come last.
std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r);
std::string bench_csv(const std::vector<BenchRecord>& records);

struct ScalingPoint {
  std::size_t m = 0;
  std::size_t samples = 0;
  double median_ms = 0;  // approx + prune
};

/// Median sparsify+prune time per distinct edge count, ascending m. Records
/// with an error are skipped.
std::vector<ScalingPoint> runtime_scaling(const std::vector<BenchRecord>& records);
std::string format_scaling(const std::vector<ScalingPoint>& points);

/// JSON array of objects with keys n, extra, t_mode ("empty", "all",
/// "random", "fixed:K"), seed, count, and optional bidirected_chords and
/// rejection. Throws InvalidInput on malformed specs.
std::vector<BenchSpec> parse_bench_specs(std::string_view json_text);

}  // namespace m2tc
