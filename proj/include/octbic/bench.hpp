#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "octbic/algorithms.hpp"
#include "octbic/generator.hpp"

namespace octbic {

/// One-parameter sweep over generated instances.
struct SweepSpec {
  GeneratorParams base;
  /// One of n_l, n_r, n_o, d_lr, d_cross, d_o, cv, cv_lr, cv_cross. Empty
  /// means a single setting equal to `base`.
  std::string vary;
  std::vector<double> values;
  std::vector<std::uint64_t> seeds;
  std::vector<Algorithm> algorithms;
  double timeout_s = 3600.0;
  unsigned jobs = 1;

  /// Throws std::invalid_argument for an unusable sweep.
  void validate() const;
};

struct BenchRow {
  Algorithm algorithm;
  GeneratorParams params;  // includes the seed
  std::size_t count = 0;
  double wall_time_s = 0.0;  // the timeout value when timed out
  bool timed_out = false;
};

/// Runs every (setting, seed, algorithm) job, possibly on several threads.
/// Rows come back ordered by setting, then seed, then algorithm as listed.
/// OCT-parameterized algorithms use the generator's own decomposition.
std::vector<BenchRow> run_bench(const SweepSpec& spec);

inline constexpr const char* kBenchHeader =
    "algorithm,n_l,n_r,n_o,d_lr,d_cross,d_o,cv,seed,count,wall_time_s,timed_out";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Applies `value` to the named parameter of `p`.
void set_parameter(GeneratorParams& p, const std::string& name, double value);

}  // namespace octbic
