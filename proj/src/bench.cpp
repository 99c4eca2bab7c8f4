#include "octbic/bench.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace octbic {

void set_parameter(GeneratorParams& p, const std::string& name, double value) {
  auto count = [&]() {
    if (!(value >= 0.0) || value != std::floor(value)) {
      throw std::invalid_argument(name + " takes non-negative integers, got " +
                                  std::to_string(value));
    }
    return static_cast<std::size_t>(value);
  };
  if (name == "n_l") {
    p.n_l = count();
  } else if (name == "n_r") {
    p.n_r = count();
  } else if (name == "n_o") {
    p.n_o = count();
  } else if (name == "d_lr") {
    p.d_lr = value;
  } else if (name == "d_cross") {
    p.d_cross = value;
  } else if (name == "d_o") {
    p.d_o = value;
  } else if (name == "cv") {
    p.cv_lr = value;
    p.cv_cross = value;
  } else if (name == "cv_lr") {
    p.cv_lr = value;
  } else if (name == "cv_cross") {
    p.cv_cross = value;
  } else {
    throw std::invalid_argument("unknown sweep parameter '" + name + "'");
  }
}

void SweepSpec::validate() const {
  if (algorithms.empty()) throw std::invalid_argument("no algorithms to run");
  if (seeds.empty()) throw std::invalid_argument("no seeds given");
  if (!vary.empty() && values.empty()) {
    throw std::invalid_argument("sweep over '" + vary + "' has no values");
  }
  if (vary.empty() && !values.empty()) {
    throw std::invalid_argument("values given without a parameter to vary");
  }
  if (!(timeout_s > 0.0)) throw std::invalid_argument("timeout must be positive");
  GeneratorParams probe = base;
  for (double v : values) {
    set_parameter(probe, vary, v);
    probe.validate();
  }
  base.validate();
}

std::vector<BenchRow> run_bench(const SweepSpec& spec) {
  spec.validate();

  std::vector<GeneratorParams> settings;
  if (spec.vary.empty()) {
    settings.push_back(spec.base);
  } else {
    for (double v : spec.values) {
      settings.push_back(spec.base);
      set_parameter(settings.back(), spec.vary, v);
    }
  }

  struct Instance {
    GeneratorParams params;
    Graph graph;
    OctDecomposition decomposition;
  };
  std::vector<Instance> instances;
  for (const GeneratorParams& setting : settings) {
    for (std::uint64_t seed : spec.seeds) {
      GeneratorParams p = setting;
      p.seed = seed;
      auto [g, d] = generate(p);
      instances.push_back({p, std::move(g), std::move(d)});
    }
  }

  const std::size_t per_instance = spec.algorithms.size();
  std::vector<BenchRow> rows(instances.size() * per_instance);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    for (std::size_t job = next++; job < rows.size(); job = next++) {
      const Instance& inst = instances[job / per_instance];
      const Algorithm algo = spec.algorithms[job % per_instance];
      try {
        RunOptions options;
        options.deadline = Deadline::after(spec.timeout_s);
        options.materialize = false;
        const EnumerationResult r =
            run_algorithm(algo, inst.graph, &inst.decomposition, options);
        BenchRow& row = rows[job];
        row.algorithm = algo;
        row.params = inst.params;
        row.count = r.count;
        row.timed_out = r.timed_out;
        row.wall_time_s = r.timed_out ? spec.timeout_s : r.wall_time;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(spec.jobs, rows.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const BenchRow& r : rows) {
    const GeneratorParams& p = r.params;
    out << algorithm_name(r.algorithm) << ',' << p.n_l << ',' << p.n_r << ','
        << p.n_o << ',' << p.d_lr << ',' << p.d_cross << ',' << p.d_o << ','
        << p.cv_lr << ',' << p.seed << ',' << r.count << ',';
    const auto flags = out.flags();
    const auto precision = out.precision(6);
    out << std::fixed << r.wall_time_s;
    out.flags(flags);
    out.precision(precision);
    out << ',' << (r.timed_out ? "true" : "false") << '\n';
  }
}

}  // namespace octbic
