// octbic: generate near-bipartite instances, compute OCT decompositions and
// enumerate maximal (induced) bicliques.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octbic/algorithms.hpp"
#include "octbic/bench.hpp"
#include "octbic/generator.hpp"
#include "octbic/oct_tools.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 124;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_generator_flags(CLI::App& cmd, octbic::GeneratorParams& p,
                         std::optional<double>& cv_cross) {
  const auto density = CLI::Range(0.0, 1.0);
  cmd.add_option("--nl", p.n_l, "vertices in L");
  cmd.add_option("--nr", p.n_r, "vertices in R");
  cmd.add_option("--no", p.n_o, "vertices in O");
  cmd.add_option("--d-lr", p.d_lr, "expected density between L and R")->check(density);
  cmd.add_option("--d-cross", p.d_cross, "expected density between O and L+R")
      ->check(density);
  cmd.add_option("--d-o", p.d_o, "edge probability inside O")->check(density);
  cmd.add_option("--cv", p.cv_lr, "coefficient of variation of degrees")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--cv-cross", cv_cross, "cv for O cross degrees (default: --cv)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--seed", p.seed, "PRNG seed");
}

void print_stats(const octbic::Graph& g, const octbic::OctDecomposition& d) {
  const auto s = octbic::realized_stats(g, d);
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges()
            << " n_l=" << d.n_left() << " n_r=" << d.n_right() << " n_o=" << d.n_oct()
            << "\nd_lr=" << s.d_lr << " d_cross=" << s.d_cross << " d_o=" << s.d_o
            << " cv_lr=" << s.cv_lr << " cv_cross=" << s.cv_cross << '\n';
}

int cmd_generate(octbic::GeneratorParams p, std::optional<double> cv_cross,
                 const std::string& out) {
  p.cv_cross = cv_cross.value_or(p.cv_lr);
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto [g, d] = octbic::generate(p);
  octbic::write_graph_file(g, out + ".graph");
  octbic::write_decomposition_file(d, out + ".oct");
  std::cout << "wrote " << out << ".graph and " << out << ".oct\n";
  print_stats(g, d);
  return kExitOk;
}

struct OctArgs {
  std::string graph;
  std::string out;
  std::string validate;
  std::optional<std::size_t> exhaustive;
  std::uint64_t seed = 0;
};

int cmd_oct(const OctArgs& a) {
  const octbic::Graph g = octbic::read_graph_file(a.graph);
  if (!a.validate.empty()) {
    const auto d = octbic::read_decomposition_file(a.validate, g.num_vertices());
    const auto check = octbic::validate_oct(g, d);
    if (check.ok) {
      std::cout << "valid n_o=" << d.n_oct() << '\n';
      return kExitOk;
    }
    std::cout << "invalid: " << check.violations.size() << " edges inside L or R\n";
    for (const auto& e : check.violations) std::cout << e.u << ' ' << e.v << '\n';
    return kExitError;
  }
  const auto start = std::chrono::steady_clock::now();
  octbic::OctDecomposition d;
  if (a.exhaustive) {
    auto found = octbic::min_oct_exhaustive(g, *a.exhaustive);
    if (!found) {
      std::cerr << "no OCT of size <= " << *a.exhaustive << '\n';
      return kExitError;
    }
    d = std::move(*found);
  } else {
    d = octbic::greedy_oct(g, a.seed);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!a.out.empty()) octbic::write_decomposition_file(d, a.out);
  std::cout << "n_l=" << d.n_left() << " n_r=" << d.n_right() << " n_o=" << d.n_oct()
            << " oct_time_s=" << secs << '\n';
  if (a.out.empty()) std::cout << octbic::serialize_decomposition(d);
  return kExitOk;
}

struct EnumerateArgs {
  std::string graph;
  std::string algorithm;
  std::string oct;
  bool oct_heuristic = false;
  bool list = false;
  std::optional<double> timeout;
};

int cmd_enumerate(const EnumerateArgs& a) {
  const auto algo = octbic::parse_algorithm(a.algorithm);
  if (!algo) throw UsageError("unknown algorithm '" + a.algorithm + "'");
  const octbic::Graph g = octbic::read_graph_file(a.graph);

  std::optional<octbic::OctDecomposition> d;
  if (octbic::needs_decomposition(*algo)) {
    if (!a.oct.empty()) {
      d = octbic::read_decomposition_file(a.oct, g.num_vertices());
      const auto check = octbic::validate_oct(g, *d);
      if (!check.ok) {
        throw UsageError("decomposition has " + std::to_string(check.violations.size()) +
                         " edges inside L or R");
      }
    } else if (a.oct_heuristic) {
      const auto start = std::chrono::steady_clock::now();
      d = octbic::greedy_oct(g);
      std::cout << "oct_time_s="
                << std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                 start)
                       .count()
                << " n_o=" << d->n_oct() << '\n';
    } else {
      throw UsageError(a.algorithm + " needs --oct FILE or --oct-heuristic");
    }
  }

  octbic::RunOptions options;
  options.materialize = a.list;
  if (a.timeout) options.deadline = octbic::Deadline::after(*a.timeout);
  const auto result = octbic::run_algorithm(*algo, g, d ? &*d : nullptr, options);

  if (a.list) {
    for (const auto& b : result.bicliques) std::cout << octbic::format_biclique(g, b) << '\n';
  }
  std::cout << "count=" << result.count << '\n'
            << "wall_time_s=" << result.wall_time << '\n';
  if (result.timed_out) {
    std::cout << "timed_out=true\n";
    return kExitTimeout;
  }
  return kExitOk;
}

struct BenchArgs {
  octbic::GeneratorParams base;
  std::optional<double> cv_cross;
  std::string vary;
  std::vector<double> values;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algorithms;
  double timeout = 3600.0;
  unsigned jobs = 1;
  std::string out;
};

int cmd_bench(BenchArgs a) {
  octbic::SweepSpec spec;
  spec.base = a.base;
  spec.base.cv_cross = a.cv_cross.value_or(a.base.cv_lr);
  spec.vary = a.vary;
  spec.values = a.values;
  spec.seeds = a.seeds;
  spec.timeout_s = a.timeout;
  spec.jobs = a.jobs;
  for (const auto& name : a.algorithms) {
    const auto algo = octbic::parse_algorithm(name);
    if (!algo) throw UsageError("unknown algorithm '" + name + "'");
    spec.algorithms.push_back(*algo);
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto rows = octbic::run_bench(spec);
  if (a.out.empty()) {
    octbic::write_bench_csv(std::cout, rows);
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + a.out + "'");
    octbic::write_bench_csv(file, rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal biclique enumeration in near-bipartite graphs"};
  app.require_subcommand(1);

  octbic::GeneratorParams gen;
  std::optional<double> gen_cv_cross;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "write a synthetic instance");
  add_generator_flags(*generate, gen, gen_cv_cross);
  generate->add_option("-o,--out", gen_out, "output prefix")->required();

  OctArgs oct_args;
  auto* oct = app.add_subcommand("oct", "compute or validate an OCT decomposition");
  oct->add_option("graph", oct_args.graph, "edge-list file")->required();
  oct->add_option("-o,--out", oct_args.out, "decomposition output file");
  oct->add_option("--validate", oct_args.validate, "decomposition file to check");
  oct->add_option("--exhaustive", oct_args.exhaustive,
                  "exact search up to this OCT size");
  oct->add_option("--seed", oct_args.seed, "BFS root order seed for the heuristic");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate maximal bicliques");
  enumerate->add_option("graph", enum_args.graph, "edge-list file")->required();
  enumerate->add_option("-a,--algorithm", enum_args.algorithm,
                        "enum-mib|oct-mib2|mica|oct-mica|oracle-mib|oracle-mb")
      ->required();
  auto* oct_file = enumerate->add_option("--oct", enum_args.oct, "decomposition file");
  enumerate->add_flag("--oct-heuristic", enum_args.oct_heuristic,
                      "compute a greedy decomposition")
      ->excludes(oct_file);
  enumerate->add_flag("--list", enum_args.list, "print every biclique");
  enumerate->add_option("--timeout", enum_args.timeout, "seconds")
      ->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run a parameter sweep and emit CSV");
  add_generator_flags(*bench, bench_args.base, bench_args.cv_cross);
  bench->add_option("--vary", bench_args.vary,
                    "n_l|n_r|n_o|d_lr|d_cross|d_o|cv|cv_lr|cv_cross");
  bench->add_option("--values", bench_args.values, "values of the varied parameter")
      ->delimiter(',');
  bench->add_option("--seeds", bench_args.seeds, "instance seeds")
      ->delimiter(',')
      ->required();
  bench->add_option("--algorithms", bench_args.algorithms, "algorithms to run")
      ->delimiter(',')
      ->required();
  bench->add_option("--timeout", bench_args.timeout, "seconds per run")
      ->check(CLI::PositiveNumber);
  bench->add_option("-j,--jobs", bench_args.jobs, "concurrent runs")
      ->check(CLI::PositiveNumber);
  bench->add_option("-o,--out", bench_args.out, "CSV file (default: stdout)");

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
    if (*generate) return cmd_generate(gen, gen_cv_cross, gen_out);
    if (*oct) return cmd_oct(oct_args);
    if (*enumerate) return cmd_enumerate(enum_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
