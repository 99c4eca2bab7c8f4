#include "octbic/algorithms.hpp"

#include <array>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "octbic/mib.hpp"
#include "octbic/mica.hpp"
#include "octbic/oracle.hpp"

namespace octbic {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kNames{{
    {Algorithm::EnumMib, "enum-mib"},
    {Algorithm::OctMib2, "oct-mib2"},
    {Algorithm::Mica, "mica"},
    {Algorithm::OctMica, "oct-mica"},
    {Algorithm::OracleMib, "oracle-mib"},
    {Algorithm::OracleMb, "oracle-mb"},
}};

EnumerationResult from_list(std::string_view name, const std::vector<Biclique>& list,
                            bool materialize, double seconds) {
  EnumerationResult result;
  result.algorithm = std::string(name);
  result.bicliques = BicliqueStore(materialize);
  for (const Biclique& b : list) result.bicliques.insert(b);
  result.count = result.bicliques.size();
  result.wall_time = seconds;
  return result;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [algo, text] : kNames) {
    if (text == name) return algo;
  }
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
  for (const auto& [algo, text] : kNames) {
    if (algo == a) return text;
  }
  return "unknown";
}

bool needs_decomposition(Algorithm a) {
  return a == Algorithm::OctMib2 || a == Algorithm::OctMica;
}

bool enumerates_induced(Algorithm a) {
  return a == Algorithm::EnumMib || a == Algorithm::OctMib2 ||
         a == Algorithm::OracleMib;
}

EnumerationResult run_algorithm(Algorithm a, const Graph& g, const OctDecomposition* d,
                                const RunOptions& options) {
  if (needs_decomposition(a) && d == nullptr) {
    throw std::invalid_argument(std::string(algorithm_name(a)) +
                                " requires an OCT decomposition");
  }
  using Clock = std::chrono::steady_clock;
  switch (a) {
    case Algorithm::EnumMib:
      return enum_mib(g, options);
    case Algorithm::OctMib2:
      return oct_mib2(g, *d, options);
    case Algorithm::Mica:
      return mica(g, options);
    case Algorithm::OctMica:
      return oct_mica(g, *d, options);
    case Algorithm::OracleMib:
    case Algorithm::OracleMb: {
      const auto start = Clock::now();
      const auto list =
          a == Algorithm::OracleMib ? oracle::brute_mibs(g) : oracle::brute_mbs(g);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      return from_list(algorithm_name(a), list, options.materialize, secs);
    }
  }
  throw std::logic_error("unhandled algorithm");
}

}  // namespace octbic
