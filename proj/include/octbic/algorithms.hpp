#pragma once

#include <optional>
#include <string_view>

#include "octbic/biclique.hpp"
#include "octbic/decomposition.hpp"
#include "octbic/graph.hpp"

namespace octbic {

enum class Algorithm { EnumMib, OctMib2, Mica, OctMica, OracleMib, OracleMb };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);
bool needs_decomposition(Algorithm a);
/// True for the algorithms that enumerate induced bicliques.
bool enumerates_induced(Algorithm a);

/// Dispatches to the named enumerator. `d` must be non-null when
/// needs_decomposition(a). The oracles ignore the deadline.
EnumerationResult run_algorithm(Algorithm a, const Graph& g, const OctDecomposition* d,
                                const RunOptions& options = {});

}  // namespace octbic
