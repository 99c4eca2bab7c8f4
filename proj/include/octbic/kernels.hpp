#pragma once

#include <optional>
#include <span>
#include <vector>

#include "octbic/biclique.hpp"
#include "octbic/graph.hpp"

namespace octbic {

/// Extends a biclique X × Y to the maximal biclique X* × Y* with
/// X* = ∩_{y∈Y} N(y) and Y* = ∩_{x∈X*} N(x). Y ⊆ Y*, and X may be replaced
/// by the full common neighborhood of Y. O(m).
Biclique make_maximal(const Graph& g, const Biclique& b);

/// The consensus candidates of two bicliques Bα = Xα × Yα, Bβ = Xβ × Yβ:
///
///   (Xα ∪ Xβ) × (Yα ∩ Yβ)
///   (Xα ∩ Xβ) × (Yα ∪ Yβ)
///   (Xα ∪ Yβ) × (Yα ∩ Xβ)
///   (Xα ∩ Yβ) × (Yα ∪ Xβ)
///
/// keeping those with both sides nonempty. O(n).
std::vector<Biclique> consensus(const Biclique& a, const Biclique& b);

/// Grows the induced biclique `c` = C1 × C2 with vertices of `s`, first into
/// C2 then into C1, scanning ascending ids. Returns nullopt when `c` is empty
/// or when some vertex outside `s` could still extend the result (another
/// MIB containing `c` then exists). Otherwise the result is a MIB with
/// c ⊆ result ⊆ c ∪ s. O(m).
std::optional<Biclique> make_ind_maximal(const Graph& g,
                                         const std::optional<Biclique>& c,
                                         std::span<const Vertex> s);

/// (C1 ∪ {v}) \ N(v) × (C2 ∩ N(v)), or nullopt when C2 ∩ N(v) is empty.
/// Throws std::invalid_argument if v already belongs to `c`.
std::optional<Biclique> add_to(const Graph& g, const Biclique& c, Vertex v);

}  // namespace octbic
