#pragma once

// Internal digraph helpers on adjacency lists over 0..n-1.

#include <cstddef>
#include <optional>
#include <vector>

#include "biaut/alphabet.hpp"

namespace biaut::detail {

using Adjacency = std::vector<std::vector<StateId>>;

/// Strongly connected component id per vertex (Tarjan, iterative).
std::vector<std::size_t> scc_ids(const Adjacency& adj);

/// Shortest simple cycle with at least `min_len` vertices, ties broken by the
/// smallest start vertex; the cycle starts at that vertex. Self-loops count
/// as cycles of length 1.
std::optional<std::vector<StateId>> shortest_cycle(const Adjacency& adj, std::size_t min_len);

/// Any cycle (self-loops included) of the graph, or nullopt if acyclic.
std::optional<std::vector<StateId>> any_cycle(const Adjacency& adj);

}  // namespace biaut::detail
