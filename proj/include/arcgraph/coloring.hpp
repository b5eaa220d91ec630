#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arcgraph/digraph.hpp"

namespace arcgraph {

/// Proper vertex colouring; colours used are exactly {0, ..., k-1}.
struct Coloring {
    std::size_t k = 0;
    std::vector<std::size_t> colors;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Checks properness (ignoring arc direction) and the prefix property.
[[nodiscard]] bool is_valid_coloring(const Digraph& g, const Coloring& c);

/// Greedily grown clique of the underlying undirected graph, seeded at a
/// vertex of maximum degree. A lower bound for the chromatic number.
std::vector<std::size_t> greedy_clique(const Digraph& g);

/// Exact k-colourability by DSATUR branch and bound with forward checking.
/// Arc direction is ignored. Throws LoopPresent if g has a loop.
std::optional<Coloring> k_colorable(const Digraph& g, std::size_t k);

/// Exact chromatic number; 0 for the graph with no vertices.
/// Throws LoopPresent if g has a loop.
std::size_t chromatic_number(const Digraph& g);

/// Optimal colouring witnessing chromatic_number(g).
Coloring optimal_coloring(const Digraph& g);

}  // namespace arcgraph
