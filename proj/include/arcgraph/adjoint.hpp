#pragma once

#include <cstddef>
#include <vector>

#include "arcgraph/digraph.hpp"
#include "arcgraph/poset.hpp"

namespace arcgraph {

/// Right adjoint of the arc-graph construction.
///
/// Vertices are all pairs (X, Y) of vertex subsets of k (either may be empty)
/// with every x -> y an arc of k, labelled by SubsetPair and sorted by
/// (|X| + |Y|, X, Y). ((X,Y), (Z,W)) is an arc iff Y and Z meet.
/// Throws SizeBudgetExceeded when 4^|k| exceeds `budget`.
Digraph delta_right(const Digraph& k, std::size_t budget = kDefaultBudget);

/// `times`-fold delta_right; times = 0 returns k.
Digraph iterated_delta_right(const Digraph& k, std::size_t times, std::size_t budget = kDefaultBudget);

/// The tight pairs of delta_right(k), i.e. Y is the common out-neighbourhood
/// of X and X the common in-neighbourhood of Y, with the retraction onto them.
struct TightCore {
    Digraph delta_r;                        // delta_right(k)
    Digraph core;                           // induced on the tight pairs
    std::vector<std::size_t> core_vertices; // core index -> delta_r index
    VertexMap retraction;                   // delta_r index -> core index
};

/// Retraction (X, Y) -> (X', Y') with X' the common in-neighbours of Y and
/// Y' the common out-neighbours of X'. The map is validated as a
/// homomorphism fixing the core; throws RetractionInvalid if it is not.
TightCore tight_core(const Digraph& k, std::size_t budget = kDefaultBudget);

/// unit: g -> delta_right(arc_graph(g)), u -> (arcs entering u, arcs leaving u).
/// counit: arc_graph(delta_right(g)) -> g, ((X,Y),(Z,W)) -> min(Y ∩ Z).
struct CanonicalHoms {
    Digraph unit_target;    // delta_right(arc_graph(g))
    Digraph counit_source;  // arc_graph(delta_right(g))
    VertexMap unit;
    VertexMap counit;
};

/// Both maps are validated as homomorphisms; throws RetractionInvalid otherwise.
CanonicalHoms canonical_homs(const Digraph& g, std::size_t budget = kDefaultBudget);

struct AdjunctionSides {
    bool arc_graph_side = false;  // hom(delta^t(g), k) exists
    bool adjoint_side = false;    // hom(g, delta_right^t(k)) exists

    [[nodiscard]] bool agree() const { return arc_graph_side == adjoint_side; }
};

/// Decides both sides of the adjunction independently with the homomorphism
/// solver, for the `times`-fold constructions.
AdjunctionSides adjunction_sides(const Digraph& g, const Digraph& k, std::size_t times = 1,
                                 std::size_t budget = kDefaultBudget);

/// True iff hom(delta(g), k) and hom(g, delta_right(k)) are both empty or both nonempty.
bool check_adjunction(const Digraph& g, const Digraph& k, std::size_t budget = kDefaultBudget);

/// True iff the tight core of delta_right(nondomination(p)) matches
/// nondomination(ideal_lattice(p)) under (X, complement of X) <-> X.
bool core_equals_nondomination(const Poset& p, std::size_t budget = kDefaultBudget);

}  // namespace arcgraph
