#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arcgraph/bitset.hpp"

namespace arcgraph {

using Arc = std::pair<std::size_t, std::size_t>;

/// A walk u_0 -> u_1 -> ... in some base digraph, by vertex index.
using Walk = std::vector<std::size_t>;

/// Pair (X, Y) of vertex subsets of a base digraph with every x -> y an arc.
struct SubsetPair {
    Bitset x;
    Bitset y;

    friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
    /// (|X| + |Y|, X, Y) with subsets compared in canonical subset order.
    friend std::strong_ordering operator<=>(const SubsetPair& a, const SubsetPair& b) {
        if (auto c = a.x.count() + a.y.count() <=> b.x.count() + b.y.count(); c != 0) return c;
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

/// Provenance of a derived vertex.
using VertexLabel = std::variant<std::string, Walk, SubsetPair>;

std::string label_to_string(const VertexLabel& label);

/// Finite digraph on vertices [0, n). Loops are allowed; parallel arcs are not.
///
/// Adjacency is kept as out- and in-bit-rows so neighbourhood intersection
/// is word-parallel.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(std::size_t n);
    Digraph(std::size_t n, const std::vector<Arc>& arcs);

    [[nodiscard]] std::size_t vertex_count() const { return n_; }
    [[nodiscard]] std::size_t arc_count() const { return arc_count_; }
    [[nodiscard]] bool empty() const { return n_ == 0; }

    [[nodiscard]] bool has_arc(std::size_t u, std::size_t v) const { return out_[u].test(v); }
    /// Adds (u, v); returns false if it was already present.
    bool add_arc(std::size_t u, std::size_t v);
    bool remove_arc(std::size_t u, std::size_t v);

    [[nodiscard]] const Bitset& out_neighbors(std::size_t u) const { return out_[u]; }
    [[nodiscard]] const Bitset& in_neighbors(std::size_t u) const { return in_[u]; }
    [[nodiscard]] std::size_t out_degree(std::size_t u) const { return out_[u].count(); }
    [[nodiscard]] std::size_t in_degree(std::size_t u) const { return in_[u].count(); }

    /// All arcs in lexicographic order.
    [[nodiscard]] std::vector<Arc> arcs() const;

    [[nodiscard]] bool has_loops() const;
    /// Every arc has its reverse present (loops are self-reverse).
    [[nodiscard]] bool is_symmetric() const;

    [[nodiscard]] bool has_labels() const { return labelled_; }
    [[nodiscard]] const std::vector<VertexLabel>& labels() const { return labels_; }
    /// Throws InvalidInput unless labels.size() == n and labels are pairwise distinct.
    void set_labels(std::vector<VertexLabel> labels);
    void clear_labels() {
        labels_.clear();
        labelled_ = false;
    }

    /// Checks the type invariants; throws InvalidInput on violation.
    void validate() const;

    friend bool operator==(const Digraph& a, const Digraph& b);

  private:
    std::size_t n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
    std::vector<VertexLabel> labels_;
    bool labelled_ = false;
};

enum class GraphKind {
    complete,
    complete_with_loops,
    transitive_tournament,
    cyclic_triangle,
    directed_cycle,
    undirected_cycle,
    path,
    empty,
};

/// Accepts the enumerator names plus short aliases ("k", "tt", "c3", ...).
GraphKind parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

/// Standard digraphs. complete, undirected_cycle, path and empty are symmetric.
Digraph generate(GraphKind kind, std::size_t n);

/// Vertices are the arcs of g in sorted order, labelled by their endpoint
/// pair; (u,v) -> (v,w) for every pair of consecutive arcs.
Digraph arc_graph(const Digraph& g);

/// k-fold arc graph, realised directly on walks with k+1 vertices
/// (sorted lexicographically). k = 0 returns g unchanged.
Digraph iterated_arc_graph(const Digraph& g, std::size_t k);

/// Builds arc_graph(iterated_arc_graph(g, k-1)) and checks that gluing
/// overlapping walks is an isomorphism onto iterated_arc_graph(g, k).
/// Throws SizeBudgetExceeded if either side would exceed `budget` vertices.
bool check_delta_iso(const Digraph& g, std::size_t k, std::size_t budget = 1'000'000);

/// Keeps exactly the arcs whose reverse is present; loops are kept.
Digraph symmetric_restriction(const Digraph& g);
/// Adds the reverse of every arc.
Digraph symmetric_closure(const Digraph& g);
Digraph reverse(const Digraph& g);
/// Subgraph induced by `vertices` (taken in the given order); labels follow.
Digraph induced_subgraph(const Digraph& g, const std::vector<std::size_t>& vertices);

/// Total vertex map between two digraphs.
struct VertexMap {
    std::vector<std::size_t> assignment;

    [[nodiscard]] std::size_t operator()(std::size_t v) const { return assignment[v]; }
    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

[[nodiscard]] bool is_homomorphism(const Digraph& source, const Digraph& target, const VertexMap& map);

/// Backtracking search for a homomorphism g -> h with forward checking on
/// candidate domains. Vertices of g are assigned in order of decreasing
/// total degree, ties by index.
std::optional<VertexMap> find_homomorphism(const Digraph& g, const Digraph& h);

/// Homomorphism g -> g[core] fixing every core vertex. The returned
/// assignment is expressed in g's own vertex indices (all images lie in core).
std::optional<VertexMap> find_retraction(const Digraph& g, const std::vector<std::size_t>& core);

/// Induced map on arc graphs: arc (u,v) of g goes to (phi u, phi v) of h.
VertexMap induced_arc_map(const Digraph& g, const Digraph& h, const VertexMap& phi);

}  // namespace arcgraph
