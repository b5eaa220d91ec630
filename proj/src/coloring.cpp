#include "arcgraph/coloring.hpp"

#include <algorithm>
#include <limits>

#include "arcgraph/errors.hpp"

namespace arcgraph {

namespace {

constexpr std::size_t kUncolored = std::numeric_limits<std::size_t>::max();

void require_loop_free(const Digraph& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.has_arc(v, v)) throw LoopPresent(v);
}

std::vector<Bitset> undirected_rows(const Digraph& g) {
    std::vector<Bitset> rows;
    rows.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) rows.push_back(g.out_neighbors(v) | g.in_neighbors(v));
    return rows;
}

std::vector<std::size_t> clique_from_rows(const std::vector<Bitset>& adj) {
    const std::size_t n = adj.size();
    if (n == 0) return {};
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].count();

    std::size_t seed = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (degree[v] > degree[seed]) seed = v;
    std::vector<std::size_t> clique{seed};
    Bitset candidates = adj[seed];
    while (candidates.any()) {
        std::size_t best = candidates.find_first();
        candidates.for_each([&](std::size_t v) {
            if (degree[v] > degree[best]) best = v;
        });
        clique.push_back(best);
        candidates &= adj[best];
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

/// DSATUR branch and bound over a fixed palette of k colours.
class Dsatur {
  public:
    Dsatur(const std::vector<Bitset>& adj, std::size_t k)
        : adj_{adj}, n_{adj.size()}, k_{k}, colors_(n_, kUncolored), conflicts_(n_ * k, 0), saturation_(n_, 0) {
        degree_.reserve(n_);
        for (const auto& row : adj_) degree_.push_back(row.count());
    }

    std::optional<Coloring> solve(const std::vector<std::size_t>& clique) {
        if (clique.size() > k_) return std::nullopt;
        for (std::size_t i = 0; i < clique.size(); ++i)
            if (!paint(clique[i], i)) return std::nullopt;
        used_ = clique.size();
        if (!search(n_ - clique.size())) return std::nullopt;

        Coloring c;
        c.colors = colors_;
        for (auto col : colors_) c.k = std::max(c.k, col + 1);
        return c;
    }

  private:
    // Most saturated uncoloured vertex; ties by degree, then smallest index.
    std::size_t select() const {
        std::size_t best = kUncolored;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colors_[v] != kUncolored) continue;
            if (best == kUncolored || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    // Colours v and updates neighbour saturation. Returns false on a wipeout,
    // in which case the caller still has to unpaint.
    bool paint(std::size_t v, std::size_t color) {
        colors_[v] = color;
        bool ok = true;
        adj_[v].for_each([&](std::size_t w) {
            if (colors_[w] != kUncolored && w != v) return;
            if (conflicts_[w * k_ + color]++ == 0 && ++saturation_[w] == k_) ok = false;
        });
        return ok;
    }

    void unpaint(std::size_t v) {
        const std::size_t color = colors_[v];
        adj_[v].for_each([&](std::size_t w) {
            if (colors_[w] != kUncolored) return;
            if (--conflicts_[w * k_ + color] == 0) --saturation_[w];
        });
        colors_[v] = kUncolored;
    }

    bool search(std::size_t remaining) {
        if (remaining == 0) return true;
        const std::size_t v = select();
        const std::size_t limit = std::min(used_ + 1, k_);
        for (std::size_t c = 0; c < limit; ++c) {
            if (conflicts_[v * k_ + c] != 0) continue;
            const std::size_t saved_used = used_;
            if (c == used_) ++used_;
            const bool ok = paint(v, c);
            if (ok && search(remaining - 1)) return true;
            unpaint(v);
            used_ = saved_used;
        }
        return false;
    }

    const std::vector<Bitset>& adj_;
    std::size_t n_;
    std::size_t k_;
    std::vector<std::size_t> colors_;
    std::vector<std::size_t> conflicts_;  // conflicts_[v*k + c]: coloured neighbours of v with colour c
    std::vector<std::size_t> saturation_;
    std::vector<std::size_t> degree_;
    std::size_t used_ = 0;
};

}  // namespace

bool is_valid_coloring(const Digraph& g, const Coloring& c) {
    if (c.colors.size() != g.vertex_count()) return false;
    std::vector<bool> seen(c.k, false);
    for (auto col : c.colors) {
        if (col >= c.k) return false;
        seen[col] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
    for (auto [u, v] : g.arcs())
        if (u != v && c.colors[u] == c.colors[v]) return false;
    return true;
}

std::vector<std::size_t> greedy_clique(const Digraph& g) { return clique_from_rows(undirected_rows(g)); }

std::optional<Coloring> k_colorable(const Digraph& g, std::size_t k) {
    require_loop_free(g);
    if (g.vertex_count() == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    const auto adj = undirected_rows(g);
    return Dsatur(adj, k).solve(clique_from_rows(adj));
}

Coloring optimal_coloring(const Digraph& g) {
    require_loop_free(g);
    if (g.vertex_count() == 0) return Coloring{};
    const auto adj = undirected_rows(g);
    const auto clique = clique_from_rows(adj);
    for (std::size_t k = clique.size();; ++k)
        if (auto c = Dsatur(adj, k).solve(clique)) return *c;
}

std::size_t chromatic_number(const Digraph& g) { return optimal_coloring(g).k; }

}  // namespace arcgraph
