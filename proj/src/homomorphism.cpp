#include <algorithm>
#include <numeric>

#include "arcgraph/digraph.hpp"
#include "arcgraph/errors.hpp"

namespace arcgraph {

namespace {

class HomSearch {
  public:
    HomSearch(const Digraph& g, const Digraph& h, std::vector<Bitset> domains)
        : g_{g}, h_{h}, n_{g.vertex_count()}, domains_(std::move(domains)), assignment_(n_, 0), assigned_(n_) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::vector<std::size_t> degree(n_);
        for (std::size_t v = 0; v < n_; ++v) degree[v] = (g.out_neighbors(v) | g.in_neighbors(v)).count();
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    }

    std::optional<VertexMap> run() {
        for (std::size_t v = 0; v < n_; ++v) {
            if (g_.has_arc(v, v)) {
                Bitset looped(h_.vertex_count());
                for (std::size_t a = 0; a < h_.vertex_count(); ++a)
                    if (h_.has_arc(a, a)) looped.set(a);
                domains_[v] &= looped;
            }
            if (domains_[v].none()) return std::nullopt;
        }
        if (!assign(0)) return std::nullopt;
        return VertexMap{assignment_};
    }

  private:
    bool assign(std::size_t depth) {
        if (depth == n_) return true;
        const std::size_t u = order_[depth];
        const Bitset candidates = domains_[u];
        assigned_.set(u);
        for (std::size_t a = candidates.find_first(); a < candidates.size(); a = candidates.find_next(a + 1)) {
            assignment_[u] = a;
            std::vector<Bitset> saved = domains_;
            if (propagate(u, a) && assign(depth + 1)) return true;
            domains_ = std::move(saved);
        }
        assigned_.reset(u);
        return false;
    }

    // Restricts the domains of unassigned neighbours of u after u -> a.
    bool propagate(std::size_t u, std::size_t a) {
        Bitset succ = g_.out_neighbors(u);
        succ.subtract(assigned_);
        bool ok = true;
        succ.for_each([&](std::size_t v) {
            domains_[v] &= h_.out_neighbors(a);
            ok = ok && domains_[v].any();
        });
        if (!ok) return false;
        Bitset pred = g_.in_neighbors(u);
        pred.subtract(assigned_);
        pred.for_each([&](std::size_t v) {
            domains_[v] &= h_.in_neighbors(a);
            ok = ok && domains_[v].any();
        });
        return ok;
    }

    const Digraph& g_;
    const Digraph& h_;
    std::size_t n_;
    std::vector<Bitset> domains_;
    std::vector<std::size_t> assignment_;
    Bitset assigned_;
    std::vector<std::size_t> order_;
};

}  // namespace

bool is_homomorphism(const Digraph& source, const Digraph& target, const VertexMap& map) {
    if (map.assignment.size() != source.vertex_count()) return false;
    for (auto image : map.assignment)
        if (image >= target.vertex_count()) return false;
    for (auto [u, v] : source.arcs())
        if (!target.has_arc(map(u), map(v))) return false;
    return true;
}

std::optional<VertexMap> find_homomorphism(const Digraph& g, const Digraph& h) {
    const std::size_t m = h.vertex_count();
    Bitset has_out(m), has_in(m);
    for (std::size_t a = 0; a < m; ++a) {
        has_out.set(a, h.out_neighbors(a).any());
        has_in.set(a, h.in_neighbors(a).any());
    }
    std::vector<Bitset> domains(g.vertex_count(), Bitset::full(m));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.out_neighbors(v).any()) domains[v] &= has_out;
        if (g.in_neighbors(v).any()) domains[v] &= has_in;
    }
    return HomSearch(g, h, std::move(domains)).run();
}

std::optional<VertexMap> find_retraction(const Digraph& g, const std::vector<std::size_t>& core) {
    const std::size_t n = g.vertex_count();
    Bitset core_set(n);
    for (auto c : core) {
        if (c >= n) throw InvalidInput("retraction core vertex " + std::to_string(c) + " out of range");
        core_set.set(c);
    }
    std::vector<Bitset> domains(n, core_set);
    for (auto c : core) {
        domains[c].clear();
        domains[c].set(c);
    }
    return HomSearch(g, g, std::move(domains)).run();
}

VertexMap induced_arc_map(const Digraph& g, const Digraph& h, const VertexMap& phi) {
    const auto g_arcs = g.arcs();
    const auto h_arcs = h.arcs();
    VertexMap out;
    out.assignment.reserve(g_arcs.size());
    for (auto [u, v] : g_arcs) {
        Arc image{phi(u), phi(v)};
        auto it = std::lower_bound(h_arcs.begin(), h_arcs.end(), image);
        if (it == h_arcs.end() || *it != image)
            throw InvalidInput("map is not a homomorphism: arc (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has no image");
        out.assignment.push_back(static_cast<std::size_t>(it - h_arcs.begin()));
    }
    return out;
}

}  // namespace arcgraph
