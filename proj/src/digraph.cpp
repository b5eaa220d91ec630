#include "arcgraph/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arcgraph/errors.hpp"

namespace arcgraph {

namespace {

std::string join_indices(const std::vector<std::size_t>& v, char open, char close) {
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    s += close;
    return s;
}

}  // namespace

std::string label_to_string(const VertexLabel& label) {
    return std::visit(
        [](const auto& l) -> std::string {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return l;
            } else if constexpr (std::is_same_v<T, Walk>) {
                return join_indices(l, '(', ')');
            } else {
                return "(" + join_indices(l.x.to_indices(), '{', '}') + "," + join_indices(l.y.to_indices(), '{', '}') +
                       ")";
            }
        },
        label);
}

Digraph::Digraph(std::size_t n) : n_{n}, out_(n, Bitset(n)), in_(n, Bitset(n)) {}

Digraph::Digraph(std::size_t n, const std::vector<Arc>& arcs) : Digraph(n) {
    for (auto [u, v] : arcs) {
        if (u >= n || v >= n)
            throw InvalidInput("arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n = " +
                               std::to_string(n));
        if (!add_arc(u, v))
            throw InvalidInput("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
}

bool Digraph::add_arc(std::size_t u, std::size_t v) {
    if (out_[u].test(v)) return false;
    out_[u].set(v);
    in_[v].set(u);
    ++arc_count_;
    return true;
}

bool Digraph::remove_arc(std::size_t u, std::size_t v) {
    if (!out_[u].test(v)) return false;
    out_[u].reset(v);
    in_[v].reset(u);
    --arc_count_;
    return true;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (std::size_t u = 0; u < n_; ++u) out_[u].for_each([&](std::size_t v) { out.emplace_back(u, v); });
    return out;
}

bool Digraph::has_loops() const {
    for (std::size_t u = 0; u < n_; ++u)
        if (out_[u].test(u)) return true;
    return false;
}

bool Digraph::is_symmetric() const {
    for (std::size_t u = 0; u < n_; ++u)
        if (out_[u] != in_[u]) return false;
    return true;
}

namespace {

void check_labels(const std::vector<VertexLabel>& labels, std::size_t n) {
    if (labels.size() != n)
        throw InvalidInput("label count " + std::to_string(labels.size()) + " does not match vertex count " +
                           std::to_string(n));
    std::vector<const VertexLabel*> sorted;
    sorted.reserve(labels.size());
    for (const auto& l : labels) sorted.push_back(&l);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (*sorted[i - 1] == *sorted[i]) throw InvalidInput("duplicate vertex label " + label_to_string(*sorted[i]));
}

}  // namespace

void Digraph::set_labels(std::vector<VertexLabel> labels) {
    check_labels(labels, n_);
    labels_ = std::move(labels);
    labelled_ = true;
}

void Digraph::validate() const {
    std::size_t count = 0;
    for (std::size_t u = 0; u < n_; ++u) {
        if (out_[u].size() != n_ || in_[u].size() != n_) throw InvalidInput("adjacency row has wrong width");
        count += out_[u].count();
        out_[u].for_each([&](std::size_t v) {
            if (!in_[v].test(u)) throw InvalidInput("in/out adjacency rows disagree");
        });
    }
    if (count != arc_count_) throw InvalidInput("arc count out of sync");
    if (labelled_) check_labels(labels_, n_);
}

bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_ && a.labelled_ == b.labelled_ && a.labels_ == b.labels_;
}

GraphKind parse_graph_kind(std::string_view name) {
    static const std::map<std::string_view, GraphKind> kinds{
        {"complete", GraphKind::complete},
        {"k", GraphKind::complete},
        {"complete_with_loops", GraphKind::complete_with_loops},
        {"loops", GraphKind::complete_with_loops},
        {"debruijn", GraphKind::complete_with_loops},
        {"transitive_tournament", GraphKind::transitive_tournament},
        {"tt", GraphKind::transitive_tournament},
        {"cyclic_triangle", GraphKind::cyclic_triangle},
        {"c3", GraphKind::cyclic_triangle},
        {"directed_cycle", GraphKind::directed_cycle},
        {"dcycle", GraphKind::directed_cycle},
        {"undirected_cycle", GraphKind::undirected_cycle},
        {"cycle", GraphKind::undirected_cycle},
        {"path", GraphKind::path},
        {"empty", GraphKind::empty},
    };
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
        return c == '-' ? '_' : static_cast<char>(std::tolower(c));
    });
    auto it = kinds.find(lower);
    if (it == kinds.end()) throw InvalidInput("unknown graph kind '" + std::string(name) + "'");
    return it->second;
}

std::string_view to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::complete: return "complete";
        case GraphKind::complete_with_loops: return "complete_with_loops";
        case GraphKind::transitive_tournament: return "transitive_tournament";
        case GraphKind::cyclic_triangle: return "cyclic_triangle";
        case GraphKind::directed_cycle: return "directed_cycle";
        case GraphKind::undirected_cycle: return "undirected_cycle";
        case GraphKind::path: return "path";
        case GraphKind::empty: return "empty";
    }
    return "?";
}

Digraph generate(GraphKind kind, std::size_t n) {
    auto unsupported = [&](const char* why) {
        return InvalidInput(std::string(to_string(kind)) + " with n = " + std::to_string(n) + ": " + why);
    };
    if (n == 0 && kind != GraphKind::complete && kind != GraphKind::empty) throw unsupported("n must be positive");

    Digraph g(n);
    switch (kind) {
        case GraphKind::complete:
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    if (u != v) g.add_arc(u, v);
            break;
        case GraphKind::complete_with_loops:
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) g.add_arc(u, v);
            break;
        case GraphKind::transitive_tournament:
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v) g.add_arc(u, v);
            break;
        case GraphKind::cyclic_triangle:
            if (n != 3) throw unsupported("the cyclic triangle has exactly 3 vertices");
            g.add_arc(0, 1);
            g.add_arc(1, 2);
            g.add_arc(2, 0);
            break;
        case GraphKind::directed_cycle:
            if (n < 2) throw unsupported("a directed cycle needs at least 2 vertices");
            for (std::size_t u = 0; u < n; ++u) g.add_arc(u, (u + 1) % n);
            break;
        case GraphKind::undirected_cycle:
            if (n < 3) throw unsupported("an undirected cycle needs at least 3 vertices");
            for (std::size_t u = 0; u < n; ++u) {
                g.add_arc(u, (u + 1) % n);
                g.add_arc((u + 1) % n, u);
            }
            break;
        case GraphKind::path:
            for (std::size_t u = 0; u + 1 < n; ++u) {
                g.add_arc(u, u + 1);
                g.add_arc(u + 1, u);
            }
            break;
        case GraphKind::empty:
            break;
    }
    return g;
}

Digraph arc_graph(const Digraph& g) {
    const auto arcs = g.arcs();
    Digraph d(arcs.size());
    std::vector<VertexLabel> labels;
    labels.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto [u, v] = arcs[i];
        labels.emplace_back(Walk{u, v});
        auto j = std::lower_bound(arcs.begin(), arcs.end(), Arc{v, 0});
        for (; j != arcs.end() && j->first == v; ++j) d.add_arc(i, static_cast<std::size_t>(j - arcs.begin()));
    }
    d.set_labels(std::move(labels));
    return d;
}

Digraph iterated_arc_graph(const Digraph& g, std::size_t k) {
    if (k == 0) return g;

    // Depth-first walk enumeration visits walks in lexicographic order.
    std::vector<Walk> walks;
    Walk current;
    auto extend = [&](auto&& self) -> void {
        if (current.size() == k + 1) {
            walks.push_back(current);
            return;
        }
        g.out_neighbors(current.back()).for_each([&](std::size_t next) {
            current.push_back(next);
            self(self);
            current.pop_back();
        });
    };
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        current.assign(1, s);
        extend(extend);
    }

    std::map<Walk, std::size_t> index;
    for (std::size_t i = 0; i < walks.size(); ++i) index.emplace(walks[i], i);

    Digraph d(walks.size());
    Walk shifted(k + 1);
    for (std::size_t i = 0; i < walks.size(); ++i) {
        std::copy(walks[i].begin() + 1, walks[i].end(), shifted.begin());
        g.out_neighbors(walks[i].back()).for_each([&](std::size_t next) {
            shifted.back() = next;
            d.add_arc(i, index.at(shifted));
        });
    }
    std::vector<VertexLabel> labels(walks.begin(), walks.end());
    d.set_labels(std::move(labels));
    return d;
}

bool check_delta_iso(const Digraph& g, std::size_t k, std::size_t budget) {
    if (k == 0) throw InvalidInput("check_delta_iso needs k >= 1");
    const Digraph prev = iterated_arc_graph(g, k - 1);
    if (prev.vertex_count() > budget) throw SizeBudgetExceeded("check_delta_iso", prev.vertex_count(), budget);
    if (prev.arc_count() > budget) throw SizeBudgetExceeded("check_delta_iso", prev.arc_count(), budget);
    const Digraph recursive = arc_graph(prev);
    const Digraph direct = iterated_arc_graph(g, k);
    if (direct.vertex_count() > budget) throw SizeBudgetExceeded("check_delta_iso", direct.vertex_count(), budget);
    if (recursive.vertex_count() != direct.vertex_count() || recursive.arc_count() != direct.arc_count()) return false;

    auto walk_of = [&](const Digraph& d, std::size_t v) -> Walk {
        if (k == 1) return Walk{v};  // δ^0(g) = g carries no walk labels
        return std::get<Walk>(d.labels()[v]);
    };

    std::map<Walk, std::size_t> direct_index;
    for (std::size_t i = 0; i < direct.vertex_count(); ++i) direct_index.emplace(std::get<Walk>(direct.labels()[i]), i);

    // ((u_0..u_{k-1}), (u_1..u_k)) -> (u_0..u_k)
    std::vector<std::size_t> image(recursive.vertex_count());
    std::vector<bool> hit(direct.vertex_count(), false);
    for (std::size_t i = 0; i < recursive.vertex_count(); ++i) {
        const auto& pair = std::get<Walk>(recursive.labels()[i]);
        Walk a = walk_of(prev, pair[0]);
        const Walk b = walk_of(prev, pair[1]);
        if (!std::equal(a.begin() + 1, a.end(), b.begin(), b.end() - 1)) return false;
        a.push_back(b.back());
        auto it = direct_index.find(a);
        if (it == direct_index.end() || hit[it->second]) return false;
        hit[it->second] = true;
        image[i] = it->second;
    }
    for (std::size_t u = 0; u < recursive.vertex_count(); ++u)
        for (std::size_t v = 0; v < recursive.vertex_count(); ++v)
            if (recursive.has_arc(u, v) != direct.has_arc(image[u], image[v])) return false;
    return true;
}

Digraph symmetric_restriction(const Digraph& g) {
    Digraph s(g.vertex_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        (g.out_neighbors(u) & g.in_neighbors(u)).for_each([&](std::size_t v) { s.add_arc(u, v); });
    if (g.has_labels()) s.set_labels(g.labels());
    return s;
}

Digraph symmetric_closure(const Digraph& g) {
    Digraph s = g;
    for (auto [u, v] : g.arcs()) s.add_arc(v, u);
    return s;
}

Digraph reverse(const Digraph& g) {
    Digraph r(g.vertex_count());
    for (auto [u, v] : g.arcs()) r.add_arc(v, u);
    if (g.has_labels()) r.set_labels(g.labels());
    return r;
}

Digraph induced_subgraph(const Digraph& g, const std::vector<std::size_t>& vertices) {
    Digraph s(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (g.has_arc(vertices[i], vertices[j])) s.add_arc(i, j);
    if (g.has_labels()) {
        std::vector<VertexLabel> labels;
        labels.reserve(vertices.size());
        for (auto v : vertices) labels.push_back(g.labels()[v]);
        s.set_labels(std::move(labels));
    }
    return s;
}

}  // namespace arcgraph
