#include "arcgraph/adjoint.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <tuple>

#include "arcgraph/errors.hpp"

namespace arcgraph {

namespace {

using Mask = std::uint64_t;

struct MaskPair {
    Mask x;
    Mask y;
};

bool pair_less(const MaskPair& a, const MaskPair& b) {
    const int sa = std::popcount(a.x) + std::popcount(a.y);
    const int sb = std::popcount(b.x) + std::popcount(b.y);
    if (sa != sb) return sa < sb;
    if (a.x != b.x) return canonical_less(a.x, b.x);
    return canonical_less(a.y, b.y);
}

Mask to_mask(const Bitset& b) { return b.word_count() ? b.data()[0] : 0; }

Bitset to_bitset(Mask m, std::size_t n) {
    Bitset b(n);
    if (n) b.data()[0] = m;
    return b;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct Neighbourhoods {
    std::vector<Mask> out;
    std::vector<Mask> in;
    std::size_t n;

    explicit Neighbourhoods(const Digraph& k) : n{k.vertex_count()} {
        for (std::size_t v = 0; v < n; ++v) {
            out.push_back(to_mask(k.out_neighbors(v)));
            in.push_back(to_mask(k.in_neighbors(v)));
        }
    }
    Mask common_out(Mask xs) const {
        Mask r = full_mask(n);
        for (; xs; xs &= xs - 1) r &= out[static_cast<std::size_t>(std::countr_zero(xs))];
        return r;
    }
    Mask common_in(Mask ys) const {
        Mask r = full_mask(n);
        for (; ys; ys &= ys - 1) r &= in[static_cast<std::size_t>(std::countr_zero(ys))];
        return r;
    }
};

std::vector<MaskPair> subset_pairs(const Digraph& k, std::size_t budget) {
    const std::size_t n = k.vertex_count();
    // 4^n candidates; n < 32 keeps the shift defined
    if (n >= 32 || (std::size_t{1} << (2 * n)) > budget)
        throw SizeBudgetExceeded("delta_right candidate pairs",
                                 n >= 32 ? std::numeric_limits<std::size_t>::max() : std::size_t{1} << (2 * n), budget);
    const Neighbourhoods nb(k);
    std::vector<MaskPair> pairs;
    for (Mask x = 0; x <= full_mask(n); ++x) {
        const Mask allowed = nb.common_out(x);
        // every subset of `allowed`, including empty
        Mask y = 0;
        while (true) {
            pairs.push_back({x, y});
            if (y == allowed) break;
            y = (y - allowed) & allowed;
        }
    }
    std::sort(pairs.begin(), pairs.end(), pair_less);
    return pairs;
}

Digraph build_delta_right(const Digraph& k, const std::vector<MaskPair>& pairs) {
    const std::size_t n = k.vertex_count();
    const std::size_t count = pairs.size();
    // starts[b]: pairs whose first set contains b
    std::vector<Bitset> starts(n, Bitset(count));
    for (std::size_t j = 0; j < count; ++j)
        for (Mask z = pairs[j].x; z; z &= z - 1) starts[static_cast<std::size_t>(std::countr_zero(z))].set(j);

    Digraph d(count);
    for (std::size_t i = 0; i < count; ++i) {
        Bitset row(count);
        for (Mask y = pairs[i].y; y; y &= y - 1) row |= starts[static_cast<std::size_t>(std::countr_zero(y))];
        row.for_each([&](std::size_t j) { d.add_arc(i, j); });
    }
    std::vector<VertexLabel> labels;
    labels.reserve(count);
    for (const auto& p : pairs) labels.emplace_back(SubsetPair{to_bitset(p.x, n), to_bitset(p.y, n)});
    d.set_labels(std::move(labels));
    return d;
}

std::map<std::pair<Mask, Mask>, std::size_t> pair_index(const std::vector<MaskPair>& pairs) {
    std::map<std::pair<Mask, Mask>, std::size_t> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index.emplace(std::pair{pairs[i].x, pairs[i].y}, i);
    return index;
}

}  // namespace

Digraph delta_right(const Digraph& k, std::size_t budget) { return build_delta_right(k, subset_pairs(k, budget)); }

Digraph iterated_delta_right(const Digraph& k, std::size_t times, std::size_t budget) {
    Digraph d = k;
    for (std::size_t i = 0; i < times; ++i) d = delta_right(d, budget);
    return d;
}

TightCore tight_core(const Digraph& k, std::size_t budget) {
    const auto pairs = subset_pairs(k, budget);
    const Neighbourhoods nb(k);
    TightCore tc;
    tc.delta_r = build_delta_right(k, pairs);

    std::map<std::pair<Mask, Mask>, std::size_t> core_index;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [x, y] = pairs[i];
        if (nb.common_out(x) == y && nb.common_in(y) == x) {
            core_index.emplace(std::pair{x, y}, tc.core_vertices.size());
            tc.core_vertices.push_back(i);
        }
    }
    tc.core = induced_subgraph(tc.delta_r, tc.core_vertices);

    tc.retraction.assignment.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Mask x_closed = nb.common_in(pairs[i].y);
        const Mask y_closed = nb.common_out(x_closed);
        auto it = core_index.find({x_closed, y_closed});
        if (it == core_index.end()) throw RetractionInvalid("Galois closure of a subset pair is not tight");
        tc.retraction.assignment[i] = it->second;
    }

    if (!is_homomorphism(tc.delta_r, tc.core, tc.retraction))
        throw RetractionInvalid("closure map is not a homomorphism onto the tight core");
    for (std::size_t c = 0; c < tc.core_vertices.size(); ++c)
        if (tc.retraction(tc.core_vertices[c]) != c) throw RetractionInvalid("closure map moves a tight pair");
    return tc;
}

CanonicalHoms canonical_homs(const Digraph& g, std::size_t budget) {
    CanonicalHoms h;
    const Digraph dg = arc_graph(g);
    const auto unit_pairs = subset_pairs(dg, budget);
    h.unit_target = build_delta_right(dg, unit_pairs);
    const auto index = pair_index(unit_pairs);

    // δ(g) vertices are the arcs of g in sorted order
    const auto arcs = g.arcs();
    std::vector<Mask> entering(g.vertex_count(), 0), leaving(g.vertex_count(), 0);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        leaving[arcs[a].first] |= Mask{1} << a;
        entering[arcs[a].second] |= Mask{1} << a;
    }
    for (std::size_t u = 0; u < g.vertex_count(); ++u) h.unit.assignment.push_back(index.at({entering[u], leaving[u]}));

    const auto counit_pairs = subset_pairs(g, budget);
    const Digraph drg = build_delta_right(g, counit_pairs);
    h.counit_source = arc_graph(drg);
    for (const auto& label : h.counit_source.labels()) {
        const auto& w = std::get<Walk>(label);
        const Mask meet = counit_pairs[w[0]].y & counit_pairs[w[1]].x;
        h.counit.assignment.push_back(static_cast<std::size_t>(std::countr_zero(meet)));
    }

    if (!is_homomorphism(g, h.unit_target, h.unit)) throw RetractionInvalid("unit map is not a homomorphism");
    if (!is_homomorphism(h.counit_source, g, h.counit)) throw RetractionInvalid("counit map is not a homomorphism");
    return h;
}

AdjunctionSides adjunction_sides(const Digraph& g, const Digraph& k, std::size_t times, std::size_t budget) {
    AdjunctionSides sides;
    sides.arc_graph_side = find_homomorphism(iterated_arc_graph(g, times), k).has_value();
    sides.adjoint_side = find_homomorphism(g, iterated_delta_right(k, times, budget)).has_value();
    return sides;
}

bool check_adjunction(const Digraph& g, const Digraph& k, std::size_t budget) {
    return adjunction_sides(g, k, 1, budget).agree();
}

bool core_equals_nondomination(const Poset& p, std::size_t budget) {
    const std::size_t m = p.size();
    const TightCore tc = tight_core(nondomination(p), budget);
    const Poset lattice = ideal_lattice(p, budget);
    const Digraph target = nondomination(lattice);
    if (tc.core.vertex_count() != target.vertex_count()) return false;

    std::map<Mask, std::size_t> ideal_index;
    for (std::size_t i = 0; i < lattice.size(); ++i) ideal_index.emplace(lattice.labels()[i][0], i);

    const Mask all = full_mask(m);
    std::vector<std::size_t> image(tc.core.vertex_count());
    std::vector<bool> hit(target.vertex_count(), false);
    for (std::size_t c = 0; c < tc.core.vertex_count(); ++c) {
        const auto& pair = std::get<SubsetPair>(tc.core.labels()[c]);
        const Mask x = to_mask(pair.x);
        if (to_mask(pair.y) != (~x & all)) return false;
        auto it = ideal_index.find(x);
        if (it == ideal_index.end() || hit[it->second]) return false;
        hit[it->second] = true;
        image[c] = it->second;
    }
    for (std::size_t a = 0; a < tc.core.vertex_count(); ++a)
        for (std::size_t b = 0; b < tc.core.vertex_count(); ++b)
            if (tc.core.has_arc(a, b) != target.has_arc(image[a], image[b])) return false;
    return true;
}

}  // namespace arcgraph
