#include <gtest/gtest.h>

#include "arcgraph/adjoint.hpp"
#include "arcgraph/errors.hpp"
#include "oracles.hpp"

using namespace arcgraph;

namespace {

Digraph complete(std::size_t n) { return generate(GraphKind::complete, n); }

const SubsetPair& pair_of(const Digraph& d, std::size_t v) { return std::get<SubsetPair>(d.labels()[v]); }

/// Tightness straight from the definition.
bool tight(const Digraph& k, const SubsetPair& p) {
    for (std::size_t v = 0; v < k.vertex_count(); ++v) {
        bool all_out = true, all_in = true;
        p.x.for_each([&](std::size_t x) { all_out = all_out && k.has_arc(x, v); });
        p.y.for_each([&](std::size_t y) { all_in = all_in && k.has_arc(v, y); });
        if (all_out != p.y.test(v) || all_in != p.x.test(v)) return false;
    }
    return true;
}

}  // namespace

TEST(DeltaRight, EmptyBase) {
    const Digraph d = delta_right(Digraph(0));
    EXPECT_EQ(d.vertex_count(), 1u);
    EXPECT_EQ(d.arc_count(), 0u);
    const Digraph d2 = iterated_delta_right(Digraph(0), 2);
    EXPECT_EQ(d2.vertex_count(), 3u);
    EXPECT_EQ(d2.arc_count(), 1u);
}

TEST(DeltaRight, SingleVertex) {
    const Digraph d = delta_right(Digraph(1));
    ASSERT_EQ(d.vertex_count(), 3u);
    EXPECT_EQ(label_to_string(d.labels()[0]), "({},{})");
    EXPECT_EQ(label_to_string(d.labels()[1]), "({},{0})");
    EXPECT_EQ(label_to_string(d.labels()[2]), "({0},{})");
    EXPECT_EQ(d.arcs(), (std::vector<Arc>{{1, 2}}));
}

TEST(DeltaRight, VerticesAreExactlyCompleteBipartitePairs) {
    for (const auto& k : oracle::all_digraphs(3)) {
        const Digraph d = delta_right(k);
        std::size_t expected = 0;
        for (unsigned x = 0; x < 8; ++x)
            for (unsigned y = 0; y < 8; ++y) {
                bool ok = true;
                for (std::size_t a = 0; a < 3; ++a)
                    for (std::size_t b = 0; b < 3; ++b)
                        if ((x >> a & 1) && (y >> b & 1) && !k.has_arc(a, b)) ok = false;
                expected += ok;
            }
        ASSERT_EQ(d.vertex_count(), expected);
        for (std::size_t v = 1; v < d.vertex_count(); ++v) EXPECT_TRUE(pair_of(d, v - 1) < pair_of(d, v));
        for (std::size_t u = 0; u < d.vertex_count(); ++u)
            for (std::size_t v = 0; v < d.vertex_count(); ++v)
                EXPECT_EQ(d.has_arc(u, v), pair_of(d, u).y.intersects(pair_of(d, v).x));
    }
}

TEST(DeltaRight, Budget) {
    EXPECT_THROW(delta_right(complete(9), 1000), SizeBudgetExceeded);
    EXPECT_THROW(delta_right(complete(40)), SizeBudgetExceeded);
}

TEST(TightCore, Examples) {
    EXPECT_EQ(tight_core(Digraph(0)).core.vertex_count(), 1u);
    const auto k1 = tight_core(Digraph(1));
    EXPECT_EQ(k1.core.vertex_count(), 2u);
    EXPECT_EQ(k1.core.arc_count(), 1u);
    EXPECT_EQ(tight_core(complete(2)).core.vertex_count(), 4u);
}

TEST(TightCore, RetractionIsIdempotentAndFixesExactlyTightPairs) {
    for (const auto& k : oracle::all_digraphs(3)) {
        const auto tc = tight_core(k);
        const auto& r = tc.retraction;
        std::vector<bool> in_core(tc.delta_r.vertex_count(), false);
        for (auto v : tc.core_vertices) in_core[v] = true;
        for (std::size_t v = 0; v < tc.delta_r.vertex_count(); ++v) {
            EXPECT_EQ(in_core[v], tight(k, pair_of(tc.delta_r, v)));
            EXPECT_EQ(r(tc.core_vertices[r(v)]), r(v));
            if (in_core[v]) EXPECT_EQ(tc.core_vertices[r(v)], v);
        }
        EXPECT_TRUE(is_homomorphism(tc.delta_r, tc.core, r));
    }
}

TEST(CanonicalHoms, TransitiveTriangleUnit) {
    const auto h = canonical_homs(generate(GraphKind::transitive_tournament, 3));
    // arcs of TT_3 in order: (0,1), (0,2), (1,2)
    EXPECT_EQ(label_to_string(h.unit_target.labels()[h.unit(1)]), "({0},{2})");
    EXPECT_TRUE(is_homomorphism(h.counit_source, generate(GraphKind::transitive_tournament, 3), h.counit));
}

TEST(CanonicalHoms, EmptyAndCyclic) {
    const auto e = canonical_homs(Digraph(0));
    EXPECT_TRUE(e.unit.assignment.empty());
    EXPECT_TRUE(e.counit.assignment.empty());
    const Digraph c = generate(GraphKind::cyclic_triangle, 3);
    const auto h = canonical_homs(c);
    for (std::size_t v = 0; v < 3; ++v) {
        const auto& p = pair_of(h.unit_target, h.unit(v));
        EXPECT_EQ(p.x.count(), 1u);
        EXPECT_EQ(p.y.count(), 1u);
    }
    for (const auto& g : oracle::all_digraphs(2)) EXPECT_NO_THROW(canonical_homs(g));
}

TEST(Adjunction, Examples) {
    const Digraph c = generate(GraphKind::cyclic_triangle, 3);
    auto s3 = adjunction_sides(c, complete(3));
    EXPECT_TRUE(s3.arc_graph_side && s3.adjoint_side);
    auto s2 = adjunction_sides(c, complete(2));
    EXPECT_FALSE(s2.arc_graph_side || s2.adjoint_side);
    EXPECT_TRUE(check_adjunction(complete(1), Digraph(0)));
}

TEST(Adjunction, ExhaustiveSmall) {
    const auto bases = oracle::all_digraphs(2);
    std::vector<Digraph> adjoints;
    for (const auto& k : bases) adjoints.push_back(delta_right(k));
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& g : oracle::all_digraphs(n)) {
            const Digraph dg = arc_graph(g);
            for (std::size_t i = 0; i < bases.size(); ++i)
                EXPECT_EQ(find_homomorphism(dg, bases[i]).has_value(), find_homomorphism(g, adjoints[i]).has_value());
        }
}

TEST(Adjunction, IteratedTwice) {
    for (std::size_t kn : {1, 2}) {
        const Digraph k = complete(kn);
        const Digraph dr2 = iterated_delta_right(k, 2);
        for (std::size_t n = 0; n <= 3; ++n)
            for (const auto& g : oracle::all_digraphs(n))
                EXPECT_EQ(find_homomorphism(iterated_arc_graph(g, 2), k).has_value(),
                          find_homomorphism(g, dr2).has_value());
    }
    EXPECT_TRUE(adjunction_sides(generate(GraphKind::cyclic_triangle, 3), complete(2), 2).agree());
}

TEST(CoreEqualsNondomination, Examples) {
    EXPECT_TRUE(core_equals_nondomination(antichain_poset(1)));
    EXPECT_TRUE(core_equals_nondomination(antichain_poset(2)));
    EXPECT_TRUE(core_equals_nondomination(chain_poset(2)));
    EXPECT_TRUE(core_equals_nondomination(antichain_poset(0)));
}

TEST(CoreEqualsNondomination, AllPosetsUpToFour) {
    std::size_t checked = 0;
    for (std::size_t m = 0; m <= 4; ++m)
        for (const auto& p : oracle::all_posets(m)) {
            EXPECT_TRUE(core_equals_nondomination(p));
            ++checked;
        }
    EXPECT_EQ(checked, 1u + 1 + 3 + 19 + 219);
}
