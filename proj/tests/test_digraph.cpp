#include <gtest/gtest.h>

#include <random>

#include "arcgraph/digraph.hpp"
#include "arcgraph/errors.hpp"
#include "arcgraph/verify.hpp"
#include "oracles.hpp"

using namespace arcgraph;

namespace {

Digraph tt(std::size_t n) { return generate(GraphKind::transitive_tournament, n); }

std::size_t indeg_outdeg_sum(const Digraph& g) {
    std::size_t s = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) s += g.in_degree(v) * g.out_degree(v);
    return s;
}

VertexMap compose(const VertexMap& psi, const VertexMap& phi) {
    VertexMap out;
    for (auto v : phi.assignment) out.assignment.push_back(psi(v));
    return out;
}

}  // namespace

TEST(Digraph, RejectsBadArcs) {
    EXPECT_THROW(Digraph(2, {{0, 2}}), InvalidInput);
    EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), InvalidInput);
    Digraph g(2);
    EXPECT_TRUE(g.add_arc(0, 1));
    EXPECT_FALSE(g.add_arc(0, 1));
    EXPECT_TRUE(g.remove_arc(0, 1));
    EXPECT_EQ(g.arc_count(), 0u);
}

TEST(Digraph, LabelsMustBeDistinct) {
    Digraph g(2);
    EXPECT_THROW(g.set_labels({std::string("a"), std::string("a")}), InvalidInput);
    EXPECT_THROW(g.set_labels({std::string("a")}), InvalidInput);
    g.set_labels({std::string("a"), std::string("b")});
    EXPECT_TRUE(g.has_labels());
}

TEST(Generate, StandardKinds) {
    EXPECT_EQ(generate(GraphKind::complete, 4).arc_count(), 12u);
    EXPECT_EQ(generate(GraphKind::complete_with_loops, 3).arc_count(), 9u);
    EXPECT_EQ(tt(4).arc_count(), 6u);
    EXPECT_EQ(generate(GraphKind::cyclic_triangle, 3).arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));
    EXPECT_TRUE(generate(GraphKind::undirected_cycle, 5).is_symmetric());
    EXPECT_TRUE(generate(GraphKind::path, 4).is_symmetric());
    EXPECT_EQ(generate(GraphKind::complete, 0).vertex_count(), 0u);
    EXPECT_THROW(generate(GraphKind::cyclic_triangle, 4), InvalidInput);
    EXPECT_THROW(generate(GraphKind::undirected_cycle, 2), InvalidInput);
}

TEST(Generate, KindNames) {
    EXPECT_EQ(parse_graph_kind("tt"), GraphKind::transitive_tournament);
    EXPECT_EQ(parse_graph_kind("Complete-With-Loops"), GraphKind::complete_with_loops);
    EXPECT_EQ(parse_graph_kind("c3"), GraphKind::cyclic_triangle);
    EXPECT_THROW(parse_graph_kind("petersen"), InvalidInput);
    for (auto kind : {GraphKind::complete, GraphKind::path, GraphKind::empty})
        EXPECT_EQ(parse_graph_kind(to_string(kind)), kind);
}

TEST(ArcGraph, TransitiveTriangle) {
    const Digraph d = arc_graph(tt(3));
    EXPECT_EQ(d.vertex_count(), 3u);
    EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 2}}));
    EXPECT_EQ(label_to_string(d.labels()[2]), "(1,2)");
}

TEST(ArcGraph, LoopsAndEmpty) {
    // the loop arc follows itself
    const Digraph d = arc_graph(Digraph(1, {{0, 0}}));
    EXPECT_EQ(d.vertex_count(), 1u);
    EXPECT_TRUE(d.has_arc(0, 0));
    EXPECT_EQ(arc_graph(Digraph(3)).vertex_count(), 0u);
    // de Bruijn graph B(2,2)
    const Digraph b = arc_graph(generate(GraphKind::complete_with_loops, 2));
    EXPECT_EQ(b.vertex_count(), 4u);
    EXPECT_EQ(b.arc_count(), 8u);
}

TEST(ArcGraph, ArcCountIsSumOfDegreeProducts) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Digraph g = oracle::random_digraph(rng, 1 + trial % 7, 0.4, true);
        EXPECT_EQ(arc_graph(g).arc_count(), indeg_outdeg_sum(g));
    }
}

TEST(ArcGraph, IteratedWalksMatchRepeatedConstruction) {
    for (const auto& member : default_corpus())
        for (std::size_t k = 1; k <= 2; ++k) EXPECT_TRUE(check_delta_iso(member.graph, k)) << member.name << " k=" << k;
    EXPECT_TRUE(check_delta_iso(generate(GraphKind::complete_with_loops, 2), 3));
    EXPECT_EQ(iterated_arc_graph(tt(4), 0), tt(4));
    // walks with k+1 vertices in TT_m are increasing (k+1)-subsets
    EXPECT_EQ(iterated_arc_graph(tt(6), 2).vertex_count(), 20u);
}

TEST(Symmetric, RestrictionIsIdempotent) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Digraph g = oracle::random_digraph(rng, 1 + trial % 8, 0.5, true);
        const Digraph s = symmetric_restriction(g);
        EXPECT_TRUE(s.is_symmetric());
        EXPECT_EQ(symmetric_restriction(s), s);
        EXPECT_EQ(symmetric_closure(s), s);
        EXPECT_EQ(reverse(reverse(g)), g);
    }
}

TEST(Homomorphism, AgreesWithBruteForce) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Digraph g = oracle::random_digraph(rng, 1 + trial % 5, 0.4, trial % 3 == 0);
        const Digraph h = oracle::random_digraph(rng, 1 + trial % 3, 0.5, trial % 4 == 0);
        bool exists = false;
        std::vector<std::size_t> a(g.vertex_count(), 0);
        while (!exists) {
            exists = is_homomorphism(g, h, VertexMap{a});
            std::size_t i = 0;
            while (i < a.size() && ++a[i] == h.vertex_count()) a[i++] = 0;
            if (i == a.size()) break;
        }
        const auto phi = find_homomorphism(g, h);
        EXPECT_EQ(phi.has_value(), exists);
        if (phi) EXPECT_TRUE(is_homomorphism(g, h, *phi));
    }
}

TEST(Homomorphism, EdgeCases) {
    EXPECT_TRUE(find_homomorphism(Digraph(0), Digraph(0)).has_value());
    EXPECT_FALSE(find_homomorphism(Digraph(1), Digraph(0)).has_value());
    EXPECT_FALSE(find_homomorphism(Digraph(1, {{0, 0}}), generate(GraphKind::complete, 3)).has_value());
    EXPECT_FALSE(find_homomorphism(generate(GraphKind::cyclic_triangle, 3), generate(GraphKind::complete, 2)));
}

TEST(Homomorphism, RetractionOfPathOntoEdge) {
    const Digraph p = generate(GraphKind::path, 4);
    const auto r = find_retraction(p, {0, 1});
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(is_homomorphism(p, p, *r));
    EXPECT_EQ((*r)(0), 0u);
    EXPECT_EQ((*r)(1), 1u);
    EXPECT_FALSE(find_retraction(generate(GraphKind::undirected_cycle, 5), {0, 1}).has_value());
}

TEST(Homomorphism, InducedArcMapIsFunctorial) {
    const Digraph g = generate(GraphKind::undirected_cycle, 6);
    const Digraph h = generate(GraphKind::complete, 3);
    const Digraph k = generate(GraphKind::complete, 2);
    const auto phi = find_homomorphism(g, h);
    const auto psi = find_homomorphism(h, generate(GraphKind::complete, 4));
    const auto chi = find_homomorphism(g, k);
    ASSERT_TRUE(phi && psi && chi);
    const Digraph k4 = generate(GraphKind::complete, 4);
    const VertexMap dphi = induced_arc_map(g, h, *phi);
    const VertexMap dpsi = induced_arc_map(h, k4, *psi);
    EXPECT_TRUE(is_homomorphism(arc_graph(g), arc_graph(h), dphi));
    EXPECT_EQ(induced_arc_map(g, k4, compose(*psi, *phi)), compose(dpsi, dphi));
    EXPECT_EQ(induced_arc_map(g, g, VertexMap{{0, 1, 2, 3, 4, 5}}).assignment.size(), g.arc_count());
    EXPECT_THROW(induced_arc_map(g, h, VertexMap{{0, 0, 0, 0, 0, 0}}), InvalidInput);
}
