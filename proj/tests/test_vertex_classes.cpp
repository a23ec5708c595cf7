#include "doctest.h"

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "twomis/families.hpp"
#include "twomis/vertex_classes.hpp"

using namespace twomis;

TEST_CASE("leaves, simplicial and codominated vertices") {
    Graph p4 = path_graph(4);
    CHECK(leaves(p4) == VertexSet{0, 3});
    CHECK(simplicial_vertices(p4) == VertexSet{0, 3});
    CodominatedResult cod = codominated_vertices(p4);
    CHECK(cod.members == VertexSet{1, 2});
    CHECK(cod.witness[1] == 0);  // the adjacent leaf
    CHECK(cod.witness[2] == 3);

    for (int n = 2; n <= 5; ++n) {
        Graph kn = complete_graph(n);
        CHECK(simplicial_vertices(kn) == kn.vertices());
        CHECK(codominated_vertices(kn).members == kn.vertices());
    }

    Graph c5 = cycle_graph(5);
    CHECK(leaves(c5).empty());
    CHECK(simplicial_vertices(c5).empty());
    CHECK(codominated_vertices(c5).members.empty());
}

TEST_CASE("shedding vertices of named graphs") {
    CHECK(shedding_vertices(complete_graph(1)).empty());
    for (int n = 2; n <= 6; ++n)
        CHECK(shedding_vertices(complete_graph(n)) == complete_graph(n).vertices());
    CHECK(shedding_vertices(cycle_graph(5)) == cycle_graph(5).vertices());
    CHECK(shedding_vertices(path_graph(4)) == VertexSet{1, 2});
    CHECK(shedding_vertices(empty_graph(3)).empty());  // isolated vertices never shed
}

TEST_CASE("codominated vertices shed; shedding needs codomination or a 5-cycle") {
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng_below(rng, 8));
        Graph g = random_gnp(n, 0.35, rng);
        VertexSet shed = shedding_vertices(g);
        CodominatedResult cod = codominated_vertices(g);
        CHECK(cod.members.is_subset_of(shed));
        for (int v : simplicial_vertices(g)) CHECK(g.neighbors(v).is_subset_of(shed));
    }
}

TEST_CASE("shedding definition matches the quantifier directly") {
    // every independent set of g - N[v], not just maximal ones
    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng_below(rng, 7));
        Graph g = random_gnp(n, 0.4, rng);
        for (int v = 0; v < n; ++v) {
            Subgraph rest = delete_vertices(g, g.closed_neighbors(v));
            bool expect = g.degree(v) > 0;
            for (std::uint64_t mask = 0;
                 expect && mask < (1ULL << rest.graph.vertex_count()); ++mask) {
                if (!oracles::subset_independent(rest.graph, mask)) continue;
                VertexSet back;
                for (int w : VertexSet::from_bits(mask))
                    back.insert(rest.to_original[static_cast<std::size_t>(w)]);
                bool extends = false;
                for (int u : g.neighbors(v))
                    if (!(g.adjacency_bits(u) & back.bits())) {
                        extends = true;
                        break;
                    }
                if (!extends) expect = false;
            }
            CHECK(is_shedding_vertex(g, v) == expect);
        }
    }
}

TEST_CASE("swap expansion on named graphs") {
    // empty subset: identity
    SheddingExpansion id = expand_shedding_subset(cycle_graph(5), VertexSet{0, 2}, VertexSet{});
    CHECK(id.independent_set == VertexSet{0, 2});
    CHECK(id.matching.size() == 0);

    SheddingExpansion k2 = expand_shedding_subset(complete_graph(2), VertexSet{0}, VertexSet{0});
    CHECK(k2.independent_set == VertexSet{1});
    CHECK(k2.matching.edges().edges() == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS(expand_shedding_subset(complete_graph(3), VertexSet{0, 1}, VertexSet{}),
                    std::invalid_argument);  // not independent
    CHECK_THROWS_AS(expand_shedding_subset(path_graph(4), VertexSet{0}, VertexSet{0}),
                    std::invalid_argument);  // leaf of P_4 is not shedding
}

TEST_CASE("powerset witnesses on the friendship graph") {
    Graph f2 = friendship_graph(2);
    // one vertex per triangle: a maximum independent set of shedding vertices
    VertexSet s{1, 3};
    CHECK(s.is_subset_of(shedding_vertices(f2)));
    std::vector<SheddingExpansion> family = shedding_powerset_witnesses(f2, s);
    REQUIRE(family.size() == 4);
    std::set<std::uint64_t> distinct;
    for (const SheddingExpansion& e : family) {
        CHECK(e.independent_set.size() == 2);
        CHECK(is_independent(f2, e.independent_set));
        distinct.insert(e.independent_set.bits());
    }
    CHECK(distinct.size() == 4);

    SheddingExpansion full = expand_shedding_subset(f2, s, s);
    CHECK(!full.independent_set.intersects(s));
    CHECK(is_valid_matching(f2, full.matching));
    CHECK(full.matching.saturates(s));
}

TEST_CASE("powerset witnesses across random graphs") {
    std::mt19937_64 rng(313);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng_below(rng, 7));
        Graph g = random_gnp(n, 0.4, rng);
        VertexSet shed = shedding_vertices(g);
        std::vector<int> ids = shed.to_vector();
        for (std::uint64_t pick = 0; pick < (1ULL << ids.size()); ++pick) {
            VertexSet s;
            for (std::size_t b = 0; b < ids.size(); ++b)
                if (pick >> b & 1) s.insert(ids[b]);
            if (s.size() > 4 || !is_independent(g, s)) continue;
            std::vector<SheddingExpansion> family = shedding_powerset_witnesses(g, s);
            CHECK(family.size() == (1ULL << s.size()));
            std::set<std::uint64_t> distinct;
            for (const SheddingExpansion& e : family) {
                CHECK(is_independent(g, e.independent_set));
                CHECK(e.independent_set.size() == s.size());
                distinct.insert(e.independent_set.bits());
            }
            CHECK(distinct.size() == family.size());
        }
    }
}

TEST_CASE("maximal set disjoint from a shedding set") {
    DisjointMaximalResult k2 = disjoint_maximal_from_shedding(complete_graph(2), VertexSet{0});
    CHECK(k2.maximal_set == VertexSet{1});

    DisjointMaximalResult k3 = disjoint_maximal_from_shedding(complete_graph(3), VertexSet{0});
    CHECK(k3.maximal_set == VertexSet{1});  // smallest admissible neighbor

    Graph f2 = friendship_graph(2);
    DisjointMaximalResult fr = disjoint_maximal_from_shedding(f2, VertexSet{1, 3});
    CHECK(!fr.maximal_set.intersects(VertexSet{1, 3}));
    CHECK(fr.maximal_set.size() == 2);
    CHECK(is_independent(f2, fr.maximal_set));
    // maximality: nothing can be added
    for (int v = 0; v < f2.vertex_count(); ++v)
        if (!fr.maximal_set.contains(v))
            CHECK((f2.adjacency_bits(v) & fr.maximal_set.bits()) != 0);
}
