#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rgraph/graphs.hpp"
#include "rgraph/matching.hpp"
#include "rgraph/multigraph.hpp"

#include "oracles.hpp"

using namespace rgraph;

TEST_CASE("multigraph construction rejects loops and bad endpoints") {
    CHECK_THROWS_AS(Multigraph(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), GraphError);
    Multigraph g(3, {{2, 0}});
    CHECK(g.edge(0).u == 0); // endpoints normalized
    CHECK(g.edge(0).v == 2);
}

TEST_CASE("boundary on named graphs") {
    Multigraph k2(2, {{0, 1}});
    auto cut = boundary(k2, VertexSet(2, {0}));
    CHECK(cut.boundary == std::vector<EdgeId>{0});

    auto petersen = petersen_graph();
    for (Vertex v = 0; v < 10; ++v)
        CHECK(boundary(petersen, VertexSet(10, {v})).size() == 3);

    // triangle side of the prism leaves exactly the three rungs
    auto prism = prism_graph();
    auto rungs = boundary(prism, VertexSet(6, {0, 1, 2}));
    CHECK(rungs.boundary == std::vector<EdgeId>{6, 7, 8});
}

TEST_CASE("boundary rejects sets from the wrong universe") {
    auto k4 = complete_graph(4);
    CHECK_THROWS_AS(boundary(k4, VertexSet(5, {4})), GraphError);
}

TEST_CASE("boundary of a set equals boundary of its complement") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracles::random_multigraph(rng, 8, 14);
        std::uniform_int_distribution<std::uint32_t> pick(0, (1u << 8) - 1);
        VertexSet x = VertexSet::from_mask(8, pick(rng));
        CHECK(boundary(g, x).size() == boundary(g, x.complement()).size());
    }
}

TEST_CASE("degree sum is twice the edge count") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracles::random_multigraph(rng, 7, 15);
        int total = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("odd cut parity in regular graphs") {
    // for odd X in a d-regular graph, |boundary(X)| = d|X| (mod 2)
    for (const auto& [g, d] :
         {std::pair{petersen_graph(), 3}, {prism_graph(), 3}, {cycle_graph(7), 2}}) {
        const int n = g.vertex_count();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (std::popcount(mask) % 2 == 0)
                continue;
            auto x = VertexSet::from_mask(n, mask);
            REQUIRE(boundary(g, x).size() % 2 == (d * x.size()) % 2);
        }
    }
}

TEST_CASE("bipartite recognition") {
    auto k33 = complete_bipartite(3, 3);
    auto part = is_bipartite(k33);
    REQUIRE(part.has_value());
    CHECK(part->left.size() == 3);
    CHECK(part->right.size() == 3);
    for (const Edge& e : k33.edges())
        CHECK(part->left.contains(e.u) != part->left.contains(e.v));

    CHECK_FALSE(is_bipartite(petersen_graph()).has_value());
    CHECK_FALSE(is_bipartite(prism_graph()).has_value());
}

TEST_CASE("bipartite check agrees with brute-force 2-coloring on Petersen") {
    // independent route: try all 2^10 colorings
    auto g = petersen_graph();
    bool any = false;
    for (std::uint32_t coloring = 0; coloring < (1u << 10) && !any; ++coloring) {
        bool proper = true;
        for (const Edge& e : g.edges())
            if (((coloring >> e.u) & 1) == ((coloring >> e.v) & 1)) {
                proper = false;
                break;
            }
        any = proper;
    }
    CHECK_FALSE(any);
}

TEST_CASE("odd components") {
    auto k4 = complete_graph(4);
    auto oc = odd_components(k4, VertexSet::empty_set(4));
    CHECK(oc.count == 0);
    REQUIRE(oc.components.size() == 1);
    CHECK(oc.components[0].size() == 4);

    auto star = star_graph(3);
    CHECK(odd_components(star, VertexSet(4, {0})).count == 3);

    CHECK(odd_components(complete_graph(3), VertexSet::empty_set(3)).count == 1);
}

TEST_CASE("delete_edges") {
    auto k4 = complete_graph(4);
    SECTION("removing a perfect matching of K4 leaves a 4-cycle") {
        auto del = delete_edges(k4, {0, 5}); // 0-1 and 2-3
        CHECK(del.graph.vertex_count() == 4);
        CHECK(del.graph.edge_count() == 4);
        for (Vertex v = 0; v < 4; ++v)
            CHECK(del.graph.degree(v) == 2);
        CHECK(is_connected(del.graph));
        CHECK(del.new_id_of[0] == -1);
        CHECK(del.new_id_of[1] == 0);
    }
    SECTION("empty deletion is the identity") {
        auto del = delete_edges(k4, {});
        CHECK(del.graph == k4);
    }
    SECTION("unknown edge id") {
        CHECK_THROWS_AS(delete_edges(k4, {6}), GraphError);
    }
}

TEST_CASE("deleting any perfect matching from Petersen leaves two 5-cycles") {
    auto g = petersen_graph();
    auto pms = enumerate_perfect_matchings(g);
    REQUIRE(pms.matchings.size() == 6);
    for (const auto& pm : pms.matchings) {
        auto del = delete_edges(g, pm.edges);
        auto oc = odd_components(del.graph, VertexSet::empty_set(10));
        CHECK(oc.components.size() == 2);
        CHECK(oc.count == 2);
        for (Vertex v = 0; v < 10; ++v)
            CHECK(del.graph.degree(v) == 2);
        for (const auto& comp : oc.components)
            CHECK(comp.size() == 5);
    }
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity_at_least(petersen_graph(), 3));
    CHECK_FALSE(vertex_connectivity_at_least(path_graph(3), 2));
    CHECK(vertex_connectivity_at_least(complete_graph(4), 3));
    CHECK_FALSE(vertex_connectivity_at_least(complete_graph(4), 4)); // n > k fails
    CHECK_FALSE(vertex_connectivity_at_least(two_triangles_bridge(), 2));
    CHECK(vertex_connectivity_at_least(two_triangles_bridge(), 1));
}

TEST_CASE("vertex sets") {
    VertexSet x(6, {0, 1, 2});
    CHECK(x.odd());
    CHECK(x.nontrivial());
    CHECK(x.complement().members() == std::vector<Vertex>{3, 4, 5});
    CHECK_FALSE(VertexSet(6, {0}).nontrivial());
    CHECK_FALSE(VertexSet(6, {0, 1, 2, 3, 4}).nontrivial());
    CHECK_THROWS_AS(VertexSet(3, {3}), GraphError);
}
