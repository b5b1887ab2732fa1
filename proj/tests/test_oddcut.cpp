#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rgraph/graphs.hpp"
#include "rgraph/oddcut.hpp"

#include "oracles.hpp"

using namespace rgraph;

TEST_CASE("Gomory-Hu tree on named graphs") {
    SECTION("doubled K2 gives a single link of flow 2") {
        auto tree = gomory_hu_tree(digon(2));
        REQUIRE(tree.links.size() == 1);
        CHECK(tree.links[0].flow == 2);
    }
    SECTION("K4: every link has flow 3") {
        auto tree = gomory_hu_tree(complete_graph(4));
        REQUIRE(tree.links.size() == 3);
        for (const auto& link : tree.links)
            CHECK(link.flow == 3);
    }
    SECTION("Petersen: every link has flow 3") {
        auto tree = gomory_hu_tree(petersen_graph());
        REQUIRE(tree.links.size() == 9);
        for (const auto& link : tree.links)
            CHECK(link.flow == 3);
    }
    SECTION("disconnected input is rejected") {
        Multigraph two(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(gomory_hu_tree(two), GraphError);
    }
}

TEST_CASE("Gomory-Hu path minima equal brute-force min cuts") {
    std::mt19937 rng(404);
    std::vector<Multigraph> graphs{complete_graph(4), prism_graph(), two_triangles_bridge(),
                                   digon(3), petersen_graph()};
    for (int trial = 0; trial < 20; ++trial)
        graphs.push_back(oracles::random_connected_multigraph(rng, 3 + static_cast<int>(rng() % 6),
                                                              static_cast<int>(rng() % 8)));
    for (const auto& g : graphs) {
        auto tree = gomory_hu_tree(g);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v)
                REQUIRE(gomory_hu_min_cut(tree, u, v) == oracles::min_cut_value(g, u, v));
    }
}

TEST_CASE("minimum odd cut") {
    SECTION("K2") {
        auto cut = min_odd_cut(Multigraph(2, {{0, 1}}));
        CHECK(cut.size == 1);
        CHECK(cut.side.members() == std::vector<Vertex>{0});
    }
    SECTION("Petersen has minimum odd cut 3") {
        auto cut = min_odd_cut(petersen_graph());
        CHECK(cut.size == 3);
        CHECK(cut.side.odd());
        CHECK(boundary(petersen_graph(), cut.side).size() == 3);
    }
    SECTION("odd vertex count is a parity error") {
        try {
            min_odd_cut(complete_graph(3));
            FAIL("expected parity error");
        } catch (const GraphError& e) {
            CHECK(e.kind() == ErrorKind::Parity);
        }
    }
}

TEST_CASE("minimum odd cut agrees with the brute-force oracle") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 * (2 + static_cast<int>(rng() % 5)); // 4..12 even
        auto g = oracles::random_connected_multigraph(rng, n, static_cast<int>(rng() % (n + 4)));
        auto cut = min_odd_cut(g);
        REQUIRE(cut.size == oracles::min_odd_cut_size(g));
        REQUIRE(boundary(g, cut.side).size() == cut.size);
        REQUIRE(cut.side.odd());
    }
}

TEST_CASE("r-graph recognition") {
    CHECK(is_r_graph(petersen_graph(), 3).ok);
    CHECK(is_r_graph(complete_bipartite(3, 3), 3).ok);
    CHECK(is_r_graph(complete_graph(4), 3).ok);
    CHECK(is_r_graph(digon(2), 2).ok);
    CHECK(is_r_graph(cycle_graph(6), 2).ok);

    SECTION("a bridged cubic graph fails with the bridge side as witness") {
        auto g = bridged_cubic_graph();
        auto check = is_r_graph(g, 3);
        REQUIRE_FALSE(check.ok);
        REQUIRE(check.witness.has_value());
        CHECK(boundary(g, *check.witness).size() == 1);
    }
    SECTION("clause order: connectivity first, then parity, then degrees") {
        Multigraph two(4, {{0, 1}, {2, 3}});
        CHECK(is_r_graph(two, 1).reason == "disconnected");
        CHECK(is_r_graph(complete_graph(3), 2).reason == "odd vertex count");
        CHECK(is_r_graph(path_graph(4), 1).reason.find("degree") != std::string::npos);
    }
}

TEST_CASE("non-trivial r-cuts") {
    SECTION("prism: a triangle") {
        auto x = find_nontrivial_r_cut(prism_graph(), 3);
        REQUIRE(x.has_value());
        CHECK(x->members() == std::vector<Vertex>{0, 1, 2});
    }
    SECTION("K4 has no non-trivial odd set at all") {
        CHECK_FALSE(find_nontrivial_r_cut(complete_graph(4), 3).has_value());
    }
    SECTION("Petersen: exhaustively absent") {
        CHECK_FALSE(find_nontrivial_r_cut(petersen_graph(), 3).has_value());
    }
    SECTION("K3,3: barrier route finds a cut around a side's component") {
        auto x = find_nontrivial_r_cut(complete_bipartite(3, 3), 3);
        // K3,3 has plenty of size-3 odd cuts, e.g. one side vertex with two
        // others; whatever is returned must verify
        if (x) {
            CHECK(x->odd());
            CHECK(x->nontrivial());
            CHECK(boundary(complete_bipartite(3, 3), *x).size() == 3);
        }
    }
    SECTION("digon family: only trivial odd sets exist") {
        CHECK_FALSE(find_nontrivial_r_cut(digon(3), 3).has_value());
    }
    SECTION("non-r-graph input is a precondition error") {
        CHECK_THROWS_AS(find_nontrivial_r_cut(bridged_cubic_graph(), 3), GraphError);
    }
}

TEST_CASE("classification of the three named r-graphs") {
    auto k33 = classify(complete_bipartite(3, 3), 3);
    CHECK(k33.bipartite);
    CHECK(k33.bicritical == false);
    CHECK(k33.satisfied);

    auto prism = classify(prism_graph(), 3);
    CHECK_FALSE(prism.bipartite);
    CHECK(prism.nontrivial_r_cut);
    CHECK(prism.bicritical);
    CHECK(prism.satisfied);
    REQUIRE(prism.cut_witness.has_value());
    CHECK(prism.cut_witness->boundary == std::vector<EdgeId>{6, 7, 8});

    auto pet = classify(petersen_graph(), 3);
    CHECK_FALSE(pet.bipartite);
    CHECK_FALSE(pet.nontrivial_r_cut);
    CHECK(pet.bicritical);
    CHECK(pet.satisfied);
}

TEST_CASE("K3,3 has a non-trivial 3-cut") {
    // a side vertex plus two non-neighbors forms an odd set with boundary 3?
    // No: verify through the library and via brute force that SOME witness
    // exists, since theta-side barriers yield singleton components here.
    auto g = complete_bipartite(3, 3);
    auto x = find_nontrivial_r_cut(g, 3);
    bool brute = false;
    for (std::uint32_t mask = 1; mask < (1u << 6) && !brute; ++mask) {
        int size = std::popcount(mask);
        if (size % 2 == 0 || size == 1 || size == 5)
            continue;
        auto set = VertexSet::from_mask(6, mask);
        brute = boundary(g, set).size() == 3;
    }
    CHECK(x.has_value() == brute);
}

TEST_CASE("brick recognition") {
    CHECK(is_brick(complete_graph(4)));
    CHECK(is_brick(petersen_graph()));
    CHECK_FALSE(is_brick(complete_bipartite(3, 3)));
    CHECK_FALSE(is_brick(cycle_graph(6)));
}

TEST_CASE("brick theorem on named graphs") {
    CHECK(check_brick_theorem(petersen_graph(), 3));
    CHECK(check_brick_theorem(complete_bipartite(3, 3), 3)); // hypothesis vacuous
    CHECK(check_brick_theorem(prism_graph(), 3));            // cut exists
    CHECK(check_brick_theorem(complete_graph(4), 3));
    CHECK(check_brick_theorem(digon(3), 3));
}

TEST_CASE("contract_side on the prism yields two K4-shaped r-graphs") {
    auto pair = contract_side(prism_graph(), VertexSet(6, {0, 1, 2}));
    for (const Multigraph* side : {&pair.g1, &pair.g2}) {
        CHECK(side->vertex_count() == 4);
        CHECK(side->edge_count() == 6);
        for (Vertex v = 0; v < 4; ++v)
            CHECK(side->degree(v) == 3);
        CHECK(is_r_graph(*side, 3).ok);
    }
    CHECK(pair.cut_map.size() == 3);
    CHECK(pair.g1.degree(pair.contracted_in_g1) == 3);
    CHECK(pair.g2.degree(pair.contracted_in_g2) == 3);
}

TEST_CASE("contract_side on C6 with a path side") {
    auto pair = contract_side(cycle_graph(6), VertexSet(6, {0, 1, 2}));
    CHECK(pair.cut_map.size() == 2);
    CHECK(is_r_graph(pair.g1, 2).ok);
    CHECK(is_r_graph(pair.g2, 2).ok);
    CHECK(pair.g1.degree(pair.contracted_in_g1) == 2);
}

TEST_CASE("contract_side rejects trivial and even sides") {
    CHECK_THROWS_AS(contract_side(complete_graph(4), VertexSet(4, {0})), GraphError);
    CHECK_THROWS_AS(contract_side(cycle_graph(6), VertexSet(6, {0, 1})), GraphError);
}

TEST_CASE("contraction preserves cut structure and r-graph-ness on random r-cuts") {
    // every witness found on the corpus graphs must produce two r-graphs
    for (const auto& [g, r] : {std::pair{prism_graph(), 3}, {cycle_graph(6), 2},
                               {cycle_graph(10), 2}}) {
        auto x = find_nontrivial_r_cut(g, r);
        REQUIRE(x.has_value());
        auto pair = contract_side(g, *x);
        CHECK(static_cast<int>(pair.cut_map.size()) == boundary(g, *x).size());
        CHECK(is_r_graph(pair.g1, r).ok);
        CHECK(is_r_graph(pair.g2, r).ok);
        // cut_map images are genuine edges at the contracted vertices
        for (const auto& img : pair.cut_map) {
            const Edge& e1 = pair.g1.edge(img.in_g1);
            CHECK((e1.u == pair.contracted_in_g1 || e1.v == pair.contracted_in_g1));
            const Edge& e2 = pair.g2.edge(img.in_g2);
            CHECK((e2.u == pair.contracted_in_g2 || e2.v == pair.contracted_in_g2));
        }
    }
}
