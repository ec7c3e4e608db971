#include "parpart/graph.hpp"
#include "parpart/synth.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace parpart;
using namespace testutil;

TEST_CASE("degrees on small fixtures") {
    Graph k5 = complete_graph(5);
    CHECK(min_degree(k5) == 4);
    CHECK(max_degree(k5) == 4);

    Graph edgeless(5);
    CHECK(max_degree(edgeless) == 0);
    CHECK(min_degree(edgeless) == 0);

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(min_degree(path) == 1);
    CHECK(max_degree(path) == 2);

    Graph empty(0);
    CHECK_THROWS_AS(min_degree(empty), std::domain_error);
    CHECK_THROWS_AS(max_degree(empty), std::domain_error);
}

TEST_CASE("degree sums equal twice the edge count") {
    SplitMix64 rng(11);
    for (int round = 0; round < 20; ++round) {
        const int m = 2 + static_cast<int>(rng.next_below(30));
        Graph g = random_graph(m, 40, rng);
        long long sum = 0;
        for (Vertex v = 0; v < m; ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
        for (Vertex v = 0; v < m; ++v) CHECK(g.degree(v) < m);
    }
}

TEST_CASE("is_clique") {
    Graph g(4);
    g.add_edge(0, 1);
    CHECK(is_clique(g, {2}));          // no pairs
    CHECK(is_clique(g, {0, 1}));
    CHECK_FALSE(is_clique(g, {0, 2})); // non-adjacent pair
    CHECK(is_clique(complete_graph(6), {0, 2, 3, 5}));
    CHECK_THROWS_AS(is_clique(g, {0, 7}), std::out_of_range);
}

TEST_CASE("is_clique agrees with exhaustive pair checking") {
    SplitMix64 rng(12);
    for (int round = 0; round < 50; ++round) {
        const int m = 3 + static_cast<int>(rng.next_below(10));
        Graph g = random_graph(m, 60, rng);
        std::vector<Vertex> s;
        for (Vertex v = 0; v < m && s.size() < 8; ++v)
            if (rng.next_below(2)) s.push_back(v);
        bool expected = true;
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (!g.has_edge(s[i], s[j])) expected = false;
        CHECK(is_clique(g, s) == expected);
    }
}

TEST_CASE("edge list is canonical and round-trips") {
    SplitMix64 rng(13);
    Graph g = random_graph(17, 35, rng);
    const auto edges = g.edge_list();
    for (size_t i = 0; i < edges.size(); ++i) {
        CHECK(edges[i].first < edges[i].second);
        if (i > 0) CHECK(edges[i - 1] < edges[i]);
    }
    Graph h = Graph::from_edges(17, edges);
    CHECK(h.edge_list() == edges);
}

TEST_CASE("triple disjointness report") {
    auto make = [](int m, std::vector<Edge> e1, std::vector<Edge> e2, std::vector<Edge> e3) {
        return TripleGraphSystem(Graph::from_edges(m, e1), Graph::from_edges(m, e2),
                                 Graph::from_edges(m, e3));
    };
    auto direct = make(3, {{0, 1}}, {{0, 1}}, {});
    auto v1 = assert_triple_disjointness(direct);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].edge == Edge{0, 1});
    CHECK(v1[0].other_graph == 2);

    CHECK(assert_triple_disjointness(make(3, {{0, 1}}, {{1, 2}}, {})).empty());
    // only E1-overlap is forbidden
    CHECK(assert_triple_disjointness(make(3, {}, {{0, 1}}, {{0, 1}})).empty());
}

TEST_CASE("cached degree summaries stay consistent") {
    Graph g1 = complete_graph(6);
    TripleGraphSystem sys(g1, Graph(6), Graph(6));
    CHECK(sys.delta1() == 5);
    CHECK(sys.delta2_max() == 0);
    CHECK(sys.delta3_max() == 0);
}
