#include <doctest.h>

#include <random>

#include "contractia/generators.hpp"
#include "contractia/graph.hpp"

using namespace contractia;

TEST_CASE("vertex set algebra matches a reference set") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        std::uint64_t a_bits = rng(), b_bits = rng();
        VertexSet a = VertexSet::from_bits(a_bits), b = VertexSet::from_bits(b_bits);
        std::vector<Vertex> av = a.to_vector();
        CHECK(static_cast<int>(av.size()) == a.size());
        for (Vertex v = 0; v < 64; ++v) {
            bool in_a = (a_bits >> v) & 1, in_b = (b_bits >> v) & 1;
            CHECK(a.contains(v) == in_a);
            CHECK((a | b).contains(v) == (in_a || in_b));
            CHECK((a & b).contains(v) == (in_a && in_b));
            CHECK((a - b).contains(v) == (in_a && !in_b));
        }
        CHECK(std::is_sorted(av.begin(), av.end()));
        CHECK(lex_less(a, b) == std::lexicographical_compare(av.begin(), av.end(),
                                                            b.to_vector().begin(), b.to_vector().end()));
    }
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet::range(0).empty());
    CHECK(VertexSet{3, 1, 3}.to_string() == "{1,3}");
}

TEST_CASE("build_graph") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    for (Vertex v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);

    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::from_edges(65, {}), InvalidArgument);

    Graph dup = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
    CHECK(dup.has_edge(1, 0));
}

TEST_CASE("delete_set and induced") {
    Graph k5 = complete_graph(5);
    Subgraph rest = delete_set(k5, {0, 1});
    CHECK(rest.graph == complete_graph(3));
    CHECK(rest.to_original == std::vector<Vertex>{2, 3, 4});
    CHECK(rest.from_original[0] == -1);
    CHECK(rest.lift(VertexSet{0, 2}) == VertexSet{2, 4});

    Subgraph path = delete_set(cycle_graph(5), {0});
    CHECK(path.graph.edge_count() == 3);
    CHECK(path.graph.order() == 4);
    CHECK(path.graph.min_degree() == 1);

    Subgraph isolated = delete_set(complete_bipartite_graph(3, 4), {0, 1, 2});
    CHECK(isolated.graph.order() == 4);
    CHECK(isolated.graph.edge_count() == 0);

    CHECK(induced(k5, {0, 1, 2}).graph == complete_graph(3));
    Subgraph pair = induced(cycle_graph(5), {0, 2});
    CHECK(pair.graph.edge_count() == 0);
    CHECK(induced(k5, k5.vertices()).graph == k5);

    CHECK_THROWS_AS(delete_set(k5, {7}), InvalidArgument);
    CHECK_THROWS_AS(induced(k5, {5}), InvalidArgument);
}

TEST_CASE("neighbors_of_set, edges_between, is_connected_set") {
    Graph c5 = cycle_graph(5);
    Graph k34 = complete_bipartite_graph(3, 4);
    CHECK(neighbors_of_set(c5, {0}) == VertexSet{1, 4});
    CHECK(neighbors_of_set(k34, {0}) == VertexSet{3, 4, 5, 6});
    CHECK(neighbors_of_set(c5, c5.vertices()).empty());
    CHECK(neighbors_of_set(c5, {}).empty());

    CHECK(edges_between(k34, {0, 1, 2}, {3, 4, 5, 6}) == 12);
    CHECK(edges_between(c5, {0}, {2, 3}) == 0);
    CHECK(edges_between(c5, {0}, {1, 4}) == 2);
    CHECK_THROWS_AS(edges_between(c5, {0, 1}, {1, 2}), InvalidArgument);

    CHECK(is_connected_set(c5, {0, 1, 2}));
    CHECK_FALSE(is_connected_set(c5, {0, 2}));
    CHECK(is_connected_set(c5, {3}));
    CHECK_FALSE(is_connected_set(c5, {}));
}

TEST_CASE("graph invariants hold on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 2 + static_cast<int>(rng() % 20);
        std::vector<Edge> edges;
        for (int i = 0; i < 3 * n; ++i) {
            Vertex u = rng() % n, v = rng() % n;
            if (u != v) edges.emplace_back(u, v);
        }
        Graph g = Graph::from_edges(n, edges);
        int degree_sum = 0;
        for (Vertex v = 0; v < n; ++v) {
            degree_sum += g.degree(v);
            CHECK_FALSE(g.has_edge(v, v));
            CHECK(neighbors_of_set(g, VertexSet::single(v)).size() == g.degree(v));
            for (Vertex u : g.neighbors(v)) CHECK(g.has_edge(u, v));
        }
        CHECK(degree_sum == 2 * g.edge_count());

        VertexSet r = VertexSet::from_bits(rng()) & g.vertices();
        VertexSet r1 = VertexSet::from_bits(rng()) & (g.vertices() - r);
        CHECK(edges_between(g, r, r1) == edges_between(g, r1, r));

        // G - R and G(V - R) agree edge for edge after remapping.
        Subgraph del = delete_set(g, r);
        Subgraph ind = induced(g, g.vertices() - r);
        CHECK(del.graph == ind.graph);
        for (auto [a, b] : del.graph.edges()) CHECK(g.has_edge(del.to_original[a], del.to_original[b]));
        int inside = 0;
        for (auto [a, b] : g.edges()) inside += (!r.contains(a) && !r.contains(b)) ? 1 : 0;
        CHECK(inside == del.graph.edge_count());
    }
}
