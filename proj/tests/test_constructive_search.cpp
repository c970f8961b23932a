#include <doctest.h>

#include "contractia/constructive_search.hpp"
#include "contractia/generators.hpp"
#include "contractia/graph6.hpp"
#include "contractia/subsets.hpp"
#include "oracles.hpp"

using namespace contractia;

namespace {

bool naive_contractible(const Graph& g, VertexSet w) {
    auto m = oracle::matrix_of(g);
    auto ids = oracle::ids_of(w);
    return oracle::connected(m, ids) && oracle::two_connected(m, oracle::minus(oracle::all_ids(g.order()), ids));
}

// C5 on 0..4 plus the path 5-6-7-8; attach[i] lists the cycle neighbours of
// path vertex 5 + i.
Graph cycle_and_path(const std::array<std::vector<int>, 4>& attach) {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}};
    for (int i = 0; i < 4; ++i) {
        for (int r : attach[i]) edges.emplace_back(r, 5 + i);
    }
    return Graph::from_edges(9, edges);
}

const VertexSet kPath{5, 6, 7, 8};

struct Fixture {
    const char* graph6;
    VertexSet w;
    LemmaCase expected;
};

// Maximal sets in graphs meeting the search hypotheses for k = |W| + 1.
const Fixture kFixtures[] = {
    {"PST?GC`O??_@_@~~~z~~n~~{", {13, 14, 15, 16}, LemmaCase::long_pendant_part},
    {"P]OGg_@_H??@O@~m~|~n~~vS", {13, 14, 15, 16}, LemmaCase::long_pendant_part},
    {"O[CII?`_A?n|n~|~~b]~x", {11, 12, 13, 14, 15}, LemmaCase::long_pendant_part},
    {"Jl`Nv~|~^{_", {6, 7, 8, 9, 10}, LemmaCase::short_pendant_parts},
    {"Ir`N~~||W", {6, 7, 8, 9}, LemmaCase::short_pendant_parts},
    {"KrQICD~~~}~x", {8, 9, 10, 11}, LemmaCase::short_pendant_parts},
};

}  // namespace

TEST_CASE("thresholds") {
    CHECK(delta_threshold(5) == 5);
    CHECK(delta_threshold(6) == 6);
    CHECK(delta_threshold(7) == 7);
    CHECK(delta_threshold(8) == 7);
    CHECK(delta_threshold(11) == 9);
    CHECK_THROWS_AS(delta_threshold(4), InvalidArgument);
    CHECK(level_slack(5) == 0);
    CHECK(level_slack(7) == 0);
    CHECK(level_slack(8) == 1);
    CHECK(level_slack(11) == 2);
}

TEST_CASE("select_common_neighbor with nothing forbidden") {
    Graph g = cycle_and_path({{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}}});
    SelectionTrace t = select_common_neighbor(g, kPath, {1, 2, 0, 3});
    CHECK(t.candidates == kPath);
    CHECK(t.forbidden.empty());
    CHECK(t.path_second.empty());
    CHECK(t.chosen == 5);
    CHECK(t.result == VertexSet{1, 2, 6, 7, 8});

    SelectionTrace e = lemma4_extend(g, kPath, {1, 2, 0, 3}, true);
    CHECK(e.result == VertexSet{1, 2, 6, 7, 8});
    CHECK(naive_contractible(g, e.result));
    CHECK(e.valid_outside_path_second == 4);
    CHECK_FALSE(e.fallback_choice.has_value());
}

TEST_CASE("select_common_neighbor routes forbidden vertices") {
    // 5 and 8 miss {1, 2}.
    Graph g = cycle_and_path({{{0, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 3, 4}}});
    const Quadruple quad{1, 2, 0, 3};
    SelectionTrace t = select_common_neighbor(g, kPath, quad);

    // Expected values from the naive distance oracle.
    auto m = oracle::matrix_of(g);
    auto d = oracle::distances(m, oracle::ids_of(kPath));
    VertexSet candidates, forbidden, second;
    for (Vertex x : kPath) {
        if (m[x][0] && m[x][3]) candidates.insert(x);
        if (!m[x][1] && !m[x][2]) forbidden.insert(x);
    }
    const VertexSet targets = kPath - forbidden;
    auto dist_to_targets = [&](Vertex v) {
        int best = -1;
        for (Vertex s : targets) {
            if (d[v][s] >= 0 && (best < 0 || d[v][s] < best)) best = d[v][s];
        }
        return best;
    };
    for (Vertex f : forbidden) {
        for (Vertex u : kPath) {
            if (m[f][u] && dist_to_targets(u) == dist_to_targets(f) - 1) {
                second.insert(u);
                break;
            }
        }
    }
    CHECK(t.candidates == candidates);
    CHECK(t.forbidden == forbidden);
    CHECK(t.forbidden == VertexSet{5, 8});
    CHECK(t.path_second == second);
    CHECK(t.path_second == VertexSet{6, 7});
    const Vertex expected_x = (candidates - second).first();
    CHECK(t.chosen == expected_x);
    CHECK(t.result == (kPath.without(expected_x) | VertexSet{1, 2}));
    CHECK(naive_contractible(g, lemma4_extend(g, kPath, quad).result));
}

TEST_CASE("exchange preconditions") {
    Graph none_adjacent = cycle_and_path({{{0, 3, 4}, {0, 3, 4}, {0, 3, 4}, {0, 3, 4}}});
    CHECK_THROWS_AS(select_common_neighbor(none_adjacent, kPath, {1, 2, 0, 3}), NoRoutingTarget);

    Graph no_common = cycle_and_path({{{0, 1, 2}, {1, 2, 3}, {1, 4}, {2, 4}}});
    try {
        select_common_neighbor(no_common, kPath, {1, 2, 0, 3});
        FAIL("expected a counting failure");
    } catch (const LemmaConditionError& e) {
        CHECK(e.condition() == 3);
    }

    Graph full = cycle_and_path({{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}}});
    try {
        lemma4_extend(full, kPath, {0, 2, 1, 3});
        FAIL("expected an adjacency failure");
    } catch (const LemmaConditionError& e) {
        CHECK(e.condition() == 1);
    }
    CHECK_THROWS_AS(lemma4_extend(full, VertexSet{5, 7}, {1, 2, 0, 3}), PreconditionError);
    CHECK_THROWS_AS(lemma4_extend(full, kPath, {1, 2, 1, 3}), InvalidArgument);

    // With W = {6, 7, 8}, vertex 5 sits on the cycle side and gives every
    // cycle vertex degree 3 in G - W.
    try {
        lemma4_extend(full, VertexSet{6, 7, 8}, {1, 2, 0, 3});
        FAIL("expected a degree failure");
    } catch (const LemmaConditionError& e) {
        CHECK(e.condition() == 1);
    }
}

TEST_CASE("cycle remainder wraps around a 4-cycle") {
    // C4 on 0..3, K4 on 4..7, everything in W joined to the whole cycle.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    for (Vertex x = 4; x < 8; ++x) {
        for (Vertex y = x + 1; y < 8; ++y) edges.emplace_back(x, y);
        for (Vertex r = 0; r < 4; ++r) edges.emplace_back(r, x);
    }
    Graph g = Graph::from_edges(8, edges);
    const VertexSet w{4, 5, 6, 7};
    REQUIRE(is_contractible(g, w));
    REQUIRE_FALSE(extend_once(g, w));

    StepOutcome out = step_from_maximal(g, w, true);
    CHECK(out.lemma_case == LemmaCase::cycle_remainder);
    CHECK(out.set.size() == 5);
    CHECK(naive_contractible(g, out.set));
    const Quadruple& q = out.selection.quad;
    CHECK(g.has_edge(q[0], q[1]));
    // r_i and r_{i+3} are neighbours only because indices wrap.
    CHECK(g.has_edge(q[2], q[3]));
}

TEST_CASE("pendant fixtures step without fallback") {
    for (const Fixture& f : kFixtures) {
        CAPTURE(f.graph6);
        Graph g = parse_graph6(f.graph6);
        REQUIRE(is_k_connected(g, 3));
        REQUIRE(search_hypotheses_hold(g, f.w.size() + 1));
        REQUIRE(is_contractible(g, f.w));
        REQUIRE_FALSE(extend_once(g, f.w));
        CHECK(check_structure_lemmas(g, f.w).ok());

        StepOutcome out = step_from_maximal(g, f.w, true);
        CHECK(out.lemma_case == f.expected);
        CHECK(out.set.size() == f.w.size() + 1);
        CHECK(naive_contractible(g, out.set));
        CHECK_FALSE(out.selection.fallback_choice.has_value());
        REQUIRE(out.selection.valid_outside_path_second.has_value());
        CHECK(*out.selection.valid_outside_path_second >= 1);
    }
}

TEST_CASE("two short ears with sparse attachments are unreachable") {
    // K4 on 0..3, ears 0-4-5-1 and 2-6-7-3, W the path 8-9-10-11 with one
    // contact per ear vertex.
    Graph g = Graph::from_edges(12, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                     {0, 4}, {4, 5}, {5, 1}, {2, 6}, {6, 7}, {7, 3},
                                     {8, 9}, {9, 10}, {10, 11},
                                     {8, 4}, {8, 0}, {9, 5}, {9, 1}, {10, 6}, {10, 2}, {11, 7}, {11, 3}});
    const VertexSet w{8, 9, 10, 11};
    REQUIRE(is_k_connected(g, 3));
    REQUIRE(is_contractible(g, w));
    REQUIRE_FALSE(extend_once(g, w));
    CHECK_FALSE(search_hypotheses_hold(g, 5));

    auto pendant = classify_pendant(decompose(g, g.vertices() - w));
    REQUIRE(pendant.size() == 2);
    PendantStats s = case222_stats(g, w, pendant[0], pendant[1]);
    CHECK(s.f1 == 0);
    CHECK(s.f2 == 1);
    CHECK(s.f3 == 1);
    CHECK(s.e1 == 0);
    CHECK(s.e2 == 1);
    CHECK(s.e3 == 1);
    CHECK(s.k == 5);
    CHECK(s.c == 0);
    CHECK(s.weighted_sum() == 4);
    CHECK(s.weighted_sum() <= 2 * s.k - 2);
    CHECK_FALSE(s.degree_bounds_hold());

    try {
        step_from_maximal(g, w);
        FAIL("expected UnreachableCase");
    } catch (const UnreachableCase& e) {
        CHECK(e.stats().weighted_sum() == 4);
    }

    // A non-pendant or longer part is rejected.
    Part wrong = pendant[0];
    wrong.is_pendant = false;
    CHECK_THROWS_AS(case222_stats(g, w, wrong, pendant[1]), PreconditionError);
}

TEST_CASE("find_k_contractible") {
    SearchOptions constructive;
    constructive.method = Method::constructive;
    constructive.cross_check = true;
    for (const Graph& g : {complete_bipartite_graph(5, 5), icosahedron_graph()}) {
        REQUIRE(search_hypotheses_hold(g, 5));
        SearchResult r = find_k_contractible(g, 5, constructive);
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.set->size() == 5);
        CHECK(naive_contractible(g, *r.set));
        CHECK(r.hypotheses_hold);
        CHECK(r.levels.front().tag == CaseTag::base_oracle);
        CHECK(r.levels.front().level == 4);
        CHECK_FALSE(r.used_tag(CaseTag::fallback_oracle));
        CHECK_FALSE(r.used_tag(CaseTag::fallback_exhaustive_c));

        SearchResult again = find_k_contractible(g, 5, constructive);
        CHECK(again.set == r.set);
        REQUIRE(again.levels.size() == r.levels.size());
        for (size_t i = 0; i < r.levels.size(); ++i) CHECK(again.levels[i].tag == r.levels[i].tag);
    }

    SearchResult k34 = find_k_contractible(complete_bipartite_graph(3, 4), 4);
    CHECK(k34.status == SearchStatus::none);
    CHECK_FALSE(k34.set.has_value());
    CHECK(k34.levels.front().tag == CaseTag::base_oracle);

    // Hypotheses fail for the wheel, so only the automatic method answers.
    Graph w9 = wheel_graph(9);
    CHECK_THROWS_AS(find_k_contractible(w9, 5, constructive), PreconditionError);
    SearchResult wr = find_k_contractible(w9, 5);
    CHECK_FALSE(wr.hypotheses_hold);
    CHECK((wr.status == SearchStatus::found) == oracle_find(w9, 5, 5).set.has_value());

    CHECK_THROWS_AS(find_k_contractible(cycle_graph(6), 2), PreconditionError);
    CHECK(to_string(CaseTag::case221_pendant4) == "case2.2.1-pendant4");
    CHECK(to_string(CaseTag::fallback_exhaustive_c) == "fallback-exhaustive-C");
}

TEST_CASE("maximal sets in hypothesis graphs always step") {
    std::vector<CorpusEntry> corpus = read_corpus(CONTRACTIA_CORPUS);
    int stepped = 0;
    for (const CorpusEntry& e : corpus) {
        const Graph& g = e.graph;
        for (int k = 5; k <= 8; ++k) {
            if (!search_hypotheses_hold(g, k)) continue;
            for_each_subset(g.vertices(), k - 1, [&](VertexSet w) {
                if (!is_contractible(g, w) || extend_once(g, w)) return true;
                StepOutcome out = step_from_maximal(g, w, true);
                CHECK(out.set.size() == k);
                CHECK(is_contractible(g, out.set));
                CHECK_FALSE(out.selection.fallback_choice.has_value());
                ++stepped;
                return true;
            });
        }
    }
    CHECK(stepped > 0);
    MESSAGE("maximal sets stepped: " << stepped);
}
