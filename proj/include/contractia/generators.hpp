#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "contractia/graph.hpp"

namespace contractia {

enum class Family {
    complete,            // n
    complete_bipartite,  // a, b
    cycle,               // n
    wheel,               // n (hub 0, rim 1..n-1)
    circulant,           // n, jump...
    prism,               // n (C_n x K_2, 2n vertices)
    theta,               // internal vertex counts of the three a-b paths
    petersen,
    icosahedron,
};

/// A named deterministic graph family, written "family:p1,p2,..." in text.
struct FamilySpec {
    Family family = Family::complete;
    std::vector<int> params;

    /// Parses e.g. "complete_bipartite:3,4" or "petersen".
    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

/// Throws InvalidArgument for bad parameter counts or sizes.
Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cycle_graph(int n);
Graph wheel_graph(int n);
Graph circulant_graph(int n, const std::vector<int>& jumps);
Graph prism_graph(int n);
/// Vertices 0 and 1 are the branch vertices; path i uses internal[i] new vertices.
Graph theta_graph(int internal_a, int internal_b, int internal_c);
Graph petersen_graph();
Graph icosahedron_graph();

/// Whether g is isomorphic to K_{a,b}.
bool is_complete_bipartite(const Graph& g, int a, int b);

struct RandomGraph {
    Graph graph;
    int attempts = 0;
};

inline constexpr int kDefaultRandomAttempts = 10'000;

/// Rejection-samples G(n, p) until the graph is `connectivity`-connected.
/// Deterministic for a given seed. Throws Error when attempts run out.
RandomGraph random_connected(int n, double edge_prob, std::uint64_t seed, int connectivity,
                             int max_attempts = kDefaultRandomAttempts);
RandomGraph random_3_connected(int n, double edge_prob, std::uint64_t seed,
                               int max_attempts = kDefaultRandomAttempts);

struct CorpusGraph {
    std::string label;
    Graph graph;
};

/// The checked-in test corpus: 3-connected family members up to 14
/// vertices, classic graphs, six graphs with pendant-ear maximal sets, and
/// 200 seeded random 3-connected graphs for each n in 8..13.
std::vector<CorpusGraph> default_corpus();

}  // namespace contractia
