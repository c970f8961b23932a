#include "contractia/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <set>

#include "contractia/connectivity.hpp"
#include "contractia/graph6.hpp"

namespace contractia {

namespace {

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr std::array kFamilyNames{
    FamilyName{Family::complete, "complete"},
    FamilyName{Family::complete_bipartite, "complete_bipartite"},
    FamilyName{Family::cycle, "cycle"},
    FamilyName{Family::wheel, "wheel"},
    FamilyName{Family::circulant, "circulant"},
    FamilyName{Family::prism, "prism"},
    FamilyName{Family::theta, "theta"},
    FamilyName{Family::petersen, "petersen"},
    FamilyName{Family::icosahedron, "icosahedron"},
};

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

void require_arity(const FamilySpec& spec, size_t lo, size_t hi) {
    require(spec.params.size() >= lo && spec.params.size() <= hi,
            "family " + spec.to_string() + " has the wrong number of parameters");
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    const size_t colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    auto it = std::find_if(kFamilyNames.begin(), kFamilyNames.end(),
                           [&](const FamilyName& f) { return f.name == name; });
    require(it != kFamilyNames.end(), "unknown graph family '" + std::string(name) + "'");
    FamilySpec spec;
    spec.family = it->family;
    if (colon == std::string_view::npos) return spec;

    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const size_t comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        require(ec == std::errc{} && ptr == item.data() + item.size() && !item.empty(),
                "bad family parameter '" + std::string(item) + "'");
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out;
    for (const FamilyName& f : kFamilyNames) {
        if (f.family == family) out = std::string(f.name);
    }
    for (size_t i = 0; i < params.size(); ++i) {
        out += (i == 0 ? ':' : ',');
        out += std::to_string(params[i]);
    }
    return out;
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
    require(a >= 1 && b >= 1, "complete bipartite graph needs both sides non-empty");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(a + b, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph wheel_graph(int n) {
    require(n >= 4, "wheel needs n >= 4");
    std::vector<Edge> edges;
    const int rim = n - 1;
    for (int i = 0; i < rim; ++i) {
        edges.emplace_back(0, 1 + i);
        edges.emplace_back(1 + i, 1 + (i + 1) % rim);
    }
    return Graph::from_edges(n, edges);
}

Graph circulant_graph(int n, const std::vector<int>& jumps) {
    require(n >= 3, "circulant needs n >= 3");
    require(!jumps.empty(), "circulant needs at least one jump");
    std::vector<Edge> edges;
    for (int j : jumps) {
        require(j >= 1 && 2 * j <= n, "circulant jump " + std::to_string(j) + " outside 1..n/2");
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + j) % n);
    }
    return Graph::from_edges(n, edges);
}

Graph prism_graph(int n) {
    require(n >= 3, "prism needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
        edges.emplace_back(n + v, n + (v + 1) % n);
        edges.emplace_back(v, n + v);
    }
    return Graph::from_edges(2 * n, edges);
}

Graph theta_graph(int internal_a, int internal_b, int internal_c) {
    const std::array<int, 3> internal{internal_a, internal_b, internal_c};
    require(std::all_of(internal.begin(), internal.end(), [](int x) { return x >= 0; }),
            "theta path lengths must be non-negative");
    require(std::count(internal.begin(), internal.end(), 0) <= 1,
            "at most one theta path may be the direct edge");
    std::vector<Edge> edges;
    Vertex next = 2;
    for (int len : internal) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph::from_edges(next, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

Graph icosahedron_graph() {
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        const Vertex up = 1 + i;
        const Vertex low = 6 + i;
        edges.emplace_back(0, up);
        edges.emplace_back(up, 1 + (i + 1) % 5);
        edges.emplace_back(low, 6 + (i + 1) % 5);
        edges.emplace_back(11, low);
        edges.emplace_back(up, low);
        edges.emplace_back(up, 6 + (i + 1) % 5);
    }
    return Graph::from_edges(12, edges);
}

Graph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::complete: require_arity(spec, 1, 1); return complete_graph(p[0]);
        case Family::complete_bipartite:
            require_arity(spec, 2, 2);
            return complete_bipartite_graph(p[0], p[1]);
        case Family::cycle: require_arity(spec, 1, 1); return cycle_graph(p[0]);
        case Family::wheel: require_arity(spec, 1, 1); return wheel_graph(p[0]);
        case Family::circulant:
            require_arity(spec, 2, VertexSet::kMaxVertices);
            return circulant_graph(p[0], std::vector<int>(p.begin() + 1, p.end()));
        case Family::prism: require_arity(spec, 1, 1); return prism_graph(p[0]);
        case Family::theta: require_arity(spec, 3, 3); return theta_graph(p[0], p[1], p[2]);
        case Family::petersen: require_arity(spec, 0, 0); return petersen_graph();
        case Family::icosahedron: require_arity(spec, 0, 0); return icosahedron_graph();
    }
    throw InvalidArgument("unknown family");
}

bool is_complete_bipartite(const Graph& g, int a, int b) {
    if (g.order() != a + b || g.edge_count() != a * b || !is_connected(g)) return false;
    // Connected and (a, b)-bipartite with a*b edges forces completeness.
    VertexSet side = VertexSet::single(0);
    VertexSet frontier = side;
    VertexSet other;
    bool on_side = true;
    VertexSet seen = side;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next -= seen;
        seen |= next;
        on_side = !on_side;
        (on_side ? side : other) |= next;
        frontier = next;
    }
    for (Vertex v : side) {
        if (g.neighbors(v).intersects(side)) return false;
    }
    for (Vertex v : other) {
        if (g.neighbors(v).intersects(other)) return false;
    }
    return (side.size() == a && other.size() == b) || (side.size() == b && other.size() == a);
}

RandomGraph random_connected(int n, double edge_prob, std::uint64_t seed, int connectivity,
                             int max_attempts) {
    require(n >= 1 && n <= VertexSet::kMaxVertices, "random graph size out of range");
    require(edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability outside [0, 1]");
    // mt19937_64 output is fully specified; the coin avoids library-specific
    // distribution implementations.
    std::mt19937_64 rng(seed);
    auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < edge_prob; };
    RandomGraph out;
    for (out.attempts = 1; out.attempts <= max_attempts; ++out.attempts) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (coin()) edges.emplace_back(u, v);
            }
        }
        Graph g = Graph::from_edges(n, edges);
        if (is_k_connected(g, connectivity)) {
            out.graph = std::move(g);
            return out;
        }
    }
    throw Error("no " + std::to_string(connectivity) + "-connected sample after " +
                std::to_string(max_attempts) + " attempts (n=" + std::to_string(n) +
                ", p=" + std::to_string(edge_prob) + ")");
}

RandomGraph random_3_connected(int n, double edge_prob, std::uint64_t seed, int max_attempts) {
    return random_connected(n, edge_prob, seed, 3, max_attempts);
}

std::vector<CorpusGraph> default_corpus() {
    std::vector<CorpusGraph> out;
    std::set<std::string> seen;
    auto add_family = [&](const FamilySpec& spec) {
        Graph g = generate(spec);
        if (!is_k_connected(g, 3)) return;
        if (!seen.insert(to_graph6(g)).second) return;
        out.push_back({spec.to_string(), std::move(g)});
    };

    for (int n = 4; n <= 14; ++n) add_family({Family::complete, {n}});
    for (int a = 3; a <= 7; ++a) {
        for (int b = a; a + b <= 14; ++b) add_family({Family::complete_bipartite, {a, b}});
    }
    for (int n = 4; n <= 14; ++n) add_family({Family::wheel, {n}});
    for (int n = 3; n <= 7; ++n) add_family({Family::prism, {n}});
    const std::vector<std::vector<int>> jump_sets{
        {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 2, 3, 4}, {1, 2, 3, 4, 5},
    };
    for (int n = 6; n <= 14; ++n) {
        for (const auto& jumps : jump_sets) {
            if (2 * jumps.back() > n) continue;
            std::vector<int> params{n};
            params.insert(params.end(), jumps.begin(), jumps.end());
            add_family({Family::circulant, params});
        }
    }
    add_family({Family::petersen, {}});
    add_family({Family::icosahedron, {}});

    // Graphs meeting the degree hypotheses with a maximal set whose remainder
    // has pendant ears, found by targeted random search. Random corpora
    // almost never reach these shapes.
    for (const char* text : {"PST?GC`O??_@_@~~~z~~n~~{", "P]OGg_@_H??@O@~m~|~n~~vS", "O[CII?`_A?n|n~|~~b]~x",
                             "Jl`Nv~|~^{_", "Ir`N~~||W", "KrQICD~~~}~x"}) {
        if (seen.insert(text).second) out.push_back({std::string("pendant:") + text, parse_graph6(text)});
    }

    constexpr std::array kProbabilities{0.5, 0.65, 0.8, 0.9};
    for (int n = 8; n <= 13; ++n) {
        for (int i = 0; i < 200; ++i) {
            const double p = kProbabilities[i % kProbabilities.size()];
            const std::uint64_t seed = static_cast<std::uint64_t>(n) * 1000 + i;
            out.push_back({"random3:" + std::to_string(n) + "," + std::to_string(p).substr(0, 4) +
                               ",seed=" + std::to_string(seed),
                           random_3_connected(n, p, seed).graph});
        }
    }
    return out;
}

}  // namespace contractia
