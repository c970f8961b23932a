#include "contractia/constructive_search.hpp"

#include <algorithm>
#include <sstream>

#include "contractia/connectivity.hpp"

namespace contractia {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string quad_string(const Quadruple& q) {
    return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) +
           "," + std::to_string(q[3]) + ")";
}

}  // namespace

int delta_threshold(int k) {
    if (k < 5) throw InvalidArgument("delta_threshold is defined for k >= 5, got " + std::to_string(k));
    return floor_div(2 * k + 1, 3) + 2;
}

int level_slack(int k) { return floor_div(k - 5, 3); }

std::string to_string(LemmaCase c) {
    switch (c) {
        case LemmaCase::cycle_remainder: return "cycle-remainder";
        case LemmaCase::long_pendant_part: return "long-pendant-part";
        case LemmaCase::short_pendant_parts: return "short-pendant-parts";
    }
    return "unknown";
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::base_oracle: return "base-oracle";
        case CaseTag::extend_once: return "extend-once";
        case CaseTag::case1_cycle: return "case1-cycle";
        case CaseTag::case21_pendant5: return "case2.1-pendant5";
        case CaseTag::case221_pendant4: return "case2.2.1-pendant4";
        case CaseTag::fallback_exhaustive_c: return "fallback-exhaustive-C";
        case CaseTag::fallback_oracle: return "fallback-oracle";
    }
    return "unknown";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::constructive: return "constructive";
        case Method::oracle: return "oracle";
    }
    return "unknown";
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::budget_exceeded: return "budget";
    }
    return "unknown";
}

bool PendantStats::degree_bounds_hold() const {
    const int bound = k - c - 2;
    return f1 + f2 >= bound && f1 + f3 >= bound && e1 + e2 >= bound && e1 + e3 >= bound;
}

bool SearchResult::used_tag(CaseTag tag) const {
    return std::any_of(levels.begin(), levels.end(),
                       [tag](const LevelRecord& r) { return r.tag == tag; });
}

SelectionTrace select_common_neighbor(const Graph& g, VertexSet w, const Quadruple& quad) {
    VertexSet quad_set;
    for (Vertex v : quad) {
        if (v < 0 || v >= g.order() || w.contains(v)) {
            throw InvalidArgument("exchange vertex " + std::to_string(v) + " must lie outside W");
        }
        quad_set.insert(v);
    }
    if (quad_set.size() != 4) throw InvalidArgument("exchange vertices " + quad_string(quad) + " repeat");
    if (!g.has_edge(quad[0], quad[1])) {
        throw LemmaConditionError(1, "v1 v2 = " + std::to_string(quad[0]) + " " +
                                         std::to_string(quad[1]) + " is not an edge");
    }

    SelectionTrace trace;
    trace.quad = quad;
    trace.candidates = g.neighbors(quad[2]) & g.neighbors(quad[3]) & w;
    trace.forbidden = w - neighbors_of_set(g, VertexSet{quad[0], quad[1]});
    if (trace.forbidden == w) {
        throw NoRoutingTarget("no vertex of W is adjacent to {v1, v2}");
    }
    if (trace.candidates.size() <= trace.forbidden.size()) {
        throw LemmaConditionError(3, "|C| = " + std::to_string(trace.candidates.size()) +
                                         " does not exceed |F| = " +
                                         std::to_string(trace.forbidden.size()));
    }

    // Breadth-first layers inside G(W) from the non-forbidden vertices.
    std::array<int, VertexSet::kMaxVertices> dist{};
    dist.fill(-1);
    VertexSet layer = w - trace.forbidden;
    VertexSet seen = layer;
    for (int d = 0; !layer.empty(); ++d) {
        VertexSet next;
        for (Vertex v : layer) {
            dist[v] = d;
            next |= g.neighbors(v);
        }
        layer = (next & w) - seen;
        seen |= layer;
    }
    for (Vertex f : trace.forbidden) {
        if (dist[f] < 1) throw InternalError("forbidden vertex " + std::to_string(f) + " unreachable in G(W)");
        for (Vertex u : g.neighbors(f) & w) {
            if (dist[u] == dist[f] - 1) {
                trace.path_second.insert(u);
                break;
            }
        }
    }

    VertexSet choices = trace.candidates - trace.path_second;
    if (choices.empty()) throw InternalError("every candidate lies on a forbidden-vertex path");
    trace.chosen = choices.first();
    trace.result = (w.without(trace.chosen)) | VertexSet{quad[0], quad[1]};
    return trace;
}

SelectionTrace lemma4_extend(const Graph& g, VertexSet w, const Quadruple& quad, bool cross_check) {
    if (!is_contractible(g, w)) {
        throw PreconditionError("lemma4_extend: " + w.to_string() + " is not contractible");
    }
    if (g.order() < w.size() + 4) {
        throw PreconditionError("lemma4_extend: need v(G) >= |W| + 4");
    }
    const VertexSet all = g.vertices();
    const VertexSet remainder = all - w;
    for (Vertex v : quad) {
        if (v < 0 || v >= g.order() || w.contains(v)) {
            throw InvalidArgument("exchange vertex " + std::to_string(v) + " must lie outside W");
        }
        if ((g.neighbors(v) & remainder).size() != 2) {
            throw LemmaConditionError(1, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string((g.neighbors(v) & remainder).size()) +
                                             " in G - W");
        }
    }
    if (VertexSet{quad[0], quad[1], quad[2], quad[3]}.size() != 4) {
        throw InvalidArgument("exchange vertices must be distinct");
    }
    if (!g.has_edge(quad[0], quad[1])) {
        throw LemmaConditionError(1, "v1=" + std::to_string(quad[0]) + " and v2=" + std::to_string(quad[1]) +
                                         " are not adjacent");
    }
    const VertexSet pair{quad[0], quad[1]};
    for (Vertex x : g.neighbors(quad[2]) & g.neighbors(quad[3]) & w) {
        if (!is_biconnected(g, all - (w.without(x) | pair))) {
            throw LemmaConditionError(2, "exchanging common neighbour " + std::to_string(x) +
                                             " leaves a remainder that is not 2-connected");
        }
    }

    SelectionTrace trace = select_common_neighbor(g, w, quad);
    auto exchange_works = [&](Vertex x) { return is_contractible(g, w.without(x) | pair); };

    if (cross_check) {
        int valid = 0;
        for (Vertex x : trace.candidates - trace.path_second) valid += exchange_works(x) ? 1 : 0;
        trace.valid_outside_path_second = valid;
    }
    if (is_contractible(g, trace.result)) return trace;

    for (Vertex x : trace.candidates) {
        if (exchange_works(x)) {
            trace.fallback_choice = x;
            trace.result = w.without(x) | pair;
            return trace;
        }
    }
    throw InternalError("no common neighbour of " + std::to_string(quad[2]) + " and " +
                        std::to_string(quad[3]) + " yields a contractible exchange");
}

PendantStats case222_stats(const Graph& g, VertexSet w, const Part& a, const Part& b) {
    for (const Part* p : {&a, &b}) {
        if (!p->is_pendant || p->length() != 4 || p->interior.size() != 2) {
            throw PreconditionError("case222_stats: " + p->vertices.to_string() +
                                    " is not a pendant 4-vertex part");
        }
    }
    const Vertex u1 = a.interior.first();
    const Vertex u2 = a.interior.without(u1).first();
    const Vertex w1 = b.interior.first();
    const Vertex w2 = b.interior.without(w1).first();
    const VertexSet nu1 = g.neighbors(u1) & w;
    const VertexSet nu2 = g.neighbors(u2) & w;
    const VertexSet nw1 = g.neighbors(w1) & w;
    const VertexSet nw2 = g.neighbors(w2) & w;

    PendantStats s;
    s.f1 = (nu1 & nu2).size();
    s.f2 = (nu1 - nu2).size();
    s.f3 = (nu2 - nu1).size();
    s.e1 = (nw1 & nw2).size();
    s.e2 = (nw1 - nw2).size();
    s.e3 = (nw2 - nw1).size();
    s.k = w.size() + 1;
    s.c = level_slack(s.k);
    return s;
}

namespace {

// r_0 is the smallest vertex, r_1 its smaller neighbour.
std::vector<Vertex> cycle_order(const Graph& g, VertexSet cycle) {
    std::vector<Vertex> order;
    Vertex prev = -1;
    Vertex cur = cycle.first();
    while (static_cast<int>(order.size()) < cycle.size()) {
        order.push_back(cur);
        VertexSet next = g.neighbors(cur) & cycle;
        if (prev >= 0) next.erase(prev);
        prev = cur;
        cur = next.first();
    }
    return order;
}

// Interior of a pendant cycle part as the path walked away from `start`.
std::vector<Vertex> interior_path_from(const Graph& g, const Part& part, Vertex start) {
    std::vector<Vertex> path;
    VertexSet remaining = part.interior;
    Vertex cur = start;
    while (!remaining.empty()) {
        VertexSet next = g.neighbors(cur) & remaining;
        if (next.size() != 1) {
            throw InternalError("interior of pendant part " + part.vertices.to_string() +
                                " is not a path from " + std::to_string(start));
        }
        cur = next.first();
        path.push_back(cur);
        remaining.erase(cur);
    }
    return path;
}

std::string state_dump(const Graph& g, VertexSet w, const std::vector<Part>& pendant) {
    std::ostringstream out;
    out << "W=" << w.to_string() << " pendant=[";
    for (const Part& p : pendant) {
        out << p.vertices.to_string() << " int=" << p.interior.to_string() << " N=[";
        for (Vertex v : p.interior) out << v << ":" << (g.neighbors(v) & w).to_string() << " ";
        out << "] ";
    }
    out << "]";
    return out.str();
}

}  // namespace

StepOutcome step_from_maximal(const Graph& g, VertexSet w, bool cross_check) {
    if (extend_once(g, w)) {
        throw PreconditionError("step_from_maximal: " + w.to_string() + " is not maximal");
    }
    const VertexSet remainder = g.vertices() - w;
    if (remainder.size() < 4) {
        throw PreconditionError("step_from_maximal: G - W has fewer than 4 vertices");
    }
    const int k = w.size() + 1;
    const int c = level_slack(k);
    const bool under_hypotheses = k >= 5 && g.min_degree() >= k - c && g.order() >= k + 3;

    if (is_simple_cycle(g, remainder)) {
        const std::vector<Vertex> r = cycle_order(g, remainder);
        const int m = static_cast<int>(r.size());
        auto at = [&](int i) { return r[((i % m) + m) % m]; };
        if (under_hypotheses) {
            for (int i = 0; i < m; ++i) {
                int common = (g.neighbors(at(i)) & g.neighbors(at(i + 3)) & w).size();
                int missed = (w - neighbors_of_set(g, VertexSet{at(i + 1), at(i + 2)})).size();
                if (common < c + 2 || missed > c + 1) {
                    throw InternalError("cycle counting bound fails at index " + std::to_string(i) +
                                        ": common=" + std::to_string(common) +
                                        " missed=" + std::to_string(missed));
                }
            }
        }
        for (int i = 0; i < m; ++i) {
            Quadruple quad{at(i + 1), at(i + 2), at(i), at(i + 3)};
            try {
                SelectionTrace t = lemma4_extend(g, w, quad, cross_check);
                return {t.result, LemmaCase::cycle_remainder, t};
            } catch (const LemmaConditionError&) {
            } catch (const NoRoutingTarget&) {
            }
        }
        throw InternalError("no cycle index admits the exchange for W=" + w.to_string());
    }

    const Decomposition d = decompose(g, remainder);
    const std::vector<Part> pendant = classify_pendant(d);
    if (pendant.size() < 2) {
        throw InternalError("G - W has " + std::to_string(pendant.size()) +
                            " pendant parts; " + state_dump(g, w, pendant));
    }
    for (const Part& p : pendant) {
        if (!p.is_cycle || p.length() < 4 || p.boundary.size() != 2) {
            throw InternalError("pendant part " + p.vertices.to_string() +
                                " is not a cycle of length >= 4 with a 2-vertex boundary");
        }
    }

    for (size_t ai = 0; ai < pendant.size(); ++ai) {
        const Part& a = pendant[ai];
        if (a.length() < 5) continue;
        VertexSet others;
        for (size_t bi = 0; bi < pendant.size(); ++bi) {
            if (bi != ai) others |= pendant[bi].interior;
        }
        const Vertex r0 = a.boundary.first();
        const Vertex s0 = a.boundary.without(r0).first();
        for (Vertex start : {r0, s0}) {
            const std::vector<Vertex> path = interior_path_from(g, a, start);
            for (Vertex u : others) {
                Quadruple quad{path[0], path[1], path[2], u};
                try {
                    SelectionTrace t = lemma4_extend(g, w, quad, cross_check);
                    return {t.result, LemmaCase::long_pendant_part, t};
                } catch (const LemmaConditionError&) {
                } catch (const NoRoutingTarget&) {
                }
            }
        }
    }
    for (const Part& p : pendant) {
        if (p.length() != 4) throw InternalError("pendant part " + p.vertices.to_string() + " has no exchange");
    }

    auto count_in_w = [&](Vertex x, Vertex y) { return (g.neighbors(x) & g.neighbors(y) & w).size(); };
    auto missed_by = [&](Vertex x, Vertex y) { return (w - neighbors_of_set(g, VertexSet{x, y})).size(); };
    bool orientation_found = false;
    for (size_t ai = 0; ai < pendant.size(); ++ai) {
        for (size_t bi = ai + 1; bi < pendant.size(); ++bi) {
            const Vertex u1 = pendant[ai].interior.first();
            const Vertex u2 = pendant[ai].interior.without(u1).first();
            const Vertex w1 = pendant[bi].interior.first();
            const Vertex w2 = pendant[bi].interior.without(w1).first();
            std::vector<Quadruple> quads;
            if (count_in_w(w1, w2) > missed_by(u1, u2)) quads.push_back({u1, u2, w1, w2});
            if (count_in_w(u1, u2) > missed_by(w1, w2)) quads.push_back({w1, w2, u1, u2});
            for (const Quadruple& quad : quads) {
                orientation_found = true;
                try {
                    SelectionTrace t = lemma4_extend(g, w, quad, cross_check);
                    return {t.result, LemmaCase::short_pendant_parts, t};
                } catch (const LemmaConditionError&) {
                } catch (const NoRoutingTarget&) {
                }
            }
        }
    }
    if (!orientation_found) {
        PendantStats stats = case222_stats(g, w, pendant[0], pendant[1]);
        throw UnreachableCase("no pendant pair admits the exchange; " + state_dump(g, w, pendant),
                              stats);
    }
    throw InternalError("pendant pairs satisfy the counting condition but no exchange works; " +
                        state_dump(g, w, pendant));
}

bool search_hypotheses_hold(const Graph& g, int k) {
    return k >= 5 && g.order() >= k + 3 && g.min_degree() >= delta_threshold(k);
}

namespace {

SearchStatus from_oracle(OracleStatus s) {
    switch (s) {
        case OracleStatus::found: return SearchStatus::found;
        case OracleStatus::none: return SearchStatus::none;
        case OracleStatus::budget_exceeded: return SearchStatus::budget_exceeded;
    }
    return SearchStatus::none;
}

void run_oracle(const Graph& g, int k, const SearchOptions& options, CaseTag tag,
                std::string note, SearchResult& result) {
    OracleResult o = oracle_find(g, k, k, options.oracle);
    result.status = from_oracle(o.status);
    result.set = o.set;
    LevelRecord rec;
    rec.level = k;
    rec.tag = tag;
    rec.note = std::move(note);
    result.levels.push_back(std::move(rec));
}

CaseTag tag_for(LemmaCase c) {
    switch (c) {
        case LemmaCase::cycle_remainder: return CaseTag::case1_cycle;
        case LemmaCase::long_pendant_part: return CaseTag::case21_pendant5;
        case LemmaCase::short_pendant_parts: return CaseTag::case221_pendant4;
    }
    return CaseTag::fallback_exhaustive_c;
}

void run_constructive(const Graph& g, int k, const SearchOptions& options, SearchResult& result) {
    OracleResult base = oracle_find(g, 4, 4, options.oracle);
    if (base.status != OracleStatus::found) {
        throw PreconditionError("no 4-contractible base set (" + to_string(base.status) + ")");
    }
    VertexSet w = *base.set;
    LevelRecord base_rec;
    base_rec.level = 4;
    base_rec.tag = CaseTag::base_oracle;
    result.levels.push_back(base_rec);

    for (int level = 5; level <= k; ++level) {
        LevelRecord rec;
        rec.level = level;
        if (std::optional<Vertex> x = extend_once(g, w)) {
            w.insert(*x);
            rec.tag = CaseTag::extend_once;
        } else {
            rec.maximal_set = w;
            if (options.check_lemmas && !is_simple_cycle(g, g.vertices() - w)) {
                rec.structure = check_structure_lemmas(g, w);
            }
            StepOutcome step = step_from_maximal(g, w, options.cross_check || options.check_lemmas);
            rec.lemma_case = step.lemma_case;
            rec.tag = step.selection.fallback_choice ? CaseTag::fallback_exhaustive_c
                                                     : tag_for(step.lemma_case);
            rec.selection = step.selection;
            w = step.set;
        }
        if (w.size() != level || !is_contractible(g, w)) {
            throw InternalError("level " + std::to_string(level) + " produced a bad set " + w.to_string());
        }
        if (options.check_lemmas) {
            rec.oracle_agrees = oracle_find(g, level, level, options.oracle).status == OracleStatus::found;
        }
        result.levels.push_back(std::move(rec));
    }
    result.status = SearchStatus::found;
    result.set = w;
}

}  // namespace

SearchResult find_k_contractible(const Graph& g, int k, const SearchOptions& options) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    if (!is_k_connected(g, 3)) throw PreconditionError("find_k_contractible: G is not 3-connected");

    SearchResult result;
    result.k = k;
    result.hypotheses_hold = search_hypotheses_hold(g, k);

    if (options.method == Method::oracle || k <= 4) {
        if (options.method == Method::constructive) {
            throw PreconditionError("constructive search needs k >= 5");
        }
        run_oracle(g, k, options, CaseTag::base_oracle, "", result);
    } else if (!result.hypotheses_hold) {
        if (options.method == Method::constructive) {
            throw PreconditionError("constructive search hypotheses do not hold for k=" +
                                    std::to_string(k));
        }
        run_oracle(g, k, options, CaseTag::fallback_oracle, "hypotheses do not hold", result);
    } else if (options.method == Method::constructive) {
        run_constructive(g, k, options, result);
    } else {
        try {
            run_constructive(g, k, options, result);
        } catch (const Error& e) {
            run_oracle(g, k, options, CaseTag::fallback_oracle, e.what(), result);
        }
    }

    if (result.set && (result.set->size() != k || !is_contractible(g, *result.set))) {
        throw InternalError("search returned an invalid set " + result.set->to_string());
    }
    return result;
}

}  // namespace contractia
