// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "contractia/constructive_search.hpp"
#include "contractia/generators.hpp"
#include "contractia/graph6.hpp"
#include "contractia/report.hpp"
#include "contractia/subsets.hpp"
#include "oracles.hpp"

using namespace contractia;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> failures{};
    std::map<std::string, long> counts{};

    void fail(const std::string& why) {
        pass = false;
        if (failures.size() < 10) failures.push_back(why);
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

bool naive_contractible(const Graph& g, VertexSet w) {
    auto m = oracle::matrix_of(g);
    auto ids = oracle::ids_of(w);
    return oracle::connected(m, ids) && oracle::two_connected(m, oracle::minus(oracle::all_ids(g.order()), ids));
}

std::string where(const CorpusEntry& e, int k = 0) {
    std::string s = "line " + std::to_string(e.line_no) + " (" + e.text + ")";
    if (k > 0) s += " k=" + std::to_string(k);
    return s;
}

// The dual-order and verification bookkeeping shared by every oracle call.
struct OracleLedger {
    long nones = 0;
    long positives = 0;
    std::vector<std::string> problems;

    OracleResult find(const Graph& g, int lo, int hi, const std::string& ctx) {
        OracleResult r = oracle_find(g, lo, hi);
        if (r.status == OracleStatus::none) {
            ++nones;
            OracleResult second = oracle_find_by_combinations(g, lo, hi);
            if (second.status != OracleStatus::none) problems.push_back(ctx + ": combination order finds a set");
        } else if (r.status == OracleStatus::found) {
            note_positive(g, *r.set, ctx);
        } else {
            problems.push_back(ctx + ": budget exceeded");
        }
        return r;
    }
    void note_positive(const Graph& g, VertexSet w, const std::string& ctx) {
        ++positives;
        if (!naive_contractible(g, w)) problems.push_back(ctx + ": " + w.to_string() + " is not contractible");
    }
};

void check_block_tree(const Graph& g, VertexSet within, Criterion& c, const std::string& ctx) {
    Decomposition d = decompose(g, within);
    c.expect(d.tree.is_tree(), ctx + ": block tree is not a tree");
    for (int leaf : d.tree.leaves()) {
        c.expect(d.tree.nodes()[leaf].kind == BlockTree::NodeKind::part, ctx + ": leaf is a cutset");
    }
    VertexSet interiors;
    for (const Part& p : d.parts) {
        c.expect(!interiors.intersects(p.interior), ctx + ": interiors overlap");
        interiors |= p.interior;
    }
    c.expect(interiors == within - d.cutset_vertices(), ctx + ": interiors do not partition V - U(single cutsets)");
}

}  // namespace

int main() {
    const std::vector<CorpusEntry> corpus = read_corpus(CONTRACTIA_CORPUS);
    OracleLedger ledger;
    std::vector<Criterion> results;

    // 1. K3,4 is the only graph on 7..12 vertices without a 4-contractible set.
    {
        Criterion c{1, "4-contractible sets exist on 7..12 vertices except in K3,4"};
        OracleResult k34 = ledger.find(complete_bipartite_graph(3, 4), 4, 4, "K3,4");
        c.expect(k34.status == OracleStatus::none, "K3,4 has a 4-contractible set");
        for (const CorpusEntry& e : corpus) {
            const int n = e.graph.order();
            if (n < 7 || n > 12) continue;
            ++c.counts["graphs"];
            OracleResult r = ledger.find(e.graph, 4, 4, where(e, 4));
            const bool exception = is_complete_bipartite(e.graph, 3, 4);
            if (exception) ++c.counts["k34"];
            c.expect((r.status == OracleStatus::found) != exception, where(e, 4) + ": unexpected " + to_string(r.status));
        }
        c.expect(c.counts["k34"] == 1, "corpus should hold K3,4 exactly once");
        results.push_back(c);
    }

    // 2-5 share one sweep over every hypothesis-satisfying (graph, k).
    Criterion c2{2, "constructive search succeeds under the degree hypotheses, k = 5..8"};
    Criterion c3{3, "the rule-chosen exchange vertex always works, with a valid one outside P"};
    Criterion c4{4, "structure checks on maximal sets report no violations"};
    c3.counts["sweep exchanges"] = 0;
    c4.counts["sweep maximal sets checked"] = 0;
    Criterion c5{5, "block tree is a tree with part leaves and partitioning interiors"};
    for (const CorpusEntry& e : corpus) {
        const Graph& g = e.graph;
        for (int k = 5; k <= 8; ++k) {
            if (!search_hypotheses_hold(g, k)) continue;
            ++c2.counts["instances"];
            SearchOptions o;
            o.method = Method::constructive;
            o.check_lemmas = true;
            o.cross_check = true;
            SearchResult r;
            try {
                r = find_k_contractible(g, k, o);
            } catch (const Error& ex) {
                c2.fail(where(e, k) + ": " + ex.what());
                continue;
            }
            c2.expect(r.status == SearchStatus::found, where(e, k) + ": " + to_string(r.status));
            c2.expect(!r.used_tag(CaseTag::fallback_oracle), where(e, k) + ": fallback-oracle");
            if (r.set) {
                c2.expect(r.set->size() == k && naive_contractible(g, *r.set), where(e, k) + ": bad set");
                ledger.note_positive(g, *r.set, where(e, k));
                check_block_tree(g, g.vertices() - *r.set, c5, where(e, k) + " final remainder");
                ++c5.counts["remainders"];
            }
            for (const LevelRecord& lv : r.levels) {
                ++c2.counts[to_string(lv.tag)];
                c3.expect(lv.tag != CaseTag::fallback_exhaustive_c, where(e, k) + ": fallback-exhaustive-C");
                if (lv.selection) {
                    ++c3.counts["sweep exchanges"];
                    c3.expect(!lv.selection->fallback_choice, where(e, k) + ": selected x failed");
                    c3.expect(lv.selection->valid_outside_path_second.value_or(0) >= 1,
                              where(e, k) + ": no valid x outside P");
                    c3.expect(naive_contractible(g, lv.selection->result), where(e, k) + ": exchange result");
                }
                if (lv.structure) {
                    ++c4.counts["sweep maximal sets checked"];
                    for (const std::string& v : lv.structure->violations) c4.fail(where(e, k) + ": " + v);
                }
                if (lv.oracle_agrees) c2.expect(*lv.oracle_agrees, where(e, k) + ": oracle disagrees");
                if (lv.maximal_set) {
                    ++c5.counts["remainders"];
                    check_block_tree(g, g.vertices() - *lv.maximal_set, c5, where(e, k) + " maximal remainder");
                }
            }
        }
    }
    c2.expect(c2.counts["instances"] > 0, "no hypothesis-satisfying instances in the corpus");

    // The sweep mostly extends its base directly, so on top of the sets it
    // meets, every maximal contractible set in the corpus is checked: all
    // sizes up to 10 vertices, and sizes k - 1 for k = 5..8 in graphs meeting
    // the hypotheses. Those in hypothesis graphs are also stepped.
    for (const CorpusEntry& e : corpus) {
        const Graph& g = e.graph;
        const int n = g.order();
        for (int size = 1; size + 3 <= n; ++size) {
            const int k = size + 1;
            const bool hyp = k >= 5 && k <= 8 && search_hypotheses_hold(g, k);
            if (n > 10 && !hyp) continue;
            for_each_subset(g.vertices(), size, [&](VertexSet w) {
                if (!is_contractible(g, w) || extend_once(g, w)) return true;
                const std::string ctx = where(e, k) + " W=" + w.to_string();
                if (!is_simple_cycle(g, g.vertices() - w)) {
                    ++c4.counts["all maximal sets checked"];
                    for (const std::string& v : check_structure_lemmas(g, w).violations) c4.fail(ctx + ": " + v);
                }
                check_block_tree(g, g.vertices() - w, c5, ctx);
                ++c5.counts["remainders"];
                if (!hyp) return true;
                try {
                    StepOutcome out = step_from_maximal(g, w, true);
                    ++c3.counts["all maximal steps " + to_string(out.lemma_case)];
                    c3.expect(!out.selection.fallback_choice, ctx + ": selected x failed");
                    c3.expect(out.selection.valid_outside_path_second.value_or(0) >= 1, ctx + ": no valid x outside P");
                    c3.expect(out.set.size() == k && naive_contractible(g, out.set), ctx + ": exchange result");
                } catch (const Error& ex) {
                    c3.fail(ctx + ": " + ex.what());
                }
                return true;
            });
        }
    }
    for (LemmaCase lc : {LemmaCase::cycle_remainder, LemmaCase::long_pendant_part, LemmaCase::short_pendant_parts}) {
        c3.expect(c3.counts.contains("all maximal steps " + to_string(lc)), "no " + to_string(lc) + " step was exercised");
    }
    c4.expect(c4.counts["all maximal sets checked"] > 0, "no structure check was exercised");
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int n = 3 + static_cast<int>(seed % 7);
        Graph g = random_connected(n, 0.25 + 0.1 * static_cast<double>(seed % 5), 90000 + seed, 2).graph;
        const std::string ctx = "random 2-connected seed " + std::to_string(90000 + seed);
        check_block_tree(g, g.vertices(), c5, ctx);
        std::vector<std::vector<int>> parts;
        for (const Part& p : decompose(g).parts) parts.push_back(p.vertices.to_vector());
        c5.expect(parts == oracle::parts_by_subsets(oracle::matrix_of(g), oracle::all_ids(n)), ctx + ": parts differ");
        ++c5.counts["random graphs"];
    }
    results.push_back(c2);
    results.push_back(c3);
    results.push_back(c4);
    results.push_back(c5);

    // 6. Sets of size 5 or 6 on at least 11 vertices.
    {
        Criterion c{6, "contractible sets of size 5..6 exist on at least 11 vertices"};
        for (const CorpusEntry& e : corpus) {
            if (e.graph.order() < 11) continue;
            ++c.counts["graphs"];
            OracleResult r = ledger.find(e.graph, 5, 6, where(e));
            c.expect(r.status == OracleStatus::found, where(e) + ": " + to_string(r.status));
        }
        c.expect(c.counts["graphs"] > 0, "no corpus graph on 11 or more vertices");
        results.push_back(c);
    }

    // 7. Oracle self-consistency across everything above.
    {
        Criterion c{7, "both oracle orders agree on every none, every positive verifies"};
        for (const std::string& p : ledger.problems) c.fail(p);
        c.counts["nones"] = ledger.nones;
        c.counts["positives"] = ledger.positives;
        results.push_back(c);
    }

    // 8. Reports are byte-identical across runs.
    {
        Criterion c{8, "two full sweeps produce identical reports"};
        SweepConfig config;
        config.kmin = 5;
        config.kmax = 8;
        config.check_lemmas = true;
        config.jobs = 4;
        std::ostringstream a, b;
        ReportSummary sa = run_sweep(corpus, config, a);
        run_sweep(corpus, config, b);
        c.expect(a.str() == b.str(), "reports differ");
        c.expect(sa.violations == 0, std::to_string(sa.violations) + " violations in the sweep");
        c.expect(sa.error == 0, std::to_string(sa.error) + " error records in the sweep");
        c.counts["records"] = sa.records;
        c.counts["bytes"] = static_cast<long>(a.str().size());
        results.push_back(c);
    }

    bool all = true;
    for (const Criterion& c : results) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
        if (!c.counts.empty()) {
            std::cout << " [";
            bool first = true;
            for (const auto& [key, value] : c.counts) {
                std::cout << (first ? "" : ", ") << key << "=" << value;
                first = false;
            }
            std::cout << "]";
        }
        std::cout << '\n';
        for (const std::string& f : c.failures) std::cout << "    " << f << '\n';
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
