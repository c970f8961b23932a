#include "contractia/report.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <thread>

#include "contractia/connectivity.hpp"
#include "contractia/generators.hpp"

namespace contractia {

Json to_json(VertexSet s) { return s.to_vector(); }

Json to_json(const SelectionTrace& t) {
    Json j;
    j["v"] = std::vector<Vertex>(t.quad.begin(), t.quad.end());
    j["candidates"] = to_json(t.candidates);
    j["forbidden"] = to_json(t.forbidden);
    j["path_second"] = to_json(t.path_second);
    j["chosen"] = t.chosen;
    j["result"] = to_json(t.result);
    if (t.valid_outside_path_second) j["valid_outside_path_second"] = *t.valid_outside_path_second;
    if (t.fallback_choice) j["fallback_choice"] = *t.fallback_choice;
    return j;
}

Json to_json(const LevelRecord& r) {
    Json j;
    j["level"] = r.level;
    j["case"] = to_string(r.tag);
    if (r.lemma_case) j["lemma_case"] = to_string(*r.lemma_case);
    if (r.maximal_set) j["maximal_set"] = to_json(*r.maximal_set);
    if (r.selection) j["selection"] = to_json(*r.selection);
    if (r.structure) {
        j["structure"] = {
            {"pendant_parts", r.structure->pendant_parts.size()},
            {"violations", r.structure->violations},
        };
    }
    if (r.oracle_agrees) j["oracle_agrees"] = *r.oracle_agrees;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const Decomposition& d) {
    Json j;
    j["single_cutsets"] = Json::array();
    for (const Cutset& s : d.single_cutsets) j["single_cutsets"].push_back(to_json(s.vertices));
    j["parts"] = Json::array();
    for (const Part& p : d.parts) {
        j["parts"].push_back({
            {"vertices", to_json(p.vertices)},
            {"interior", to_json(p.interior)},
            {"boundary", to_json(p.boundary)},
            {"is_cycle", p.is_cycle},
            {"is_pendant", p.is_pendant},
        });
    }
    Json nodes = Json::array();
    for (const BlockTree::Node& n : d.tree.nodes()) {
        nodes.push_back({{"kind", n.kind == BlockTree::NodeKind::cutset ? "cutset" : "part"},
                         {"index", n.index}});
    }
    Json edges = Json::array();
    for (auto [a, b] : d.tree.edges()) edges.push_back({a, b});
    j["tree"] = {{"nodes", nodes}, {"edges", edges}};
    return j;
}

namespace {

std::vector<std::string> classify_violations(const Graph& g, int k, const SearchResult& result,
                                             const SweepConfig& config, bool& known_exception) {
    std::vector<std::string> v;
    known_exception = false;
    if (result.hypotheses_hold && config.method != Method::oracle) {
        if (result.status != SearchStatus::found || result.used_tag(CaseTag::fallback_oracle)) {
            v.push_back("constructive-path-failed");
        }
    }
    for (const LevelRecord& r : result.levels) {
        const std::string at = " at level " + std::to_string(r.level);
        if (r.tag == CaseTag::fallback_exhaustive_c) v.push_back("selection-fallback" + at);
        if (r.selection && r.selection->valid_outside_path_second == 0) {
            v.push_back("no-valid-choice-outside-path-second" + at);
        }
        if (r.structure) {
            for (const std::string& s : r.structure->violations) v.push_back("structure" + at + ": " + s);
        }
        if (r.oracle_agrees && !*r.oracle_agrees) v.push_back("oracle-disagrees" + at);
    }
    if (k == 4 && g.order() >= 7 && result.status == SearchStatus::none) {
        if (is_complete_bipartite(g, 3, 4)) {
            known_exception = true;
        } else {
            v.push_back("missing-4-contractible-set");
        }
    }
    if (config.check_lemmas && result.status == SearchStatus::none) {
        OracleResult second = oracle_find_by_combinations(g, k, k, config.oracle);
        if (second.status == OracleStatus::found) v.push_back("oracle-orders-disagree");
    }
    return v;
}

}  // namespace

SweepRecord sweep_record(const CorpusEntry& entry, int k, const SweepConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const Graph& g = entry.graph;
    SweepRecord rec;
    Json& j = rec.json;
    j["input_line"] = entry.line_no;
    j["graph6"] = entry.text;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["delta"] = g.min_degree();
    j["connectivity"] = g.order() >= 2 ? vertex_connectivity(g) : 0;
    j["k"] = k;
    j["method"] = to_string(config.method);

    try {
        SearchOptions options;
        options.method = config.method;
        options.check_lemmas = config.check_lemmas;
        options.cross_check = config.check_lemmas;
        options.oracle = config.oracle;
        SearchResult result = find_k_contractible(g, k, options);
        rec.outcome = to_string(result.status);
        j["hypotheses"] = result.hypotheses_hold;
        j["set"] = result.set ? to_json(*result.set) : Json();
        Json trace = Json::array();
        for (const LevelRecord& r : result.levels) trace.push_back(to_json(r));
        j["case_trace"] = trace;
        bool known_exception = false;
        rec.violations = classify_violations(g, k, result, config, known_exception);
        if (known_exception) j["known_exception"] = "K3,4 has no 4-contractible set";
    } catch (const Error& e) {
        rec.outcome = "error";
        j["error"] = e.what();
    }
    j["outcome"] = rec.outcome;
    j["violations"] = rec.violations;
    if (config.timing) {
        j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    }
    return rec;
}

void ReportSummary::add(const SweepRecord& r) {
    ++records;
    if (r.outcome == "found") ++found;
    else if (r.outcome == "none") ++none;
    else if (r.outcome == "budget") ++budget;
    else ++error;
    violations += static_cast<std::int64_t>(r.violations.size());
    if (r.json.contains("elapsed_ms")) total_ms += r.json["elapsed_ms"].get<std::int64_t>();
}

Json ReportSummary::to_json(bool timing) const {
    Json s = {
        {"records", records}, {"found", found}, {"none", none},
        {"budget", budget},   {"error", error}, {"violations", violations},
    };
    if (timing) s["total_ms"] = total_ms;
    return Json{{"summary", s}};
}

ReportSummary run_sweep(const std::vector<CorpusEntry>& corpus, const SweepConfig& config,
                        std::ostream& out) {
    struct Task {
        const CorpusEntry* entry;
        int k;
    };
    std::vector<Task> tasks;
    for (const CorpusEntry& e : corpus) {
        for (int k = config.kmin; k <= config.kmax; ++k) tasks.push_back({&e, k});
    }

    std::vector<std::optional<SweepRecord>> done(tasks.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < tasks.size(); i = next++) {
            SweepRecord r = sweep_record(*tasks[i].entry, tasks[i].k, config);
            std::lock_guard lock(mutex);
            done[i] = std::move(r);
            ready.notify_all();
        }
    };
    const int jobs = std::max(1, config.jobs);
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

    ReportSummary summary;
    for (size_t i = 0; i < tasks.size(); ++i) {
        SweepRecord r;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return done[i].has_value(); });
            r = std::move(*done[i]);
            done[i].reset();
        }
        out << r.json.dump() << '\n';
        summary.add(r);
    }
    out << summary.to_json(config.timing).dump() << '\n';
    return summary;
}

}  // namespace contractia
