#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "contractia/constructive_search.hpp"
#include "contractia/graph6.hpp"

namespace contractia {

using Json = nlohmann::json;

Json to_json(VertexSet s);
Json to_json(const SelectionTrace& t);
Json to_json(const LevelRecord& r);
Json to_json(const Decomposition& d);

struct SweepConfig {
    int kmin = 5;
    int kmax = 5;
    Method method = Method::automatic;
    bool check_lemmas = false;
    /// Emit elapsed_ms fields; off by default so reports are reproducible.
    bool timing = false;
    int jobs = 1;
    OracleOptions oracle;
};

/// One (graph, k) line of a search report.
struct SweepRecord {
    Json json;
    /// "found", "none", "budget" or "error".
    std::string outcome;
    /// Properties guaranteed by the theory that this record contradicts.
    std::vector<std::string> violations;
};

/// Runs the search for one graph and k and classifies the outcome.
SweepRecord sweep_record(const CorpusEntry& entry, int k, const SweepConfig& config);

struct ReportSummary {
    std::int64_t records = 0;
    std::int64_t found = 0;
    std::int64_t none = 0;
    std::int64_t budget = 0;
    std::int64_t error = 0;
    std::int64_t violations = 0;
    std::int64_t total_ms = 0;

    void add(const SweepRecord& r);
    Json to_json(bool timing) const;
};

/// Runs every (entry, k) pair and writes one JSON line per record followed
/// by a summary line. Records are computed on `config.jobs` threads but
/// written in input order.
ReportSummary run_sweep(const std::vector<CorpusEntry>& corpus, const SweepConfig& config,
                        std::ostream& out);

}  // namespace contractia
