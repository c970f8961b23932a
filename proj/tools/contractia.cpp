// contractia: search, verify and decompose contractible vertex sets in
// 3-connected graphs.
//
// Exit codes: 0 success, 1 I/O or internal error, 2 usage, 3 a requested
// set does not exist.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "contractia/connectivity.hpp"
#include "contractia/contractible.hpp"
#include "contractia/generators.hpp"
#include "contractia/graph6.hpp"
#include "contractia/report.hpp"

namespace {

using namespace contractia;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputFlags {
    std::string input;
    std::string family;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
    auto* in = cmd->add_option("--input", flags.input, "graph6 file, one graph per line");
    auto* fam = cmd->add_option("--family", flags.family, "named graph, e.g. complete_bipartite:3,4");
    in->excludes(fam);
}

std::vector<CorpusEntry> load_inputs(const InputFlags& flags) {
    if (!flags.family.empty()) {
        Graph g;
        try {
            g = generate(FamilySpec::parse(flags.family));
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        return {CorpusEntry{1, to_graph6(g), g}};
    }
    if (flags.input.empty()) throw UsageError("one of --input or --family is required");
    return read_corpus(flags.input);
}

OracleOptions oracle_options_from_env() {
    OracleOptions o;
    if (const char* env = std::getenv("CONTRACTIA_BUDGET")) {
        try {
            o.budget = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("CONTRACTIA_BUDGET is not a number: ") + env);
        }
    }
    return o;
}

Method parse_method(const std::string& s) {
    if (s == "auto") return Method::automatic;
    if (s == "constructive") return Method::constructive;
    return Method::oracle;
}

VertexSet parse_set(const std::string& text, int n) {
    VertexSet s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int v = -1;
        try {
            size_t used = 0;
            v = std::stoi(item, &used);
            if (used != item.size()) v = -1;
        } catch (const std::exception&) {
        }
        if (v < 0 || v >= n) throw UsageError("set member '" + item + "' is not a vertex id below " + std::to_string(n));
        s.insert(v);
    }
    if (s.empty()) throw UsageError("--set is empty");
    if (s.size() == n) throw UsageError("--set covers every vertex");
    return s;
}

int run_find(const InputFlags& inputs, int k, const std::string& method, bool check_lemmas, bool timing) {
    SweepConfig config;
    config.kmin = config.kmax = k;
    config.method = parse_method(method);
    config.check_lemmas = check_lemmas;
    config.timing = timing;
    config.oracle = oracle_options_from_env();
    ReportSummary s = run_sweep(load_inputs(inputs), config, std::cout);
    if (s.error > 0 || s.budget > 0) return kExitError;
    return s.none > 0 ? kExitNegative : kExitOk;
}

int run_verify(const InputFlags& inputs, const std::string& set_text) {
    for (const CorpusEntry& e : load_inputs(inputs)) {
        const Graph& g = e.graph;
        const VertexSet w = parse_set(set_text, g.order());
        const ContractibleClause clause = contractibility_clause(g, w);
        Json j = {
            {"input_line", e.line_no},
            {"graph6", e.text},
            {"n", g.order()},
            {"m", g.edge_count()},
            {"delta", g.min_degree()},
            {"connectivity", g.order() >= 2 ? vertex_connectivity(g) : 0},
            {"three_connected", is_k_connected(g, 3)},
            {"set", to_json(w)},
            {"contractible", clause == ContractibleClause::ok},
            {"clause", to_string(clause)},
        };
        std::cout << j.dump() << '\n';
    }
    return kExitOk;
}

int run_decompose(const InputFlags& inputs, const std::string& format) {
    for (const CorpusEntry& e : load_inputs(inputs)) {
        if (!is_biconnected(e.graph)) {
            std::cerr << "line " << e.line_no << ": input graph is not 2-connected\n";
            return kExitError;
        }
        Decomposition d = decompose(e.graph);
        if (format == "dot") {
            std::cout << to_dot(d);
        } else {
            Json j = to_json(d);
            j["input_line"] = e.line_no;
            j["n"] = e.graph.order();
            std::cout << j.dump() << '\n';
        }
    }
    return kExitOk;
}

int run_sweep_cmd(const std::string& corpus, int kmin, int kmax, bool check_lemmas, int jobs,
                  bool timing, const std::string& method) {
    if (kmax < kmin) throw UsageError("--kmax is below --kmin");
    SweepConfig config;
    config.kmin = kmin;
    config.kmax = kmax;
    config.check_lemmas = check_lemmas;
    config.jobs = jobs;
    config.timing = timing;
    config.method = parse_method(method);
    config.oracle = oracle_options_from_env();
    ReportSummary s = run_sweep(read_corpus(corpus), config, std::cout);
    return (s.violations > 0 || s.error > 0) ? kExitError : kExitOk;
}

int run_generate(const std::string& preset, const std::string& family, const std::string& random,
                 int connectivity) {
    if (!family.empty()) {
        try {
            std::cout << to_graph6(generate(FamilySpec::parse(family))) << '\n';
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        return kExitOk;
    }
    if (!random.empty()) {
        // n,p,seed[,count]
        std::stringstream in(random);
        std::string item;
        std::vector<std::string> parts;
        while (std::getline(in, item, ',')) parts.push_back(item);
        if (parts.size() < 3 || parts.size() > 4) throw UsageError("--random expects n,p,seed[,count]");
        int n = 0, count = 1;
        double p = 0;
        std::uint64_t seed = 0;
        try {
            n = std::stoi(parts[0]);
            p = std::stod(parts[1]);
            seed = std::stoull(parts[2]);
            if (parts.size() == 4) count = std::stoi(parts[3]);
        } catch (const std::exception&) {
            throw UsageError("--random expects n,p,seed[,count]");
        }
        for (int i = 0; i < count; ++i) {
            std::cout << to_graph6(random_connected(n, p, seed + i, connectivity).graph) << '\n';
        }
        return kExitOk;
    }
    if (preset != "default") throw UsageError("unknown preset '" + preset + "'");
    std::cout << "# contractia default corpus: 3-connected family members, classics and\n"
                 "# seeded random 3-connected graphs. Regenerate with: contractia generate\n";
    std::string last_group;
    for (const CorpusGraph& c : default_corpus()) {
        std::string group = c.label.substr(0, c.label.find(':'));
        if (group == "random3") group += ":" + c.label.substr(8, c.label.find(',') - 8);
        if (group != last_group) {
            std::cout << "# " << group << '\n';
            last_group = group;
        }
        std::cout << to_graph6(c.graph) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contractible vertex sets in 3-connected graphs"};
    app.require_subcommand(1);

    InputFlags find_in, verify_in, decompose_in;
    int k = 0;
    std::string method = "auto";
    bool check_lemmas = false;
    bool timing = false;
    auto* find = app.add_subcommand("find", "search for a k-contractible set");
    add_input_flags(find, find_in);
    find->add_option("--k", k, "set size")->required()->check(CLI::Range(1, VertexSet::kMaxVertices));
    find->add_option("--method", method, "auto, constructive or oracle")
        ->check(CLI::IsMember({"auto", "constructive", "oracle"}));
    find->add_flag("--check-lemmas", check_lemmas, "check structure lemmas at every level");
    find->add_flag("--timing", timing, "include elapsed_ms fields");

    std::string set_text;
    auto* verify = app.add_subcommand("verify", "test whether a given set is contractible");
    add_input_flags(verify, verify_in);
    verify->add_option("--set", set_text, "comma-separated vertex ids")->required();

    std::string format = "json";
    auto* decomp = app.add_subcommand("decompose", "print single cutsets, parts and block tree");
    add_input_flags(decomp, decompose_in);
    decomp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    std::string corpus;
    int kmin = 5, kmax = 8, jobs = 1;
    std::string sweep_method = "auto";
    bool sweep_lemmas = false;
    bool sweep_timing = false;
    auto* sweep = app.add_subcommand("sweep", "run the search over a corpus for a range of k");
    sweep->add_option("--corpus", corpus, "graph6 corpus file")->required();
    sweep->add_option("--kmin", kmin)->check(CLI::Range(1, VertexSet::kMaxVertices));
    sweep->add_option("--kmax", kmax)->check(CLI::Range(1, VertexSet::kMaxVertices));
    sweep->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    sweep->add_option("--method", sweep_method)->check(CLI::IsMember({"auto", "constructive", "oracle"}));
    sweep->add_flag("--check-lemmas", sweep_lemmas);
    sweep->add_flag("--timing", sweep_timing);

    std::string preset = "default", gen_family, gen_random;
    int gen_connectivity = 3;
    auto* gen = app.add_subcommand("generate", "write graph6 lines");
    gen->add_option("--preset", preset, "corpus preset (default)");
    gen->add_option("--family", gen_family, "single named graph");
    gen->add_option("--random", gen_random, "n,p,seed[,count] rejection-sampled graphs");
    gen->add_option("--connectivity", gen_connectivity, "required connectivity for --random")
        ->check(CLI::Range(1, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*find) return run_find(find_in, k, method, check_lemmas, timing);
        if (*verify) return run_verify(verify_in, set_text);
        if (*decomp) return run_decompose(decompose_in, format);
        if (*sweep) return run_sweep_cmd(corpus, kmin, kmax, sweep_lemmas, jobs, sweep_timing, sweep_method);
        if (*gen) return run_generate(preset, gen_family, gen_random, gen_connectivity);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitUsage;
}
