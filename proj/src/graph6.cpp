#include "contractia/graph6.hpp"

#include <fstream>

namespace contractia {

namespace {

constexpr int kBias = 63;

int bit_count(int n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char ch : text) {
        if (ch < kBias || ch > 126) {
            throw ParseError("graph6 byte " + std::to_string(static_cast<int>(ch)) +
                             " outside 63..126");
        }
    }
    if (text[0] == 126) throw ParseError("graph6 sizes above 62 vertices are not supported");
    const int n = text[0] - kBias;
    const int bits = bit_count(n);
    const size_t body = (bits + 5) / 6;
    if (text.size() - 1 < body) {
        throw ParseError("graph6 bit stream truncated: need " + std::to_string(body) + " bytes, got " +
                         std::to_string(text.size() - 1));
    }
    if (text.size() - 1 > body) {
        throw ParseError("graph6 string has " + std::to_string(text.size() - 1 - body) +
                         " trailing bytes");
    }
    std::vector<Edge> edges;
    int index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++index) {
            const int byte = text[1 + index / 6] - kBias;
            if ((byte >> (5 - index % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxVertices) throw InvalidArgument("graph6 short form holds at most 62 vertices");
    const int bits = bit_count(n);
    std::string out(1 + (bits + 5) / 6, static_cast<char>(kBias));
    out[0] = static_cast<char>(kBias + n);
    int index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++index) {
            if (g.has_edge(i, j)) out[1 + index / 6] += static_cast<char>(1 << (5 - index % 6));
        }
    }
    return out;
}

std::optional<CorpusEntry> CorpusReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            CorpusEntry entry;
            entry.line_no = line_no_;
            entry.graph = parse_graph6(line);
            entry.text = std::move(line);
            return entry;
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no_) + ": " + e.what());
        }
    }
    return std::nullopt;
}

std::vector<CorpusEntry> read_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    CorpusReader reader(in);
    while (auto entry = reader.next()) out.push_back(std::move(*entry));
    return out;
}

std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file " + path.string());
    return read_corpus(in);
}

}  // namespace contractia
