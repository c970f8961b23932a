#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contractia/graph.hpp"

namespace contractia {

// graph6, short form only: one size byte (n <= 62) followed by the upper
// triangle (0,1),(0,2),(1,2),(0,3),... packed six bits per printable byte.

inline constexpr int kGraph6MaxVertices = 62;

/// Throws ParseError on bad characters, truncation, or n > 62.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

struct CorpusEntry {
    int line_no = 0;
    std::string text;
    Graph graph;
};

/// Streams graphs from newline-delimited graph6; blank lines and lines
/// starting with '#' are skipped. Parse errors name the 1-based line.
class CorpusReader {
public:
    explicit CorpusReader(std::istream& in) : in_(in) {}
    std::optional<CorpusEntry> next();

private:
    std::istream& in_;
    int line_no_ = 0;
};

/// Whole-file convenience; throws Error if the file cannot be opened.
std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path);
std::vector<CorpusEntry> read_corpus(std::istream& in);

}  // namespace contractia
