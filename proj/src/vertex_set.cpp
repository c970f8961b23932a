#include "contractia/vertex_set.hpp"

#include <algorithm>

namespace contractia {

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (Vertex v : *this) {
        if (!first_item) s += ',';
        s += std::to_string(v);
        first_item = false;
    }
    s += '}';
    return s;
}

bool lex_less(VertexSet a, VertexSet b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

}  // namespace contractia
