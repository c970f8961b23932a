#pragma once

#include "contractia/vertex_set.hpp"

namespace contractia {

namespace detail {

template <typename Visit>
bool for_each_subset_from(VertexSet pool, int size, VertexSet chosen, Visit& visit) {
    if (size == 0) return visit(chosen);
    if (pool.size() < size) return true;
    for (Vertex v : pool) {
        VertexSet rest = VertexSet::from_bits(pool.bits() & ~((std::uint64_t{2} << v) - 1));
        if (rest.size() < size - 1) break;
        if (!for_each_subset_from(rest, size - 1, chosen.with(v), visit)) return false;
    }
    return true;
}

}  // namespace detail

/// Calls `visit(subset)` for every `size`-subset of `pool` in lexicographic
/// order of the ascending member lists. Stops early when `visit` returns
/// false; the return value says whether the enumeration ran to completion.
template <typename Visit>
bool for_each_subset(VertexSet pool, int size, Visit visit) {
    if (size < 0) return true;
    return detail::for_each_subset_from(pool, size, VertexSet{}, visit);
}

}  // namespace contractia
