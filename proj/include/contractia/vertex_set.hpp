#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace contractia {

using Vertex = int;

/// A set of vertex ids backed by a single 64-bit word.
///
/// Every set algebra operation is a handful of machine instructions, which is
/// what the exhaustive searches in this library are bound by. Graphs are
/// therefore limited to `kMaxVertices` vertices.
class VertexSet {
public:
    static constexpr int kMaxVertices = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    /// {0, 1, ..., n-1}
    static constexpr VertexSet range(int n) {
        return from_bits(n >= kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return from_bits(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr VertexSet with(Vertex v) const { return from_bits(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(Vertex v) const { return from_bits(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const;
    /// "{0,3,5}"
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending member lists.
bool lex_less(VertexSet a, VertexSet b);

}  // namespace contractia
