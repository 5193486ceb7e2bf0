#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace pcube {

using Vertex = std::size_t;

/// Subset of the vertex universe 0..n-1 of a host graph, stored as a bitset.
///
/// Every set operation requires both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, const std::vector<Vertex>& members);

    static VertexSet full(std::size_t universe);
    /// Members are the set bits of `mask`; requires universe <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const;

    bool operator==(const VertexSet& other) const = default;
    /// Total order: by universe, then the set holding the smallest differing vertex sorts first.
    std::strong_ordering operator<=>(const VertexSet& other) const;

    std::vector<Vertex> members() const;
    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
                word &= word - 1;
            }
        }
    }

    std::size_t hash() const noexcept;
    /// "{0,2,5}"
    std::string to_string() const;

private:
    void require_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace pcube

template <>
struct std::hash<pcube::VertexSet> {
    std::size_t operator()(const pcube::VertexSet& s) const noexcept { return s.hash(); }
};
