#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ramsey {

using Vertex = std::uint32_t;

/// Subset of the vertex range 0..universe-1, stored as a packed bitset.
///
/// Two sets can only be combined when they share a universe. Ordering is
/// lexicographic on the ascending member lists, which is the tie-break order
/// used for witnesses.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    static VertexSet all(std::size_t universe);
    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
    static VertexSet from(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }

    void insert(Vertex v);
    void erase(Vertex v);

    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept;

    std::vector<Vertex> members() const;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<unsigned>(std::countr_zero(bits));
                f(static_cast<Vertex>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

private:
    void require_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ramsey
