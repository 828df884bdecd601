#include "ramsey/vertex_set.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <string>

namespace ramsey {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0)
{
}

VertexSet VertexSet::all(std::size_t universe)
{
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w)
        s.words_[w] = ~std::uint64_t{0};
    if (const auto tail = universe % 64; tail != 0)
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members)
{
    return from(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::from(std::size_t universe, std::span<const Vertex> members)
{
    VertexSet s(universe);
    for (const auto v : members)
        s.insert(v);
    return s;
}

std::size_t VertexSet::size() const noexcept
{
    std::size_t total = 0;
    for (const auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(Vertex v)
{
    if (v >= universe_)
        throw RangeError("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    if (v >= universe_)
        throw RangeError("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

Vertex VertexSet::first() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0)
            return static_cast<Vertex>(w * 64 + static_cast<unsigned>(std::countr_zero(words_[w])));
    return static_cast<Vertex>(universe_);
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

void VertexSet::require_same_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_)
        throw ArgumentError("vertex sets over different universes (" + std::to_string(universe_) +
                            " vs " + std::to_string(other.universe_) + ")");
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0)
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0)
            return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= ~other.words_[w];
    return *this;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b)
{
    const auto am = a.members();
    const auto bm = b.members();
    return std::lexicographical_compare_three_way(am.begin(), am.end(), bm.begin(), bm.end());
}

} // namespace ramsey
