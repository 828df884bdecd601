#pragma once

#include "ramsey/colouring.hpp"

#include <cstddef>
#include <vector>

namespace ramsey {

/// Immutable colouring of the complete bipartite graph K_{p,q}. Left vertices
/// are 0..p-1, right vertices 0..q-1; storage is row-major by left vertex.
class BipartiteColouring {
public:
    BipartiteColouring() = default;
    BipartiteColouring(std::size_t p, std::size_t q, std::vector<Colour> colours, const Capacity& capacity = {});

    std::size_t p() const noexcept { return p_; }
    std::size_t q() const noexcept { return q_; }

    Colour at(Vertex left, Vertex right) const;
    Colour operator()(Vertex left, Vertex right) const noexcept { return colours_[left * q_ + right]; }

    std::span<const Colour> colours() const noexcept { return colours_; }
    Colour max_colour() const noexcept { return max_colour_; }
    std::size_t colour_count() const;

    friend bool operator==(const BipartiteColouring&, const BipartiteColouring&) = default;

private:
    std::size_t p_ = 0;
    std::size_t q_ = 0;
    std::vector<Colour> colours_;
    Colour max_colour_ = 0;
};

} // namespace ramsey
