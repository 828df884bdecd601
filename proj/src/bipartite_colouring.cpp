#include "ramsey/bipartite_colouring.hpp"

#include "colour_counter.hpp"
#include "ramsey/errors.hpp"

#include <algorithm>
#include <string>

namespace ramsey {

BipartiteColouring::BipartiteColouring(std::size_t p, std::size_t q, std::vector<Colour> colours,
                                       const Capacity& capacity)
    : p_(p), q_(q), colours_(std::move(colours))
{
    capacity.check(p + q);
    if (colours_.size() != p * q)
        throw ArgumentError("expected " + std::to_string(p * q) + " cross colours, got " +
                            std::to_string(colours_.size()));
    if (!colours_.empty())
        max_colour_ = *std::max_element(colours_.begin(), colours_.end());
}

Colour BipartiteColouring::at(Vertex left, Vertex right) const
{
    if (left >= p_ || right >= q_)
        throw RangeError("bipartite edge (" + std::to_string(left) + "," + std::to_string(right) +
                         ") outside " + std::to_string(p_) + "x" + std::to_string(q_));
    return (*this)(left, right);
}

std::size_t BipartiteColouring::colour_count() const
{
    detail::ColourMarks marks(max_colour_);
    for (const auto col : colours_)
        marks.mark(col);
    return marks.distinct();
}

} // namespace ramsey
