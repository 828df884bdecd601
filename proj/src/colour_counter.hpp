#pragma once

#include "ramsey/colouring.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramsey::detail {

// Multiset of nonzero colours with O(1) add/remove and a running distinct count.
class ColourCounter {
public:
    explicit ColourCounter(Colour max_colour) : counts_(static_cast<std::size_t>(max_colour) + 1, 0) {}

    void add(Colour c) noexcept
    {
        if (c != colourless && counts_[c]++ == 0)
            ++distinct_;
    }

    void remove(Colour c) noexcept
    {
        if (c != colourless && --counts_[c] == 0)
            --distinct_;
    }

    std::size_t distinct() const noexcept { return distinct_; }
    bool contains(Colour c) const noexcept { return c != colourless && counts_[c] != 0; }

private:
    std::vector<std::uint32_t> counts_;
    std::size_t distinct_ = 0;
};

// Distinct-colour set with cheap reset, for one-shot counts.
class ColourMarks {
public:
    explicit ColourMarks(Colour max_colour) : stamp_(static_cast<std::size_t>(max_colour) + 1, 0) {}

    void reset() noexcept
    {
        ++epoch_;
        distinct_ = 0;
    }

    bool mark(Colour c) noexcept
    {
        if (c == colourless || stamp_[c] == epoch_)
            return false;
        stamp_[c] = epoch_;
        ++distinct_;
        return true;
    }

    bool marked(Colour c) const noexcept { return c != colourless && stamp_[c] == epoch_; }
    std::size_t distinct() const noexcept { return distinct_; }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 1;
    std::size_t distinct_ = 0;
};

} // namespace ramsey::detail
