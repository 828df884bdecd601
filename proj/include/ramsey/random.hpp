#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ramsey {

/// Seeded generator with a portable bounded-draw rule, so a seed reproduces the
/// same instances on every standard library. std::mt19937_64's raw sequence is
/// fixed by the standard; the distributions are not, hence the explicit
/// rejection sampling below.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64/mod-reject/v1";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from 0..bound-1. Requires bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        for (;;) {
            const auto x = engine_();
            if (x <= limit)
                return x % bound;
        }
    }

    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace ramsey
