#ifndef UTURAN_RNG_HH
#define UTURAN_RNG_HH

#include <cstdint>
#include <span>
#include <utility>

namespace uturan
{
    /// splitmix64 stream. Every randomized routine documents the order in which it
    /// draws, so a seed reproduces the same output on every platform.
    class SeededRng
    {
    public:
        explicit SeededRng(std::uint64_t seed = 0) :
            _state(seed)
        {
        }

        auto next_u64() -> std::uint64_t;

        /// Uniform in [0, 1) with 53 random bits.
        auto next_uniform() -> double;

        /// floor(next_uniform() * bound), bound >= 1.
        auto below(std::uint64_t bound) -> std::uint64_t;

        /// Fisher-Yates from the back: for i = size-1 down to 1, swap item i with
        /// item below(i + 1).
        template <typename T>
        auto shuffle(std::span<T> items) -> void
        {
            for (std::size_t i = items.size(); i > 1; --i)
                std::swap(items[i - 1], items[below(i)]);
        }

    private:
        std::uint64_t _state;
    };
}

#endif
