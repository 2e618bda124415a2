#include <uturan/rng.hh>

using namespace uturan;

auto SeededRng::next_u64() -> std::uint64_t
{
    std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

auto SeededRng::next_uniform() -> double
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

auto SeededRng::below(std::uint64_t bound) -> std::uint64_t
{
    auto r = static_cast<std::uint64_t>(next_uniform() * static_cast<double>(bound));
    return r < bound ? r : bound - 1;
}
