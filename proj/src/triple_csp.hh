#ifndef UTURAN_SRC_TRIPLE_CSP_HH
#define UTURAN_SRC_TRIPLE_CSP_HH

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace uturan::innards
{
    using Mask = std::uint64_t;
    using Relation = std::vector<std::array<std::uint8_t, 3>>;

    inline auto full_mask(int width) -> Mask
    {
        return width >= 64 ? ~Mask{0} : (Mask{1} << width) - 1;
    }

    /// Variables with at most 64 values, constrained by ternary table relations.
    /// Propagation is generalized arc consistency on each table; search branches
    /// on the smallest domain, ties to the lowest variable, values ascending.
    /// All changes go on a trail so callers can post, search and undo.
    class TripleCsp
    {
    public:
        struct Mark
        {
            std::size_t trail, constraints;
        };

        enum class Outcome
        {
            solved,
            refuted,
            budget_exhausted
        };

        TripleCsp(int var_count, Mask initial_domain);

        /// Adds the constraint (x, y, z) in rel and propagates to a fixpoint.
        /// Returns false if some domain empties; failed_var() then names it.
        auto post(int x, int y, int z, const Relation * rel) -> bool;

        auto mark() const -> Mark { return {_trail.size(), _constraints.size()}; }
        auto undo(Mark) -> void;

        /// Leaves every constrained variable with a singleton domain on success.
        /// `decisions_left` is decremented per branching decision.
        auto solve(std::uint64_t & decisions_left) -> Outcome;

        auto domain(int var) const -> Mask { return _domains[var]; }
        auto value(int var) const -> int;
        auto failed_var() const -> int { return _failed_var; }
        auto var_count() const -> int { return static_cast<int>(_domains.size()); }

    private:
        struct Constraint
        {
            int x, y, z;
            const Relation * rel;
        };

        auto narrow(int var, Mask m) -> bool;
        auto revise(int c) -> bool;
        auto propagate() -> bool;

        std::vector<Mask> _domains;
        std::vector<std::pair<int, Mask>> _trail;
        std::vector<Constraint> _constraints;
        std::vector<std::vector<int>> _watchers;
        std::vector<int> _queue;
        std::vector<char> _queued;
        int _failed_var = -1;
    };

    inline constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();
}

#endif
