#ifndef UTURAN_COLORABILITY_HH
#define UTURAN_COLORABILITY_HH

#include <uturan/certificate.hh>
#include <uturan/hypergraph.hh>
#include <uturan/palette.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace uturan
{
    /// Bitmask over color indices; palettes used for search have at most 64 colors.
    using ColorMask = std::uint64_t;

    /// The colors used in each position of a palette's triples.
    struct PositionProfile
    {
        ColorMask first = 0, second = 0, third = 0;
        bool is_product = false;
    };

    auto position_profile(const Palette &) -> PositionProfile;

    /// Where a pair sits inside an edge read in ordering positions i < j < k.
    enum class PairRole
    {
        ij,
        jk,
        ik
    };

    struct ConstrainingEdge
    {
        Edge edge;
        PairRole role;
        /// The palette's colors for that position.
        ColorMask positional_domain;
    };

    /// Why a fixed ordering admits no coloring. When a single pair's domain
    /// emptied, `pair` names it and `edges` lists every edge through it. When
    /// propagation alone could not refute the ordering but search did,
    /// search_exhausted is set and `pair` is empty.
    struct InfeasibilityWitness
    {
        std::optional<std::pair<Vertex, Vertex>> pair;
        std::vector<ConstrainingEdge> edges;
        bool search_exhausted = false;
    };

    struct FixedOrderingResult
    {
        std::optional<ColoringCertificate> certificate;
        std::optional<InfeasibilityWitness> witness;
        bool budget_exhausted = false;

        auto feasible() const -> bool { return certificate.has_value(); }
    };

    /// Decides whether some pair coloring makes every edge's ordered color triple
    /// a member of the palette, for one fixed vertex ordering. Pairs in no edge get
    /// color 0. A `decision_budget` of 0 means unlimited.
    auto check_fixed_ordering(const Hypergraph &, const Palette &, std::span<const Vertex> ordering,
        std::uint64_t decision_budget = 0) -> FixedOrderingResult;

    enum class SearchMode
    {
        exhaustive,
        heuristic
    };

    struct SearchOptions
    {
        SearchMode mode = SearchMode::exhaustive;
        /// Orderings examined plus search decisions; 0 means unlimited in
        /// exhaustive mode and 1000 orderings in heuristic mode.
        std::uint64_t budget = 0;
        int cap = 10;
        bool allow_over_cap = false;
        /// Sequential canonical enumeration, so the certificate is reproducible.
        bool deterministic = true;
        int threads = 1;
        std::uint64_t seed = 0;
    };

    enum class Verdict
    {
        colorable,
        not_colorable,
        unknown
    };

    struct SearchResult
    {
        Verdict verdict = Verdict::unknown;
        std::optional<ColoringCertificate> certificate;
        std::uint64_t orderings_examined = 0;
    };

    /// Searches for an ordering and pair coloring. Connected components are
    /// searched independently and their orderings concatenated in order of their
    /// smallest vertex. Exhaustive mode enumerates orderings lexicographically,
    /// pruned by propagation on each prefix and by forcing interchangeable
    /// vertices into ascending order; it throws CapExceeded above the cap.
    /// Heuristic mode tries the identity ordering then seeded random ones and
    /// never answers not_colorable.
    auto search_colorable(const Hypergraph &, const Palette &, const SearchOptions & = {}) -> SearchResult;

    struct VerificationResult
    {
        bool valid = false;
        std::optional<Edge> violated_edge;
    };

    /// Checks every edge in canonical order. Throws MalformedInput if the
    /// certificate does not fit the hypergraph (size, ordering, missing or
    /// out-of-range colors).
    auto verify_certificate(const Hypergraph &, const Palette &, const ColoringCertificate &) -> VerificationResult;

    /// Classes of vertices that can be swapped pairwise without changing the edge
    /// set. Returns, for each vertex, the smallest member of its class.
    auto interchangeable_classes(const Hypergraph &) -> std::vector<Vertex>;
}

#endif
