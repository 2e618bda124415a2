#ifndef UTURAN_CONSTRUCTIONS_HH
#define UTURAN_CONSTRUCTIONS_HH

#include <uturan/certificate.hh>
#include <uturan/hypergraph.hh>
#include <uturan/palette.hh>
#include <uturan/rng.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace uturan
{
    struct PaletteHypergraph
    {
        Hypergraph hypergraph;
        /// The random pair coloring, identity ordering.
        ColoringCertificate coloring;
    };

    /// Colors pairs {i, j}, i < j, in lexicographic pair order with below(k), then
    /// keeps the triple i < j < l as an edge iff (c_ij, c_jl, c_il) is in the
    /// palette.
    auto random_palette_hypergraph(const Palette &, int vertex_count, SeededRng &) -> PaletteHypergraph;

    /// Lines of the affine space F_5^d, 1 <= d <= 5, as a 5-uniform hypergraph.
    /// Point index = base-5 encoding with coordinate 0 least significant.
    auto affine_lines(int dimension) -> Hypergraph;

    /// A 5-uniform linear hypergraph that is edge-maximal.
    ///
    /// For n <= 40 every 5-set is visited once in a seeded shuffle order (one
    /// Fisher-Yates pass over the lexicographic list). For larger n, random
    /// 5-sets (partial Fisher-Yates over the vertices) are tried until n^2
    /// consecutive rejections, then a lexicographic sweep adds whatever still
    /// fits, which leaves the result maximal.
    auto greedy_linear(int vertex_count, SeededRng &) -> Hypergraph;

    /// A 5-set that could be added to a 5-uniform linear hypergraph without
    /// breaking linearity, if any. Lexicographically first.
    auto find_addable_five_set(const Hypergraph &) -> std::optional<Edge>;

    /// For each 5-edge, in canonical edge order, the two chosen vertices (smaller
    /// first).
    struct FanChoice
    {
        std::vector<std::pair<Vertex, Vertex>> chosen;

        friend auto operator==(const FanChoice &, const FanChoice &) -> bool = default;
    };

    /// One draw of below(10) per edge, indexing the edge's 10 pairs in
    /// lexicographic order.
    auto random_fan_choice(const Hypergraph & five_uniform, SeededRng &) -> FanChoice;

    struct FanExpansion
    {
        Hypergraph hypergraph;
        FanChoice choice;
    };

    /// Replaces each 5-edge with the three triples {v, v', w}, w the other
    /// vertices. Throws MalformedInput unless the input is 5-uniform, linear, and
    /// the choice picks two members of each edge.
    auto fan_expansion(const Hypergraph & five_uniform, const FanChoice &) -> FanExpansion;
    auto fan_expansion(const Hypergraph & five_uniform, SeededRng &) -> FanExpansion;

    /// The phi3 coloring of the fan expansion under `ordering` (identity when
    /// empty). With the chosen pair at positions i < j, c_ij = omega, and for the
    /// remaining vertex at position k:
    ///   i < k < j:  c_ik = alpha1, c_kj = beta1
    ///   k < i:      c_ki = alpha2, c_kj = gamma2
    ///   k > j:      c_jk = beta3,  c_ik = gamma3
    /// Pairs outside every edge get omega.
    auto phi3_witness(const Hypergraph & five_uniform, const FanChoice &, std::span<const Vertex> ordering = {})
        -> ColoringCertificate;

    struct GrowthBound
    {
        bool holds = false;
        /// ln(n!) + m ln(9/10); negative exactly when n! < (10/9)^m.
        double log_margin = 0;
        double log_factorial = 0;
    };

    auto growth_and_union_bound(std::int64_t n, std::int64_t m) -> GrowthBound;

    /// `<edge-index> <v> <v'>` per line.
    auto write_fan_choice(std::ostream &, const FanChoice &) -> void;
    auto read_fan_choice(std::istream &, std::size_t edge_count) -> FanChoice;
}

#endif
