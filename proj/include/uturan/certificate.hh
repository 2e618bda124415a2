#ifndef UTURAN_CERTIFICATE_HH
#define UTURAN_CERTIFICATE_HH

#include <uturan/hypergraph.hh>
#include <uturan/palette.hh>

#include <iosfwd>
#include <vector>

namespace uturan
{
    /// A vertex ordering plus a color for every unordered pair of vertices.
    ///
    /// ordering[p] is the original label of the vertex at position p. Pair colors
    /// are keyed by original labels and stored in pair_index order.
    struct ColoringCertificate
    {
        int vertex_count = 0;
        std::vector<Vertex> ordering;
        std::vector<Color> pair_colors;

        auto color(Vertex u, Vertex v) const -> Color { return pair_colors[pair_index(vertex_count, u, v)]; }
        auto set_color(Vertex u, Vertex v, Color c) -> void { pair_colors[pair_index(vertex_count, u, v)] = c; }

        /// Identity ordering, every pair colored `fill`.
        static auto uniform(int vertex_count, Color fill = 0) -> ColoringCertificate;

        friend auto operator==(const ColoringCertificate &, const ColoringCertificate &) -> bool = default;
    };

    /// Writes {"n": .., "ordering": [..], "pair_colors": {"u,v": c, ..}} with pairs
    /// in lexicographic order. Output is byte-stable.
    auto write_certificate_json(std::ostream &, const ColoringCertificate &) -> void;

    /// Reads the JSON form. Throws MalformedInput on missing pairs, duplicate or
    /// out-of-range pairs, or an ordering that is not a permutation.
    auto read_certificate_json(std::istream &) -> ColoringCertificate;

    /// Throws MalformedInput unless ordering is a permutation of [0, n).
    auto check_permutation(std::span<const Vertex> ordering, int n) -> void;
}

#endif
