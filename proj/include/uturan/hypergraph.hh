#ifndef UTURAN_HYPERGRAPH_HH
#define UTURAN_HYPERGRAPH_HH

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace uturan
{
    using Vertex = int;
    using Edge = std::vector<Vertex>;

    /// A k-uniform hypergraph (k is 3 or 5) over the dense vertex set [0, n).
    ///
    /// Always canonical: each edge is strictly increasing, there are no duplicate
    /// edges, and edges are sorted lexicographically. Edges are stored flat with
    /// stride k. Immutable once built.
    class Hypergraph
    {
    public:
        Hypergraph() = default;

        auto uniformity() const -> int { return _k; }
        auto vertex_count() const -> int { return _n; }
        auto edge_count() const -> std::size_t { return _k == 0 ? 0 : _flat.size() / _k; }

        auto edge(std::size_t index) const -> std::span<const Vertex>
        {
            return {_flat.data() + index * _k, static_cast<std::size_t>(_k)};
        }

        auto edges() const -> std::vector<Edge>;

        auto contains(std::span<const Vertex> sorted_edge) const -> bool;

        friend auto operator==(const Hypergraph &, const Hypergraph &) -> bool = default;

        friend auto canonicalize(int, int, std::vector<Edge>) -> Hypergraph;
        friend auto canonical_or_throw(int, int, std::vector<Edge>) -> Hypergraph;

    private:
        int _k = 3;
        int _n = 0;
        std::vector<Vertex> _flat;
    };

    /// Sorts each edge, removes duplicate edges and sorts the edge list. Throws
    /// MalformedInput on a vertex outside [0, n), a repeated vertex inside an edge,
    /// a wrong edge size, or k not in {3, 5}.
    auto canonicalize(int uniformity, int vertex_count, std::vector<Edge> edges) -> Hypergraph;

    /// Re-canonicalizes an existing hypergraph; the identity on canonical input.
    auto canonicalize(const Hypergraph &) -> Hypergraph;

    /// As canonicalize, but also throws MalformedInput if the edges were not
    /// already in canonical form. Used by strict parsing.
    auto canonical_or_throw(int uniformity, int vertex_count, std::vector<Edge> edges) -> Hypergraph;

    /// True iff every two distinct edges share at most one vertex.
    auto is_linear(const Hypergraph &) -> bool;

    /// Applies vertex -> permutation[vertex] and re-canonicalizes.
    auto relabel(const Hypergraph &, std::span<const Vertex> permutation) -> Hypergraph;

    /// Hypergraph on the same vertex set keeping the edges whose index is selected.
    auto edge_subset(const Hypergraph &, const std::vector<bool> & keep) -> Hypergraph;

    /// Index of the unordered pair {u, v}, u != v, in the lexicographic listing of
    /// all pairs of [0, n).
    inline auto pair_index(int n, Vertex u, Vertex v) -> std::size_t
    {
        if (u > v)
            std::swap(u, v);
        auto su = static_cast<std::size_t>(u);
        return su * static_cast<std::size_t>(n) - su * (su + 1) / 2 + static_cast<std::size_t>(v - u - 1);
    }

    /// Inverse of pair_index: the pair (u, v), u < v, with the given index.
    inline auto pair_from_index(int n, std::size_t index) -> std::pair<Vertex, Vertex>
    {
        auto row_start = [n](std::size_t u) { return u * static_cast<std::size_t>(n) - u * (u + 1) / 2; };
        std::size_t lo = 0, hi = static_cast<std::size_t>(n > 0 ? n - 1 : 0);
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (row_start(mid) <= index)
                lo = mid;
            else
                hi = mid;
        }
        if (hi > lo && row_start(hi) <= index)
            lo = hi;
        auto u = static_cast<Vertex>(lo);
        return {u, static_cast<Vertex>(index - row_start(lo) + lo + 1)};
    }

    inline auto pair_count(int n) -> std::size_t
    {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    }
}

#endif
