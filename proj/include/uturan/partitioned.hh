#ifndef UTURAN_PARTITIONED_HH
#define UTURAN_PARTITIONED_HH

#include <uturan/palette.hh>
#include <uturan/rational.hh>
#include <uturan/rng.hh>

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace uturan
{
    using VertexSet = boost::dynamic_bitset<>;

    /// Indices of a part V_ij, 1 <= i < j <= N.
    struct Part
    {
        int i, j;

        friend auto operator==(const Part &, const Part &) -> bool = default;
        friend auto operator<=>(const Part &, const Part &) = default;
    };

    /// 1 <= i < j < k <= N.
    struct TriadIndex
    {
        int i, j, k;

        friend auto operator==(const TriadIndex &, const TriadIndex &) -> bool = default;
    };

    /// Which part of the (i, j, k)-triad a vertex belongs to.
    enum class TriadRole
    {
        ij,
        jk,
        ik
    };

    /// An edge of the (i, j, k)-triad: a in V_ij, b in V_jk, c in V_ik.
    struct TriadEdge
    {
        int a, b, c;

        friend auto operator==(const TriadEdge &, const TriadEdge &) -> bool = default;
        friend auto operator<=>(const TriadEdge &, const TriadEdge &) = default;
    };

    /// An N-partitioned 3-uniform hypergraph whose parts V_ij all have the same
    /// size s; the vertices of each part are 0 .. s-1. Edges live in triads.
    class PartitionedHypergraph
    {
    public:
        PartitionedHypergraph(int parts, int part_size);

        auto parts() const -> int { return _n; }
        auto part_size() const -> int { return _s; }
        auto triad_count() const -> std::size_t { return _members.size(); }

        /// Throws InvalidArgument unless 1 <= i < j < k <= N.
        auto triad_id(TriadIndex) const -> std::size_t;
        auto triad_at(std::size_t id) const -> TriadIndex;

        auto has_edge(TriadIndex, TriadEdge) const -> bool;
        auto add_edge(TriadIndex, TriadEdge) -> void;
        auto edge_count(TriadIndex) const -> std::int64_t;
        auto total_edge_count() const -> std::int64_t;

        /// Sorted by (a, b, c).
        auto triad_edges(TriadIndex) const -> std::vector<TriadEdge>;

        /// Number of edges of the triad through vertex v in the given role.
        auto degree(TriadIndex, TriadRole, int v) const -> std::int64_t;

        friend auto operator==(const PartitionedHypergraph &, const PartitionedHypergraph &) -> bool = default;

    private:
        auto cell(TriadEdge e) const -> std::size_t { return (std::size_t(e.a) * _s + e.b) * _s + e.c; }
        auto check_vertex(int v) const -> void;

        int _n;
        int _s;
        std::vector<std::vector<char>> _members;
        std::vector<std::int64_t> _counts;
    };

    /// The triad spanned by part V_ij and a third index, and the role V_ij plays in it.
    auto triad_toward(Part, int toward) -> std::pair<TriadIndex, TriadRole>;

    /// |triad edges| / s^3.
    auto triad_density(const PartitionedHypergraph &, TriadIndex) -> Rational;

    /// Minimum triad density; throws InvalidArgument when N < 3.
    auto min_density(const PartitionedHypergraph &) -> Rational;

    /// d_{ij->k}(v): edges of the triad spanned by V_ij and k that contain v,
    /// divided by s^2. `toward` may lie below, between or above i and j.
    auto relative_degree(const PartitionedHypergraph &, Part, int v, int toward) -> Rational;

    /// Vertices of V_ij whose relative degree toward `toward` is at least `threshold`.
    auto significant_vertices(const PartitionedHypergraph &, Part, int toward, const Rational & threshold)
        -> VertexSet;

    /// Each part's vertex v gets color part_color(part, v); the edge (a, b, c) of
    /// the (i, j, k)-triad is present iff (color(a), color(b), color(c)) is in the
    /// palette, reading a in V_ij, b in V_jk, c in V_ik.
    auto partitioned_from_colors(const Palette &, int parts, int part_size,
        const std::function<Color(Part, int)> & part_color) -> PartitionedHypergraph;

    /// Colors drawn with below(k) for parts in lexicographic (i, j) order and
    /// vertices ascending.
    auto random_partitioned_from_palette(const Palette &, int parts, int part_size, SeededRng &)
        -> PartitionedHypergraph;

    /// phi3 host with part size 7 where vertex v of every part carries color v.
    auto phi3_role_host(int parts) -> PartitionedHypergraph;

    /// Significant fractions (s_{ij->k}, s_{jk->i}, s_{ik->j}) of one triad.
    struct TriadProfile
    {
        TriadIndex triad;
        Rational ij, jk, ik;
    };

    /// One profile per triad, in triad order; `threshold` is in (0, 1].
    auto degree_profile(const PartitionedHypergraph &, const Rational & threshold) -> std::vector<TriadProfile>;

    enum class SelectionMode
    {
        exhaustive,
        greedy
    };

    struct ProfileWindow
    {
        std::vector<int> indices;
        Rational a, b, c;
    };

    /// An index set of size `target` whose triads all have significant fractions
    /// (threshold `width`) inside [a, a+width), [b, b+width), [c, c+width).
    /// Exhaustive mode scans subsets lexicographically and throws CapExceeded
    /// when N > cap (cap 0 disables the check); greedy mode adds indices in
    /// increasing order while the windows still fit.
    auto find_uniform_profile_subset(const PartitionedHypergraph &, const Rational & width, int target,
        SelectionMode = SelectionMode::exhaustive, int cap = 12) -> std::optional<ProfileWindow>;

    /// Greedy growth over all indices without a target size; may return fewer
    /// than three indices.
    auto greedy_profile_window(const PartitionedHypergraph &, const Rational & width) -> ProfileWindow;

    /// phg/1: `phg <N> <s>` then `i j k a b c` per edge, sorted by (i, j, k) then (a, b, c).
    auto write_partitioned(std::ostream &, const PartitionedHypergraph &) -> void;
    auto read_partitioned(std::istream &, bool normalize = false) -> PartitionedHypergraph;
}

#endif
