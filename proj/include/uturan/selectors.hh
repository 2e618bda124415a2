#ifndef UTURAN_SELECTORS_HH
#define UTURAN_SELECTORS_HH

#include <uturan/partitioned.hh>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace uturan
{
    /// Which indices quantify the membership of the vertex chosen on part V_pq
    /// (p < q) of a selected index set I:
    ///   ik:          W(p, j, q)       for every j in I with p < j < q
    ///   ij:          W(p, q, k)       for every k in I with k > q
    ///   jk:          W(i, p, q)       for every i in I with i < p
    ///   first:       W(p, q, a, b, c) for every a < p < b < q < c in I
    ///   every_third: W(p, q, k)       for every k in I other than p, q
    /// Each W is a subset of V_pq.
    enum class SelectorShape
    {
        ik,
        ij,
        jk,
        first,
        every_third
    };

    /// Throws InvalidArgument on an unknown name.
    auto parse_selector_shape(std::string_view) -> SelectorShape;

    /// Called with the argument layout listed for its shape.
    using SelectorFamily = std::function<VertexSet(std::span<const int>)>;

    struct SelectorConstraint
    {
        SelectorShape shape;
        SelectorFamily family;
    };

    struct Selection
    {
        std::vector<int> indices;
        /// Lowest admissible vertex per pair (p, q) of indices, p < q.
        std::map<std::pair<int, int>, int> witnesses;
        /// Every admissible vertex per pair.
        std::map<std::pair<int, int>, VertexSet> candidates;
    };

    /// Finds a `target`-sized subset of `pool` on which every pair has a vertex
    /// satisfying all constraints at once. Exhaustive mode scans subsets of the
    /// pool lexicographically and throws CapExceeded when the pool is larger
    /// than `cap` (0 disables); greedy mode adds pool indices in increasing order
    /// whenever all pairs stay satisfiable.
    auto selector_search(const PartitionedHypergraph &, std::span<const SelectorConstraint>, std::span<const int> pool,
        int target, SelectionMode, int cap = 12) -> std::optional<Selection>;

    /// The greedy pass with no target: as many pool indices as it can keep.
    auto greedy_selection(const PartitionedHypergraph &, std::span<const SelectorConstraint>,
        std::span<const int> pool) -> Selection;
}

#endif
