#ifndef UTURAN_EMBEDDING_HH
#define UTURAN_EMBEDDING_HH

#include <uturan/certificate.hh>
#include <uturan/hypergraph.hh>
#include <uturan/partitioned.hh>
#include <uturan/skeleton.hh>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace uturan
{
    /// Guest vertex v goes to index indices[v] (1-based, pairwise distinct);
    /// guest pair (u, v), u < v, goes to a vertex of V_pq with p, q the sorted
    /// images. Every guest edge must then be an edge of its triad.
    struct Embedding
    {
        std::vector<int> indices;
        std::map<std::pair<Vertex, Vertex>, int> witnesses;

        friend auto operator==(const Embedding &, const Embedding &) -> bool = default;
    };

    /// Backtracks over injective index assignments, guest vertices in label
    /// order and indices ascending, posting each guest edge as a triad table
    /// constraint on its three pair witnesses once all three images are known.
    /// Pairs that lie in no guest edge get vertex 0. Returns nullopt when no
    /// embedding exists or `decision_budget` branching decisions run out.
    /// Throws InvalidArgument for a guest that is not 3-uniform or a part size
    /// above 64.
    auto embed_search(const PartitionedHypergraph &, const Hypergraph & guest,
        std::uint64_t decision_budget = std::numeric_limits<std::uint64_t>::max()) -> std::optional<Embedding>;

    /// Recomputes the definition; malformed embeddings are simply false.
    auto verify_embedding(const PartitionedHypergraph &, const Hypergraph & guest, const Embedding &) -> bool;

    /// Places the guest vertex at ordering position t on index I[t] and the pair
    /// of color c on the skeleton's role-c vertex. Throws InvalidArgument when
    /// the skeleton has fewer indices than the guest has vertices or when the
    /// certificate does not match the guest.
    auto embed_from_skeleton(const Phi3Skeleton &, const Hypergraph & guest, const ColoringCertificate & phi3_coloring)
        -> Embedding;

    /// {"indices": [...], "witnesses": {"u,v": w, ...}} with pairs in lexicographic order.
    auto write_embedding_json(std::ostream &, const Embedding &) -> void;
    auto read_embedding_json(std::istream &) -> Embedding;
}

#endif
