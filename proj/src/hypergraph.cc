#include <uturan/errors.hh>
#include <uturan/hypergraph.hh>

#include <algorithm>
#include <string>

using namespace uturan;

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto check_edge(int k, int n, const Edge & e) -> void
    {
        if (int(e.size()) != k)
            throw MalformedInput("edge has " + to_string(e.size()) + " vertices, expected " + to_string(k));
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw MalformedInput("vertex " + to_string(e[i]) + " outside [0, " + to_string(n) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw MalformedInput("edge repeats vertex " + to_string(e[i]));
        }
    }

    auto check_header(int k, int n) -> void
    {
        if (k != 3 && k != 5)
            throw MalformedInput("uniformity must be 3 or 5, got " + to_string(k));
        if (n < 0)
            throw MalformedInput("negative vertex count");
    }
}

auto Hypergraph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(edge_count());
    for (size_t i = 0; i < edge_count(); ++i) {
        auto e = edge(i);
        result.emplace_back(e.begin(), e.end());
    }
    return result;
}

auto Hypergraph::contains(span<const Vertex> sorted_edge) const -> bool
{
    size_t lo = 0, hi = edge_count();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        auto e = edge(mid);
        if (std::lexicographical_compare(e.begin(), e.end(), sorted_edge.begin(), sorted_edge.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < edge_count() && std::ranges::equal(edge(lo), sorted_edge);
}

auto uturan::canonicalize(int k, int n, vector<Edge> edges) -> Hypergraph
{
    check_header(k, n);
    for (auto & e : edges) {
        std::sort(e.begin(), e.end());
        check_edge(k, n, e);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Hypergraph h;
    h._k = k;
    h._n = n;
    h._flat.reserve(edges.size() * k);
    for (auto & e : edges)
        h._flat.insert(h._flat.end(), e.begin(), e.end());
    return h;
}

auto uturan::canonicalize(const Hypergraph & h) -> Hypergraph
{
    return canonicalize(h.uniformity(), h.vertex_count(), h.edges());
}

auto uturan::canonical_or_throw(int k, int n, vector<Edge> edges) -> Hypergraph
{
    check_header(k, n);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (int(edges[i].size()) == k && ! std::is_sorted(edges[i].begin(), edges[i].end()))
            throw MalformedInput("edge " + to_string(i) + " is not in ascending order");
        check_edge(k, n, edges[i]);
        if (i > 0 && ! (edges[i - 1] < edges[i]))
            throw MalformedInput("edge " + to_string(i) + " is a duplicate or out of lexicographic order");
    }
    return canonicalize(k, n, std::move(edges));
}

auto uturan::is_linear(const Hypergraph & h) -> bool
{
    // linear iff no pair of vertices is covered by two edges
    vector<bool> covered(pair_count(h.vertex_count()), false);
    for (size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b) {
                auto p = pair_index(h.vertex_count(), e[a], e[b]);
                if (covered[p])
                    return false;
                covered[p] = true;
            }
    }
    return true;
}

auto uturan::relabel(const Hypergraph & h, span<const Vertex> permutation) -> Hypergraph
{
    if (int(permutation.size()) != h.vertex_count())
        throw MalformedInput("relabeling permutation has the wrong length");
    auto edges = h.edges();
    for (auto & e : edges)
        for (auto & v : e)
            v = permutation[v];
    return canonicalize(h.uniformity(), h.vertex_count(), std::move(edges));
}

auto uturan::edge_subset(const Hypergraph & h, const vector<bool> & keep) -> Hypergraph
{
    vector<Edge> edges;
    for (size_t i = 0; i < h.edge_count(); ++i)
        if (i < keep.size() && keep[i]) {
            auto e = h.edge(i);
            edges.emplace_back(e.begin(), e.end());
        }
    return canonicalize(h.uniformity(), h.vertex_count(), std::move(edges));
}
