#ifndef UTURAN_AUDIT_HH
#define UTURAN_AUDIT_HH

#include <uturan/hypergraph.hh>
#include <uturan/palette.hh>
#include <uturan/partitioned.hh>
#include <uturan/rational.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace uturan
{
    /// |triples| / k^3.
    auto palette_density(const Palette &) -> Rational;

    enum class DensityMode
    {
        sampled,
        exact
    };

    struct DensityReport
    {
        DensityMode mode;
        Rational epsilon;
        std::optional<std::int64_t> sample_count;
        std::optional<std::uint64_t> seed;
        Rational min_density;
        std::vector<Vertex> argmin_subset;
    };

    /// Edges of H spanned by the vertex set, divided by C(|S|, 3).
    auto spanned_density(const Hypergraph &, std::span<const Vertex> subset) -> Rational;

    /// `samples` subsets of exactly ceil(eps n) vertices, each drawn as the
    /// first positions of a partial Fisher-Yates pass over 0..n-1 (position i
    /// swaps with i + below(n - i)) from one generator seeded with `seed`.
    /// Keeps the first strict minimum. Throws InvalidArgument when eps is not in
    /// (0, 1], samples < 1, H is not 3-uniform, or ceil(eps n) < 3.
    auto sampled_min_density(const Hypergraph &, const Rational & eps, std::int64_t samples, std::uint64_t seed)
        -> DensityReport;

    /// Minimum over every subset of at least max(3, ceil(eps n)) vertices, the
    /// first strict minimum in increasing bitmask order. Throws CapExceeded when
    /// n > cap and InvalidArgument when no subset qualifies.
    auto exact_min_density(const Hypergraph &, const Rational & eps, int cap = 20) -> DensityReport;

    auto write_density_json(std::ostream &, const DensityReport &) -> void;

    struct TriadCheck
    {
        TriadIndex triad;
        Rational density, a, b, c;
        /// a b c + 3 eps - density; negative means a violation.
        Rational slack;
        /// a b c >= 8/27 but a + b + c < 2.
        bool mean_violation;
    };

    struct TriadProductReport
    {
        Rational epsilon;
        std::vector<TriadCheck> triads;
        int violations = 0;
        int mean_violations = 0;
    };

    /// Compares every triad's density with a b c + 3 eps, where a, b, c are the
    /// fractions of its three parts with relative degree at least eps. Throws
    /// InvalidArgument when eps is not in (0, 1).
    auto triad_product_check(const PartitionedHypergraph &, const Rational & eps) -> TriadProductReport;

    auto write_triad_json(std::ostream &, const TriadProductReport &) -> void;
}

#endif
