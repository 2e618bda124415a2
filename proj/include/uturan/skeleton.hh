#ifndef UTURAN_SKELETON_HH
#define UTURAN_SKELETON_HH

#include <uturan/palette.hh>
#include <uturan/partitioned.hh>
#include <uturan/rational.hh>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uturan
{
    enum class SkeletonStage
    {
        profile,
        omega,
        alpha1,
        beta1,
        alpha2,
        gamma2,
        beta3,
        gamma3
    };

    auto stage_name(SkeletonStage) -> std::string;

    /// One chosen vertex per phi3 color on every part V_ij, i < j in `indices`,
    /// such that for all i < j < k in `indices` the triads contain
    ///   (alpha1_ij, beta1_jk, omega_ik),
    ///   (alpha2_ij, omega_jk, gamma2_ik),
    ///   (omega_ij, beta3_jk, gamma3_ik).
    struct Phi3Skeleton
    {
        std::vector<int> indices;
        Rational a, b, c;
        /// Indexed by phi3 color (see colors::omega etc.).
        std::array<std::map<std::pair<int, int>, int>, 7> roles;

        auto vertex(Color role, int i, int j) const -> int { return roles[role].at({i, j}); }
    };

    struct SkeletonResult
    {
        std::optional<Phi3Skeleton> skeleton;
        std::optional<SkeletonStage> failed_stage;
        /// Size of the surviving index set after each stage that ran.
        std::vector<std::pair<SkeletonStage, int>> stage_sizes;
    };

    /// Runs the staged extraction with eps = delta / 20: a profile window of
    /// width and threshold 2 eps, omega on sets of vertices significant toward
    /// every third index, then alpha1 and beta1, alpha2 and gamma2, beta3 and
    /// gamma3, each stage a greedy selector pass over the previous index set.
    /// Fails at the first stage that leaves fewer than `min_size` indices.
    /// Throws InvalidArgument when N < 3 or delta is not in (0, 1).
    auto extract_phi3_skeleton(const PartitionedHypergraph &, const Rational & delta, int min_size = 3)
        -> SkeletonResult;

    /// Checks the three triad patterns for every i < j < k in the skeleton.
    auto skeleton_holds(const PartitionedHypergraph &, const Phi3Skeleton &) -> bool;
}

#endif
