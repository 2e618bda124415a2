#include <uturan/errors.hh>
#include <uturan/selectors.hh>
#include <uturan/skeleton.hh>

using namespace uturan;
using namespace uturan::colors;

using std::int64_t;
using std::span;
using std::string;
using std::vector;

auto uturan::stage_name(SkeletonStage s) -> string
{
    switch (s) {
    case SkeletonStage::profile: return "profile";
    case SkeletonStage::omega: return "omega";
    case SkeletonStage::alpha1: return "alpha1";
    case SkeletonStage::beta1: return "beta1";
    case SkeletonStage::alpha2: return "alpha2";
    case SkeletonStage::gamma2: return "gamma2";
    case SkeletonStage::beta3: return "beta3";
    case SkeletonStage::gamma3: return "gamma3";
    }
    return "?";
}

namespace
{
    /// count * den >= num * s, i.e. count >= eps * s.
    auto at_least_eps_fraction(int64_t count, const Rational & eps, int s) -> bool
    {
        return Rational{count, s} >= eps;
    }
}

auto uturan::extract_phi3_skeleton(const PartitionedHypergraph & ph, const Rational & delta, int min_size)
    -> SkeletonResult
{
    if (ph.parts() < 3)
        throw InvalidArgument("skeleton extraction needs N >= 3");
    if (delta <= Rational{0} || delta >= Rational{1})
        throw InvalidArgument("delta must lie in (0, 1)");

    const Rational eps = delta / Rational{20};
    const Rational two_eps = eps * Rational{2};
    const int s = ph.part_size();

    SkeletonResult result;
    Phi3Skeleton sk;

    auto record = [&](SkeletonStage stage, const vector<int> & indices) {
        result.stage_sizes.emplace_back(stage, int(indices.size()));
        if (int(indices.size()) < min_size) {
            result.failed_stage = stage;
            return false;
        }
        return true;
    };

    // profile window
    auto window = greedy_profile_window(ph, two_eps);
    sk.a = window.a;
    sk.b = window.b;
    sk.c = window.c;
    if (! record(SkeletonStage::profile, window.indices))
        return result;
    if (window.a == Rational{0} || window.b == Rational{0} || window.c == Rational{0}) {
        result.failed_stage = SkeletonStage::profile;
        return result;
    }
    vector<int> indices = window.indices;

    auto significant = [&](int p, int q, int toward) { return significant_vertices(ph, {p, q}, toward, two_eps); };

    auto run_stage = [&](SkeletonStage stage, Color role, vector<SelectorConstraint> constraints) {
        auto sel = greedy_selection(ph, constraints, indices);
        if (! record(stage, sel.indices))
            return false;
        indices = sel.indices;
        sk.roles[role] = sel.witnesses;
        return true;
    };

    // omega_ij: significant toward the outer indices a < i < b < j < c, and
    // toward every other index so later stages can rely on its degree
    vector<SelectorConstraint> omega_constraints{
        {SelectorShape::first,
            [&](span<const int> x) {
                auto [i, j, a, b, c] = std::tuple{x[0], x[1], x[2], x[3], x[4]};
                return significant(i, j, c) & significant(i, j, a) & significant(i, j, b);
            }},
        {SelectorShape::every_third, [&](span<const int> x) { return significant(x[0], x[1], x[2]); }}};
    if (! run_stage(SkeletonStage::omega, omega, omega_constraints))
        return result;

    auto omega_at = [&](int i, int j) { return sk.vertex(omega, i, j); };

    // alpha1_ij lies with omega_ik in at least eps*s edges of the (i,j,k)-triad
    if (! run_stage(SkeletonStage::alpha1, alpha1,
            {{SelectorShape::ij, [&](span<const int> x) {
                  int i = x[0], j = x[1], k = x[2], w = omega_at(i, k);
                  VertexSet set(s);
                  for (int v = 0; v < s; ++v) {
                      int64_t count = 0;
                      for (int b = 0; b < s; ++b)
                          count += ph.has_edge({i, j, k}, {v, b, w});
                      if (at_least_eps_fraction(count, eps, s))
                          set.set(v);
                  }
                  return set;
              }}}))
        return result;

    if (! run_stage(SkeletonStage::beta1, beta1,
            {{SelectorShape::jk, [&](span<const int> x) {
                  int i = x[0], j = x[1], k = x[2];
                  int a1 = sk.vertex(alpha1, i, j), w = omega_at(i, k);
                  VertexSet set(s);
                  for (int v = 0; v < s; ++v)
                      if (ph.has_edge({i, j, k}, {a1, v, w}))
                          set.set(v);
                  return set;
              }}}))
        return result;

    // alpha2_ij lies with omega_jk in at least eps*s edges
    if (! run_stage(SkeletonStage::alpha2, alpha2,
            {{SelectorShape::ij, [&](span<const int> x) {
                  int i = x[0], j = x[1], k = x[2], w = omega_at(j, k);
                  VertexSet set(s);
                  for (int v = 0; v < s; ++v) {
                      int64_t count = 0;
                      for (int c = 0; c < s; ++c)
                          count += ph.has_edge({i, j, k}, {v, w, c});
                      if (at_least_eps_fraction(count, eps, s))
                          set.set(v);
                  }
                  return set;
              }}}))
        return result;

    if (! run_stage(SkeletonStage::gamma2, gamma2,
            {{SelectorShape::ik, [&](span<const int> x) {
                  int i = x[0], j = x[1], k = x[2];
                  int a2 = sk.vertex(alpha2, i, j), w = omega_at(j, k);
                  VertexSet set(s);
                  for (int v = 0; v < s; ++v)
                      if (ph.has_edge({i, j, k}, {a2, w, v}))
                          set.set(v);
                  return set;
              }}}))
        return result;

    // beta3_jk lies with omega_ij in at least eps*s edges
    if (! run_stage(SkeletonStage::beta3, beta3,
            {{SelectorShape::jk, [&](span<const int> x) {
                  int i = x[0], j = x[1], k = x[2], w = omega_at(i, j);
                  VertexSet set(s);
                  for (int v = 0; v < s; ++v) {
                      int64_t count = 0;
                      for (int c = 0; c < s; ++c)
                          count += ph.has_edge({i, j, k}, {w, v, c});
                      if (at_least_eps_fraction(count, eps, s))
                          set.set(v);
                  }
                  return set;
              }}}))
        return result;

    if (! run_stage(SkeletonStage::gamma3, gamma3,
            {{SelectorShape::ik, [&](span<const int> x) {
                  int i = x[0], j = x[1], k = x[2];
                  int w = omega_at(i, j), b3 = sk.vertex(beta3, j, k);
                  VertexSet set(s);
                  for (int v = 0; v < s; ++v)
                      if (ph.has_edge({i, j, k}, {w, b3, v}))
                          set.set(v);
                  return set;
              }}}))
        return result;

    // later stages may have shrunk the index set; keep only pairs inside it
    sk.indices = indices;
    for (auto & role : sk.roles)
        std::erase_if(role, [&](const auto & entry) {
            return ! std::ranges::binary_search(indices, entry.first.first)
                || ! std::ranges::binary_search(indices, entry.first.second);
        });
    result.skeleton = std::move(sk);
    return result;
}

auto uturan::skeleton_holds(const PartitionedHypergraph & ph, const Phi3Skeleton & sk) -> bool
{
    auto & I = sk.indices;
    for (size_t x = 0; x < I.size(); ++x)
        for (size_t y = x + 1; y < I.size(); ++y)
            for (size_t z = y + 1; z < I.size(); ++z) {
                int i = I[x], j = I[y], k = I[z];
                TriadIndex t{i, j, k};
                if (! ph.has_edge(t, {sk.vertex(alpha1, i, j), sk.vertex(beta1, j, k), sk.vertex(omega, i, k)})
                    || ! ph.has_edge(t, {sk.vertex(alpha2, i, j), sk.vertex(omega, j, k), sk.vertex(gamma2, i, k)})
                    || ! ph.has_edge(t, {sk.vertex(omega, i, j), sk.vertex(beta3, j, k), sk.vertex(gamma3, i, k)}))
                    return false;
            }
    return true;
}
