#include <uturan/audit.hh>
#include <uturan/errors.hh>
#include <uturan/rng.hh>

#include <json.hpp>

#include <bit>
#include <numeric>
#include <ostream>

using namespace uturan;

using std::int64_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto choose3(int64_t t) -> int64_t { return t * (t - 1) * (t - 2) / 6; }

    auto check_three_uniform(const Hypergraph & h) -> void
    {
        if (h.uniformity() != 3)
            throw InvalidArgument("density audit needs a 3-uniform hypergraph");
    }

    auto rational_json(const Rational & r) -> nlohmann::ordered_json
    {
        return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_decimal()}};
    }
}

auto uturan::palette_density(const Palette & p) -> Rational
{
    int64_t k = p.color_count();
    return Rational{int64_t(p.size()), k * k * k};
}

auto uturan::spanned_density(const Hypergraph & h, span<const Vertex> subset) -> Rational
{
    check_three_uniform(h);
    if (subset.size() < 3)
        throw InvalidArgument("subset needs at least 3 vertices");
    vector<char> in(h.vertex_count(), 0);
    for (auto v : subset)
        in[v] = 1;
    int64_t count = 0;
    for (size_t e = 0; e < h.edge_count(); ++e) {
        auto ed = h.edge(e);
        count += in[ed[0]] && in[ed[1]] && in[ed[2]];
    }
    return Rational{count, choose3(int64_t(subset.size()))};
}

auto uturan::sampled_min_density(const Hypergraph & h, const Rational & eps, int64_t samples, std::uint64_t seed)
    -> DensityReport
{
    check_three_uniform(h);
    if (eps <= Rational{0} || eps > Rational{1})
        throw InvalidArgument("epsilon must lie in (0, 1]");
    if (samples < 1)
        throw InvalidArgument("need at least one sample");
    const int n = h.vertex_count();
    const int64_t size = (eps * Rational{n}).ceil();
    if (size < 3)
        throw InvalidArgument("subsets of " + to_string(size) + " vertices are degenerate (need at least 3)");

    DensityReport report{DensityMode::sampled, eps, samples, seed, Rational{2}, {}};
    SeededRng rng(seed);
    vector<Vertex> pool(n);
    for (int64_t round = 0; round < samples; ++round) {
        std::iota(pool.begin(), pool.end(), 0);
        for (int64_t i = 0; i < size; ++i)
            std::swap(pool[i], pool[i + rng.below(n - i)]);
        vector<Vertex> subset(pool.begin(), pool.begin() + size);
        std::ranges::sort(subset);
        auto d = spanned_density(h, subset);
        if (d < report.min_density) {
            report.min_density = d;
            report.argmin_subset = std::move(subset);
        }
    }
    return report;
}

auto uturan::exact_min_density(const Hypergraph & h, const Rational & eps, int cap) -> DensityReport
{
    check_three_uniform(h);
    if (eps <= Rational{0} || eps > Rational{1})
        throw InvalidArgument("epsilon must lie in (0, 1]");
    const int n = h.vertex_count();
    if (n > cap)
        throw CapExceeded("exact density enumeration over " + to_string(n) + " vertices exceeds the cap of "
            + to_string(cap) + " (raise it to override)");
    if (n > 30)
        throw InvalidArgument("exact density enumeration supports at most 30 vertices");
    const int min_size = std::max<int64_t>(3, (eps * Rational{n}).ceil());
    if (min_size > n)
        throw InvalidArgument("no subset has " + to_string(min_size) + " vertices");

    // spanned[S] = edges inside S, by summing edge indicators over subsets
    const std::uint32_t full = std::uint32_t(1) << n;
    vector<std::uint32_t> spanned(full, 0);
    for (size_t e = 0; e < h.edge_count(); ++e) {
        auto ed = h.edge(e);
        ++spanned[(1u << ed[0]) | (1u << ed[1]) | (1u << ed[2])];
    }
    for (int bit = 0; bit < n; ++bit)
        for (std::uint32_t s = 0; s < full; ++s)
            if (s & (1u << bit))
                spanned[s] += spanned[s ^ (1u << bit)];

    DensityReport report{DensityMode::exact, eps, std::nullopt, std::nullopt, Rational{2}, {}};
    std::uint32_t best = 0;
    int64_t best_num = 2, best_den = 1;
    for (std::uint32_t s = 0; s < full; ++s) {
        int size = std::popcount(s);
        if (size < min_size)
            continue;
        int64_t num = spanned[s], den = choose3(size);
        if (num * best_den < best_num * den) {
            best_num = num;
            best_den = den;
            best = s;
        }
    }
    report.min_density = Rational{best_num, best_den};
    for (int v = 0; v < n; ++v)
        if (best & (1u << v))
            report.argmin_subset.push_back(v);
    return report;
}

auto uturan::write_density_json(std::ostream & out, const DensityReport & r) -> void
{
    nlohmann::ordered_json doc;
    doc["mode"] = r.mode == DensityMode::sampled ? "sampled" : "exact";
    doc["epsilon"] = r.epsilon.to_string();
    doc["samples"] = r.sample_count ? nlohmann::ordered_json(*r.sample_count) : nlohmann::ordered_json(nullptr);
    doc["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    doc["min_density"] = rational_json(r.min_density);
    doc["argmin_subset"] = r.argmin_subset;
    out << doc.dump() << '\n';
}

auto uturan::triad_product_check(const PartitionedHypergraph & ph, const Rational & eps) -> TriadProductReport
{
    if (eps <= Rational{0} || eps >= Rational{1})
        throw InvalidArgument("epsilon must lie in (0, 1)");
    TriadProductReport report;
    report.epsilon = eps;
    const Rational mean_floor{8, 27};
    for (auto & profile : degree_profile(ph, eps)) {
        TriadCheck check;
        check.triad = profile.triad;
        check.density = triad_density(ph, profile.triad);
        check.a = profile.ij;
        check.b = profile.jk;
        check.c = profile.ik;
        auto product = check.a * check.b * check.c;
        check.slack = product + Rational{3} * eps - check.density;
        check.mean_violation = product >= mean_floor && check.a + check.b + check.c < Rational{2};
        report.violations += check.slack < Rational{0};
        report.mean_violations += check.mean_violation;
        report.triads.push_back(std::move(check));
    }
    return report;
}

auto uturan::write_triad_json(std::ostream & out, const TriadProductReport & r) -> void
{
    nlohmann::ordered_json doc;
    doc["epsilon"] = r.epsilon.to_string();
    doc["violations"] = r.violations;
    doc["mean_violations"] = r.mean_violations;
    auto & triads = doc["triads"] = nlohmann::ordered_json::array();
    Rational min_slack{2};
    for (auto & t : r.triads) {
        min_slack = std::min(min_slack, t.slack);
        triads.push_back({{"triad", {t.triad.i, t.triad.j, t.triad.k}},
            {"density", rational_json(t.density)},
            {"a", rational_json(t.a)},
            {"b", rational_json(t.b)},
            {"c", rational_json(t.c)},
            {"slack", rational_json(t.slack)},
            {"mean_violation", t.mean_violation}});
    }
    if (! r.triads.empty())
        doc["min_slack"] = rational_json(min_slack);
    out << doc.dump() << '\n';
}
