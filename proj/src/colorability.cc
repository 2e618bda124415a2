#include <uturan/colorability.hh>
#include <uturan/errors.hh>
#include <uturan/rng.hh>

#include "triple_csp.hh"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

using namespace uturan;
using namespace uturan::innards;

using std::array;
using std::atomic;
using std::optional;
using std::pair;
using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    auto palette_relation(const Palette & p) -> Relation
    {
        if (p.color_count() > 64)
            throw InvalidArgument("colorability search supports at most 64 colors, palette has "
                + to_string(p.color_count()));
        Relation rel;
        for (auto & t : p.triples())
            rel.push_back({std::uint8_t(t[0]), std::uint8_t(t[1]), std::uint8_t(t[2])});
        return rel;
    }

    /// The pairs that lie in at least one edge become CSP variables, numbered in
    /// lexicographic pair order.
    struct PairModel
    {
        int n = 0;
        vector<size_t> pairs;
        vector<pair<Vertex, Vertex>> endpoints;

        explicit PairModel(const Hypergraph & h) :
            n(h.vertex_count())
        {
            for (size_t i = 0; i < h.edge_count(); ++i) {
                auto e = h.edge(i);
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b)
                        pairs.push_back(pair_index(n, e[a], e[b]));
            }
            std::sort(pairs.begin(), pairs.end());
            pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

            endpoints.reserve(pairs.size());
            for (auto index : pairs)
                endpoints.push_back(pair_from_index(n, index));
        }

        auto var(Vertex u, Vertex v) const -> int
        {
            auto it = std::lower_bound(pairs.begin(), pairs.end(), pair_index(n, u, v));
            return static_cast<int>(it - pairs.begin());
        }

        auto size() const -> int { return static_cast<int>(pairs.size()); }
    };

    /// The edge's vertices listed by increasing position.
    auto orient(span<const Vertex> e, const vector<int> & position) -> array<Vertex, 3>
    {
        array<Vertex, 3> o{e[0], e[1], e[2]};
        std::sort(o.begin(), o.end(), [&](Vertex a, Vertex b) { return position[a] < position[b]; });
        return o;
    }

    auto post_oriented(TripleCsp & csp, const PairModel & model, const array<Vertex, 3> & o, const Relation * rel)
        -> bool
    {
        return csp.post(model.var(o[0], o[1]), model.var(o[1], o[2]), model.var(o[0], o[2]), rel);
    }

    auto witness_for_pair(const Hypergraph & h, const PositionProfile & profile, const vector<int> & position,
        Vertex u, Vertex v) -> InfeasibilityWitness
    {
        InfeasibilityWitness w;
        w.pair = std::minmax(u, v);
        for (size_t i = 0; i < h.edge_count(); ++i) {
            auto e = h.edge(i);
            if (std::ranges::find(e, u) == e.end() || std::ranges::find(e, v) == e.end())
                continue;
            auto o = orient(e, position);
            auto is = [&](Vertex a, Vertex b) { return (a == u && b == v) || (a == v && b == u); };
            ConstrainingEdge c{Edge(e.begin(), e.end()), PairRole::ij, profile.first};
            if (is(o[1], o[2]))
                c.role = PairRole::jk, c.positional_domain = profile.second;
            else if (is(o[0], o[2]))
                c.role = PairRole::ik, c.positional_domain = profile.third;
            w.edges.push_back(std::move(c));
        }
        return w;
    }

    auto incident_edges(const Hypergraph & h) -> vector<vector<size_t>>
    {
        vector<vector<size_t>> incident(h.vertex_count());
        for (size_t i = 0; i < h.edge_count(); ++i)
            for (auto v : h.edge(i))
                incident[v].push_back(i);
        return incident;
    }

    /// Connected components by shared edges, each sorted, ordered by smallest vertex.
    auto components(const Hypergraph & h) -> vector<vector<Vertex>>
    {
        vector<int> parent(h.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t i = 0; i < h.edge_count(); ++i) {
            auto e = h.edge(i);
            for (size_t a = 1; a < e.size(); ++a) {
                int r0 = find(e[0]), r1 = find(e[a]);
                if (r0 != r1)
                    parent[std::max(r0, r1)] = std::min(r0, r1);
            }
        }
        vector<vector<Vertex>> result;
        vector<int> slot(h.vertex_count(), -1);
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            int r = find(v);
            if (slot[r] < 0) {
                slot[r] = static_cast<int>(result.size());
                result.emplace_back();
            }
            result[slot[r]].push_back(v);
        }
        return result;
    }

    struct SharedState
    {
        atomic<bool> found{false};
        atomic<bool> out_of_budget{false};
        atomic<uint64_t> work{0};
        atomic<uint64_t> orderings{0};
        uint64_t budget = 0;

        auto spend(uint64_t amount = 1) -> bool
        {
            auto used = work.fetch_add(amount) + amount;
            if (budget != 0 && used > budget) {
                out_of_budget = true;
                return false;
            }
            return true;
        }
    };

    struct ComponentSolution
    {
        vector<Vertex> ordering;
        vector<pair<int, Color>> colors;
    };

    /// Depth-first enumeration of one component's orderings.
    class OrderingSearch
    {
    public:
        OrderingSearch(const Hypergraph & h, const PairModel & model, const Relation & rel, int color_count,
            const vector<Vertex> & component, const vector<vector<size_t>> & incident,
            const vector<Vertex> & previous_twin, SharedState & shared) :
            _h(h),
            _model(model),
            _rel(rel),
            _component(component),
            _incident(incident),
            _previous_twin(previous_twin),
            _shared(shared),
            _csp(model.size(), full_mask(color_count)),
            _position(h.vertex_count(), -1)
        {
        }

        /// Enumerates orderings beginning with `first`.
        auto run(Vertex first) -> void
        {
            place(first);
        }

        auto solution() const -> const optional<ComponentSolution> & { return _solution; }

    private:
        auto placeable(Vertex v) const -> bool
        {
            return _position[v] < 0 && (_previous_twin[v] < 0 || _position[_previous_twin[v]] >= 0);
        }

        /// Places v at the next position, recurses, and undoes. Returns false when
        /// the enumeration should stop (solution found, budget gone, or another
        /// worker succeeded).
        auto place(Vertex v) -> bool
        {
            if (_shared.found || ! _shared.spend())
                return false;

            auto mark = _csp.mark();
            _position[v] = static_cast<int>(_prefix.size());
            _prefix.push_back(v);

            bool consistent = true;
            for (size_t e : _incident[v]) {
                auto edge = _h.edge(e);
                bool complete = std::ranges::all_of(edge, [&](Vertex u) { return _position[u] >= 0; });
                if (complete && ! post_oriented(_csp, _model, orient(edge, _position), &_rel)) {
                    consistent = false;
                    break;
                }
            }

            bool keep_going = true;
            if (consistent) {
                if (_prefix.size() == _component.size())
                    keep_going = leaf();
                else
                    for (Vertex u : _component)
                        if (placeable(u) && ! (keep_going = place(u)))
                            break;
            }

            _csp.undo(mark);
            _prefix.pop_back();
            _position[v] = -1;
            return keep_going;
        }

        auto leaf() -> bool
        {
            ++_shared.orderings;
            uint64_t decisions = unlimited;
            if (_shared.budget != 0) {
                auto used = _shared.work.load();
                decisions = used >= _shared.budget ? 0 : _shared.budget - used;
            }
            auto before = decisions;
            auto outcome = _csp.solve(decisions);
            if (before != unlimited)
                _shared.spend(before - decisions);
            if (outcome == TripleCsp::Outcome::budget_exhausted) {
                _shared.out_of_budget = true;
                return false;
            }
            if (outcome == TripleCsp::Outcome::refuted)
                return true;

            ComponentSolution s;
            s.ordering = _prefix;
            for (Vertex u : _component)
                for (size_t e : _incident[u])
                    for (Vertex a : _h.edge(e))
                        if (a > u) {
                            int var = _model.var(u, a);
                            s.colors.emplace_back(var, _csp.value(var));
                        }
            _solution = std::move(s);
            _shared.found = true;
            return false;
        }

        const Hypergraph & _h;
        const PairModel & _model;
        const Relation & _rel;
        const vector<Vertex> & _component;
        const vector<vector<size_t>> & _incident;
        const vector<Vertex> & _previous_twin;
        SharedState & _shared;

        TripleCsp _csp;
        vector<int> _position;
        vector<Vertex> _prefix;
        optional<ComponentSolution> _solution;
    };

    auto previous_twins(const Hypergraph & h) -> vector<Vertex>
    {
        auto reps = interchangeable_classes(h);
        vector<Vertex> previous(h.vertex_count(), -1), last(h.vertex_count(), -1);
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            previous[v] = last[reps[v]];
            last[reps[v]] = v;
        }
        return previous;
    }

    enum class ComponentOutcome
    {
        solved,
        refuted,
        unknown
    };

    auto exhaustive_component(const Hypergraph & h, const PairModel & model, const Relation & rel,
        int color_count, const vector<Vertex> & component, const vector<vector<size_t>> & incident,
        const vector<Vertex> & previous_twin, const SearchOptions & options, SharedState & shared,
        optional<ComponentSolution> & solution) -> ComponentOutcome
    {
        shared.found = false;
        vector<Vertex> firsts;
        for (Vertex v : component)
            if (previous_twin[v] < 0)
                firsts.push_back(v);

        int workers = options.deterministic ? 1 : std::max(1, std::min<int>(options.threads, int(firsts.size())));
        if (workers == 1) {
            OrderingSearch search(h, model, rel, color_count, component, incident, previous_twin, shared);
            for (Vertex v : firsts) {
                search.run(v);
                if (shared.found || shared.out_of_budget)
                    break;
            }
            solution = search.solution();
        }
        else {
            atomic<size_t> next{0};
            vector<optional<ComponentSolution>> found(workers);
            vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    OrderingSearch search(h, model, rel, color_count, component, incident, previous_twin, shared);
                    for (size_t i = next++; i < firsts.size() && ! shared.found && ! shared.out_of_budget; i = next++)
                        search.run(firsts[i]);
                    found[w] = search.solution();
                });
            for (auto & t : pool)
                t.join();
            for (auto & f : found)
                if (f && ! solution)
                    solution = std::move(f);
        }

        if (solution)
            return ComponentOutcome::solved;
        return shared.out_of_budget ? ComponentOutcome::unknown : ComponentOutcome::refuted;
    }

    auto heuristic_component(const Hypergraph & h, const PairModel & model, const Relation & rel, int color_count,
        const vector<Vertex> & component, const vector<vector<size_t>> & incident, uint64_t ordering_budget,
        SeededRng & rng, SharedState & shared, optional<ComponentSolution> & solution) -> ComponentOutcome
    {
        vector<size_t> edges;
        for (Vertex u : component)
            for (size_t e : incident[u])
                if (h.edge(e)[0] == u)
                    edges.push_back(e);

        TripleCsp csp(model.size(), full_mask(color_count));
        vector<int> position(h.vertex_count(), -1);
        vector<Vertex> ordering = component;
        for (uint64_t attempt = 0; attempt < ordering_budget; ++attempt) {
            if (attempt > 0)
                rng.shuffle(span<Vertex>{ordering});
            ++shared.orderings;
            for (size_t p = 0; p < ordering.size(); ++p)
                position[ordering[p]] = static_cast<int>(p);

            auto mark = csp.mark();
            bool consistent = true;
            for (size_t e : edges)
                if (! post_oriented(csp, model, orient(h.edge(e), position), &rel)) {
                    consistent = false;
                    break;
                }
            uint64_t decisions = 10000;
            if (consistent && csp.solve(decisions) == TripleCsp::Outcome::solved) {
                ComponentSolution s;
                s.ordering = ordering;
                for (size_t e : edges) {
                    auto edge = h.edge(e);
                    for (int a = 0; a < 3; ++a)
                        for (int b = a + 1; b < 3; ++b) {
                            int var = model.var(edge[a], edge[b]);
                            s.colors.emplace_back(var, csp.value(var));
                        }
                }
                solution = std::move(s);
                csp.undo(mark);
                return ComponentOutcome::solved;
            }
            csp.undo(mark);
        }
        return ComponentOutcome::unknown;
    }
}

auto uturan::position_profile(const Palette & p) -> PositionProfile
{
    if (p.color_count() > 64)
        throw InvalidArgument("position profiles support at most 64 colors");
    PositionProfile profile;
    for (auto & t : p.triples()) {
        profile.first |= ColorMask{1} << t[0];
        profile.second |= ColorMask{1} << t[1];
        profile.third |= ColorMask{1} << t[2];
    }
    auto product = uint64_t(std::popcount(profile.first)) * std::popcount(profile.second)
        * std::popcount(profile.third);
    profile.is_product = product == p.size();
    return profile;
}

auto uturan::interchangeable_classes(const Hypergraph & h) -> vector<Vertex>
{
    int n = h.vertex_count();
    auto incident = incident_edges(h);
    vector<Vertex> rep(n);
    std::iota(rep.begin(), rep.end(), 0);

    auto swap_preserves = [&](Vertex u, Vertex v) {
        for (auto [from, to] : {pair{u, v}, pair{v, u}})
            for (size_t e : incident[from]) {
                auto edge = h.edge(e);
                if (std::ranges::find(edge, to) != edge.end())
                    continue;
                Edge image(edge.begin(), edge.end());
                std::ranges::replace(image, from, to);
                std::ranges::sort(image);
                if (! h.contains(image))
                    return false;
            }
        return true;
    };

    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (rep[u] == u && incident[u].size() == incident[v].size() && swap_preserves(u, v)) {
                rep[v] = u;
                break;
            }
    return rep;
}

auto uturan::check_fixed_ordering(const Hypergraph & h, const Palette & p, span<const Vertex> ordering,
    uint64_t decision_budget) -> FixedOrderingResult
{
    if (h.uniformity() != 3)
        throw InvalidArgument("colorability is defined for 3-uniform hypergraphs");
    check_permutation(ordering, h.vertex_count());
    auto rel = palette_relation(p);
    auto profile = position_profile(p);
    PairModel model(h);

    vector<int> position(h.vertex_count());
    for (size_t i = 0; i < ordering.size(); ++i)
        position[ordering[i]] = static_cast<int>(i);

    FixedOrderingResult result;

    // Intersecting positional projections first gives the simplest witness: one
    // pair whose positions across its edges share no color.
    vector<ColorMask> positional(model.size(), full_mask(p.color_count()));
    for (size_t i = 0; i < h.edge_count(); ++i) {
        auto o = orient(h.edge(i), position);
        positional[model.var(o[0], o[1])] &= profile.first;
        positional[model.var(o[1], o[2])] &= profile.second;
        positional[model.var(o[0], o[2])] &= profile.third;
    }
    for (int var = 0; var < model.size(); ++var)
        if (positional[var] == 0) {
            auto [u, v] = model.endpoints[var];
            result.witness = witness_for_pair(h, profile, position, u, v);
            return result;
        }

    TripleCsp csp(model.size(), full_mask(p.color_count()));
    for (size_t i = 0; i < h.edge_count(); ++i)
        if (! post_oriented(csp, model, orient(h.edge(i), position), &rel)) {
            auto [u, v] = model.endpoints[csp.failed_var()];
            result.witness = witness_for_pair(h, profile, position, u, v);
            return result;
        }

    uint64_t decisions = decision_budget == 0 ? unlimited : decision_budget;
    switch (csp.solve(decisions)) {
    case TripleCsp::Outcome::budget_exhausted:
        result.budget_exhausted = true;
        return result;
    case TripleCsp::Outcome::refuted:
        result.witness = InfeasibilityWitness{};
        result.witness->search_exhausted = true;
        return result;
    case TripleCsp::Outcome::solved:
        break;
    }

    ColoringCertificate cert = ColoringCertificate::uniform(h.vertex_count(), 0);
    cert.ordering.assign(ordering.begin(), ordering.end());
    for (int var = 0; var < model.size(); ++var)
        cert.pair_colors[model.pairs[var]] = csp.value(var);
    result.certificate = std::move(cert);
    return result;
}

auto uturan::search_colorable(const Hypergraph & h, const Palette & p, const SearchOptions & options)
    -> SearchResult
{
    if (h.uniformity() != 3)
        throw InvalidArgument("colorability is defined for 3-uniform hypergraphs");
    if (options.mode == SearchMode::exhaustive && h.vertex_count() > options.cap && ! options.allow_over_cap)
        throw CapExceeded("exhaustive search on " + to_string(h.vertex_count()) + " vertices exceeds the cap of "
            + to_string(options.cap));

    auto rel = palette_relation(p);
    PairModel model(h);
    auto incident = incident_edges(h);
    auto parts = components(h);

    SharedState shared;
    shared.budget = options.budget;
    SeededRng rng(options.seed);
    vector<Vertex> previous_twin;
    if (options.mode == SearchMode::exhaustive)
        previous_twin = previous_twins(h);

    SearchResult result;
    ColoringCertificate cert = ColoringCertificate::uniform(h.vertex_count(), 0);
    cert.ordering.clear();
    bool unknown = false;

    for (auto & component : parts) {
        bool has_edges = std::ranges::any_of(component, [&](Vertex v) { return ! incident[v].empty(); });
        if (! has_edges) {
            cert.ordering.insert(cert.ordering.end(), component.begin(), component.end());
            continue;
        }

        optional<ComponentSolution> solution;
        ComponentOutcome outcome;
        if (options.mode == SearchMode::exhaustive)
            outcome = exhaustive_component(h, model, rel, p.color_count(), component, incident, previous_twin,
                options, shared, solution);
        else
            outcome = heuristic_component(h, model, rel, p.color_count(), component, incident,
                options.budget == 0 ? 1000 : options.budget, rng, shared, solution);

        if (outcome == ComponentOutcome::refuted) {
            result.verdict = Verdict::not_colorable;
            result.orderings_examined = shared.orderings;
            return result;
        }
        if (outcome == ComponentOutcome::unknown) {
            unknown = true;
            continue;
        }
        cert.ordering.insert(cert.ordering.end(), solution->ordering.begin(), solution->ordering.end());
        for (auto [var, color] : solution->colors)
            cert.pair_colors[model.pairs[var]] = color;
    }

    result.orderings_examined = shared.orderings;
    if (unknown) {
        result.verdict = Verdict::unknown;
        return result;
    }
    result.verdict = Verdict::colorable;
    result.certificate = std::move(cert);
    return result;
}

auto uturan::verify_certificate(const Hypergraph & h, const Palette & p, const ColoringCertificate & cert)
    -> VerificationResult
{
    if (h.uniformity() != 3)
        throw InvalidArgument("colorability is defined for 3-uniform hypergraphs");
    if (cert.vertex_count != h.vertex_count())
        throw MalformedInput("certificate is for " + to_string(cert.vertex_count) + " vertices, hypergraph has "
            + to_string(h.vertex_count()));
    check_permutation(cert.ordering, cert.vertex_count);
    if (cert.pair_colors.size() != pair_count(cert.vertex_count))
        throw MalformedInput("certificate does not color every pair");
    for (auto c : cert.pair_colors)
        if (c < 0 || c >= p.color_count())
            throw MalformedInput("certificate color " + to_string(c) + " outside the palette's "
                + to_string(p.color_count()) + " colors");

    vector<int> position(h.vertex_count());
    for (size_t i = 0; i < cert.ordering.size(); ++i)
        position[cert.ordering[i]] = static_cast<int>(i);

    for (size_t i = 0; i < h.edge_count(); ++i) {
        auto o = orient(h.edge(i), position);
        if (! p.contains(cert.color(o[0], o[1]), cert.color(o[1], o[2]), cert.color(o[0], o[2]))) {
            auto e = h.edge(i);
            return {false, Edge(e.begin(), e.end())};
        }
    }
    return {true, std::nullopt};
}
