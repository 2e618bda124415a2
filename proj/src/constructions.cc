#include <uturan/constructions.hh>
#include <uturan/errors.hh>
#include <uturan/text_io.hh>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <string>

using namespace uturan;

using std::array;
using std::int64_t;
using std::optional;
using std::pair;
using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    /// Pair-usage table for 5-uniform linear hypergraphs.
    class PairUsage
    {
    public:
        explicit PairUsage(int n) :
            _n(n),
            _used(pair_count(n), false)
        {
        }

        auto used(Vertex u, Vertex v) const -> bool { return _used[pair_index(_n, u, v)]; }

        auto fits(span<const Vertex> e) const -> bool
        {
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b)
                    if (used(e[a], e[b]))
                        return false;
            return true;
        }

        auto take(span<const Vertex> e) -> void
        {
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b)
                    _used[pair_index(_n, e[a], e[b])] = true;
        }

    private:
        int _n;
        vector<bool> _used;
    };

    /// Visits, in lexicographic order, each 5-set whose pairs are all unused at
    /// the moment it is reached. The visitor may mark pairs used; returning false
    /// stops the sweep.
    auto sweep_addable(int n, const PairUsage & usage, const std::function<bool(const Edge &)> & visit) -> bool
    {
        Edge chosen;
        std::function<bool(Vertex)> extend = [&](Vertex from) -> bool {
            if (chosen.size() == 5) {
                if (usage.fits(chosen))
                    return visit(chosen);
                return true;
            }
            for (Vertex v = from; v <= n - int(5 - chosen.size()); ++v) {
                bool clash = std::ranges::any_of(chosen, [&](Vertex u) { return usage.used(u, v); });
                if (clash)
                    continue;
                chosen.push_back(v);
                bool go_on = extend(v + 1);
                chosen.pop_back();
                if (! go_on)
                    return false;
            }
            return true;
        };
        return extend(0);
    }

    auto require_linear_five(const Hypergraph & h) -> void
    {
        if (h.uniformity() != 5)
            throw MalformedInput("expected a 5-uniform hypergraph");
        if (! is_linear(h))
            throw MalformedInput("the 5-uniform hypergraph is not linear");
    }

    auto check_choice(const Hypergraph & h, const FanChoice & choice) -> void
    {
        if (choice.chosen.size() != h.edge_count())
            throw MalformedInput("fan choice lists " + to_string(choice.chosen.size()) + " edges, hypergraph has "
                + to_string(h.edge_count()));
        for (size_t i = 0; i < h.edge_count(); ++i) {
            auto [v, w] = choice.chosen[i];
            auto e = h.edge(i);
            if (v == w || std::ranges::find(e, v) == e.end() || std::ranges::find(e, w) == e.end())
                throw MalformedInput("fan choice for edge " + to_string(i) + " is not two of its vertices");
        }
    }
}

auto uturan::random_palette_hypergraph(const Palette & p, int n, SeededRng & rng) -> PaletteHypergraph
{
    if (n < 0)
        throw InvalidArgument("vertex count must be nonnegative");
    auto coloring = ColoringCertificate::uniform(n, 0);
    for (auto & c : coloring.pair_colors)
        c = static_cast<Color>(rng.below(p.color_count()));

    vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            Color cij = coloring.color(i, j);
            for (Vertex l = j + 1; l < n; ++l)
                if (p.contains(cij, coloring.color(j, l), coloring.color(i, l)))
                    edges.push_back({i, j, l});
        }
    return {canonicalize(3, n, std::move(edges)), std::move(coloring)};
}

auto uturan::affine_lines(int d) -> Hypergraph
{
    if (d < 1 || d > 5)
        throw InvalidArgument("affine dimension must be in [1, 5], got " + to_string(d));

    int n = 1;
    for (int t = 0; t < d; ++t)
        n *= 5;

    auto add = [d](int a, int b) {
        int sum = 0, scale = 1;
        for (int t = 0; t < d; ++t) {
            sum += ((a % 5 + b % 5) % 5) * scale;
            a /= 5;
            b /= 5;
            scale *= 5;
        }
        return sum;
    };

    vector<Edge> lines;
    lines.reserve(size_t(n) * (n - 1) / 20);
    for (int b = 1; b < n; ++b) {
        // one direction per projective point: lowest nonzero coordinate equal to 1
        int lowest = b;
        while (lowest % 5 == 0)
            lowest /= 5;
        if (lowest % 5 != 1)
            continue;
        for (int a = 0; a < n; ++a) {
            Edge line{a};
            for (int x = 1; x < 5; ++x)
                line.push_back(add(line.back(), b));
            // every line is met once per member point; keep the copy based at its minimum
            if (*std::ranges::min_element(line) == a)
                lines.push_back(std::move(line));
        }
    }
    return canonicalize(5, n, std::move(lines));
}

auto uturan::greedy_linear(int n, SeededRng & rng) -> Hypergraph
{
    if (n < 5)
        throw InvalidArgument("greedy_linear needs at least 5 vertices, got " + to_string(n));

    PairUsage usage(n);
    vector<Edge> edges;

    if (n <= 40) {
        vector<array<std::uint8_t, 5>> sets;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d)
                        for (int e = d + 1; e < n; ++e)
                            sets.push_back({std::uint8_t(a), std::uint8_t(b), std::uint8_t(c), std::uint8_t(d),
                                std::uint8_t(e)});
        rng.shuffle(span{sets});
        for (auto & s : sets) {
            Edge e(s.begin(), s.end());
            if (usage.fits(e)) {
                usage.take(e);
                edges.push_back(std::move(e));
            }
        }
    }
    else {
        vector<Vertex> pool(n);
        for (int v = 0; v < n; ++v)
            pool[v] = v;
        int64_t rejections = 0, limit = int64_t(n) * n;
        while (rejections < limit) {
            for (int t = 0; t < 5; ++t)
                std::swap(pool[t], pool[t + rng.below(n - t)]);
            Edge e(pool.begin(), pool.begin() + 5);
            std::ranges::sort(e);
            if (usage.fits(e)) {
                usage.take(e);
                edges.push_back(std::move(e));
                rejections = 0;
            }
            else
                ++rejections;
        }
        sweep_addable(n, usage, [&](const Edge & e) {
            usage.take(e);
            edges.push_back(e);
            return true;
        });
    }
    return canonicalize(5, n, std::move(edges));
}

auto uturan::find_addable_five_set(const Hypergraph & h) -> optional<Edge>
{
    if (h.uniformity() != 5)
        throw InvalidArgument("expected a 5-uniform hypergraph");
    PairUsage usage(h.vertex_count());
    for (size_t i = 0; i < h.edge_count(); ++i)
        usage.take(h.edge(i));
    optional<Edge> found;
    sweep_addable(h.vertex_count(), usage, [&](const Edge & e) {
        found = e;
        return false;
    });
    return found;
}

auto uturan::random_fan_choice(const Hypergraph & h, SeededRng & rng) -> FanChoice
{
    FanChoice choice;
    choice.chosen.reserve(h.edge_count());
    for (size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        auto index = static_cast<int>(rng.below(10));
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                if (index-- == 0)
                    choice.chosen.emplace_back(e[a], e[b]);
    }
    return choice;
}

auto uturan::fan_expansion(const Hypergraph & h, const FanChoice & choice) -> FanExpansion
{
    require_linear_five(h);
    check_choice(h, choice);

    FanExpansion result;
    vector<Edge> triples;
    triples.reserve(3 * h.edge_count());
    for (size_t i = 0; i < h.edge_count(); ++i) {
        auto [v, w] = std::minmax(choice.chosen[i].first, choice.chosen[i].second);
        result.choice.chosen.emplace_back(v, w);
        for (auto x : h.edge(i))
            if (x != v && x != w)
                triples.push_back({v, w, x});
    }
    result.hypergraph = canonicalize(3, h.vertex_count(), std::move(triples));
    return result;
}

auto uturan::fan_expansion(const Hypergraph & h, SeededRng & rng) -> FanExpansion
{
    require_linear_five(h);
    return fan_expansion(h, random_fan_choice(h, rng));
}

auto uturan::phi3_witness(const Hypergraph & h, const FanChoice & choice, span<const Vertex> ordering)
    -> ColoringCertificate
{
    using namespace colors;
    require_linear_five(h);
    check_choice(h, choice);

    auto cert = ColoringCertificate::uniform(h.vertex_count(), omega);
    if (! ordering.empty()) {
        check_permutation(ordering, h.vertex_count());
        cert.ordering.assign(ordering.begin(), ordering.end());
    }
    vector<int> position(h.vertex_count());
    for (size_t p = 0; p < cert.ordering.size(); ++p)
        position[cert.ordering[p]] = static_cast<int>(p);

    vector<bool> written(cert.pair_colors.size(), false);
    auto set = [&](Vertex a, Vertex b, Color c) {
        auto index = pair_index(h.vertex_count(), a, b);
        if (written[index])
            throw MalformedInput("pair " + to_string(a) + "," + to_string(b) + " lies in two edges");
        written[index] = true;
        cert.pair_colors[index] = c;
    };

    for (size_t e = 0; e < h.edge_count(); ++e) {
        auto [vi, vj] = choice.chosen[e];
        if (position[vi] > position[vj])
            std::swap(vi, vj);
        set(vi, vj, omega);
        for (auto vk : h.edge(e)) {
            if (vk == vi || vk == vj)
                continue;
            if (position[vk] < position[vi]) {
                set(vk, vi, alpha2);
                set(vk, vj, gamma2);
            }
            else if (position[vk] < position[vj]) {
                set(vi, vk, alpha1);
                set(vk, vj, beta1);
            }
            else {
                set(vj, vk, beta3);
                set(vi, vk, gamma3);
            }
        }
    }
    return cert;
}

auto uturan::growth_and_union_bound(int64_t n, int64_t m) -> GrowthBound
{
    if (n < 0 || m < 0)
        throw InvalidArgument("n and m must be nonnegative");
    GrowthBound g;
    g.log_factorial = std::lgamma(static_cast<double>(n) + 1.0);
    g.log_margin = g.log_factorial + static_cast<double>(m) * std::log1p(-0.1);
    g.holds = g.log_margin < 0;
    return g;
}

auto uturan::write_fan_choice(std::ostream & out, const FanChoice & choice) -> void
{
    string buffer;
    for (size_t i = 0; i < choice.chosen.size(); ++i) {
        buffer += to_string(i) + " " + to_string(choice.chosen[i].first) + " " + to_string(choice.chosen[i].second)
            + "\n";
        if (buffer.size() > (1u << 16)) {
            out << buffer;
            buffer.clear();
        }
    }
    out << buffer;
}

auto uturan::read_fan_choice(std::istream & in, size_t edge_count) -> FanChoice
{
    FanChoice choice;
    choice.chosen.resize(edge_count, {-1, -1});
    vector<bool> seen(edge_count, false);
    vector<long long> tokens;
    string keyword;
    int line_number = 0;
    while (detail::next_int_line(in, tokens, keyword, line_number)) {
        if (! keyword.empty() || tokens.size() != 3)
            throw MalformedInput("line " + to_string(line_number) + ": expected '<edge-index> <v> <v'>'");
        if (tokens[0] < 0 || size_t(tokens[0]) >= edge_count || seen[tokens[0]])
            throw MalformedInput("line " + to_string(line_number) + ": bad or repeated edge index");
        seen[tokens[0]] = true;
        auto a = static_cast<Vertex>(tokens[1]), b = static_cast<Vertex>(tokens[2]);
        choice.chosen[tokens[0]] = {std::min(a, b), std::max(a, b)};
    }
    if (std::ranges::find(seen, false) != seen.end())
        throw MalformedInput("fan choice file does not cover every edge");
    return choice;
}
