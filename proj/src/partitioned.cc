#include <uturan/errors.hh>
#include <uturan/partitioned.hh>
#include <uturan/text_io.hh>

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <string>

using namespace uturan;

using std::int64_t;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

PartitionedHypergraph::PartitionedHypergraph(int parts, int part_size) :
    _n(parts),
    _s(part_size)
{
    if (parts < 1)
        throw InvalidArgument("a partitioned hypergraph needs N >= 1");
    if (part_size < 1 || part_size > 255)
        throw InvalidArgument("part size must be in [1, 255], got " + to_string(part_size));
    size_t triads = size_t(parts) * (parts - 1) * (parts - 2) / 6;
    _members.assign(triads, {});
    _counts.assign(triads, 0);
}

auto PartitionedHypergraph::triad_id(TriadIndex t) const -> size_t
{
    if (! (1 <= t.i && t.i < t.j && t.j < t.k && t.k <= _n))
        throw InvalidArgument("no triad (" + to_string(t.i) + "," + to_string(t.j) + "," + to_string(t.k)
            + ") with N = " + to_string(_n));
    // rank of {i, j, k} in the lexicographic listing of 3-subsets of [1, N]
    auto choose2 = [](int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; };
    auto choose3 = [](int64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; };
    int64_t n = _n;
    int64_t rank = choose3(n) - choose3(n - t.i + 1);
    rank += choose2(n - t.i) - choose2(n - t.j + 1);
    rank += t.k - t.j - 1;
    return static_cast<size_t>(rank);
}

auto PartitionedHypergraph::triad_at(size_t id) const -> TriadIndex
{
    size_t seen = 0;
    for (int i = 1; i <= _n; ++i)
        for (int j = i + 1; j <= _n; ++j) {
            size_t row = size_t(_n - j);
            if (id < seen + row)
                return {i, j, int(j + 1 + (id - seen))};
            seen += row;
        }
    throw InvalidArgument("triad id out of range");
}

auto PartitionedHypergraph::check_vertex(int v) const -> void
{
    if (v < 0 || v >= _s)
        throw InvalidArgument("vertex " + to_string(v) + " outside [0, " + to_string(_s) + ")");
}

auto PartitionedHypergraph::has_edge(TriadIndex t, TriadEdge e) const -> bool
{
    auto & m = _members[triad_id(t)];
    return ! m.empty() && m[cell(e)];
}

auto PartitionedHypergraph::add_edge(TriadIndex t, TriadEdge e) -> void
{
    check_vertex(e.a);
    check_vertex(e.b);
    check_vertex(e.c);
    auto id = triad_id(t);
    auto & m = _members[id];
    if (m.empty())
        m.assign(size_t(_s) * _s * _s, 0);
    if (! m[cell(e)]) {
        m[cell(e)] = 1;
        ++_counts[id];
    }
}

auto PartitionedHypergraph::edge_count(TriadIndex t) const -> int64_t
{
    return _counts[triad_id(t)];
}

auto PartitionedHypergraph::total_edge_count() const -> int64_t
{
    int64_t total = 0;
    for (auto c : _counts)
        total += c;
    return total;
}

auto PartitionedHypergraph::triad_edges(TriadIndex t) const -> vector<TriadEdge>
{
    vector<TriadEdge> result;
    auto & m = _members[triad_id(t)];
    if (m.empty())
        return result;
    for (int a = 0; a < _s; ++a)
        for (int b = 0; b < _s; ++b)
            for (int c = 0; c < _s; ++c)
                if (m[cell({a, b, c})])
                    result.push_back({a, b, c});
    return result;
}

auto PartitionedHypergraph::degree(TriadIndex t, TriadRole role, int v) const -> int64_t
{
    check_vertex(v);
    auto & m = _members[triad_id(t)];
    if (m.empty())
        return 0;
    int64_t count = 0;
    for (int x = 0; x < _s; ++x)
        for (int y = 0; y < _s; ++y) {
            TriadEdge e = role == TriadRole::ij ? TriadEdge{v, x, y}
                : role == TriadRole::jk         ? TriadEdge{x, v, y}
                                                : TriadEdge{x, y, v};
            count += m[cell(e)];
        }
    return count;
}

auto uturan::triad_toward(Part p, int toward) -> pair<TriadIndex, TriadRole>
{
    if (! (p.i < p.j) || toward == p.i || toward == p.j)
        throw InvalidArgument("part (" + to_string(p.i) + "," + to_string(p.j) + ") and index " + to_string(toward)
            + " do not span a triad");
    if (toward > p.j)
        return {{p.i, p.j, toward}, TriadRole::ij};
    if (toward > p.i)
        return {{p.i, toward, p.j}, TriadRole::ik};
    return {{toward, p.i, p.j}, TriadRole::jk};
}

auto uturan::triad_density(const PartitionedHypergraph & ph, TriadIndex t) -> Rational
{
    int64_t s = ph.part_size();
    return Rational{ph.edge_count(t), s * s * s};
}

auto uturan::min_density(const PartitionedHypergraph & ph) -> Rational
{
    if (ph.triad_count() == 0)
        throw InvalidArgument("a partitioned hypergraph with N < 3 has no triads");
    Rational best{1};
    for (size_t id = 0; id < ph.triad_count(); ++id)
        best = std::min(best, triad_density(ph, ph.triad_at(id)));
    return best;
}

auto uturan::relative_degree(const PartitionedHypergraph & ph, Part p, int v, int toward) -> Rational
{
    auto [triad, role] = triad_toward(p, toward);
    int64_t s = ph.part_size();
    return Rational{ph.degree(triad, role, v), s * s};
}

auto uturan::significant_vertices(const PartitionedHypergraph & ph, Part p, int toward, const Rational & threshold)
    -> VertexSet
{
    auto [triad, role] = triad_toward(p, toward);
    int64_t s = ph.part_size();
    VertexSet result(ph.part_size());
    for (int v = 0; v < ph.part_size(); ++v)
        if (Rational{ph.degree(triad, role, v), s * s} >= threshold)
            result.set(v);
    return result;
}

auto uturan::partitioned_from_colors(const Palette & p, int parts, int part_size,
    const std::function<Color(Part, int)> & part_color) -> PartitionedHypergraph
{
    PartitionedHypergraph ph(parts, part_size);
    auto colors_of = [&](Part q) {
        vector<Color> c(part_size);
        for (int v = 0; v < part_size; ++v)
            c[v] = part_color(q, v);
        return c;
    };
    for (int i = 1; i <= parts; ++i)
        for (int j = i + 1; j <= parts; ++j) {
            auto cij = colors_of({i, j});
            for (int k = j + 1; k <= parts; ++k) {
                auto cjk = colors_of({j, k}), cik = colors_of({i, k});
                for (int a = 0; a < part_size; ++a)
                    for (int b = 0; b < part_size; ++b)
                        for (int c = 0; c < part_size; ++c)
                            if (p.contains(cij[a], cjk[b], cik[c]))
                                ph.add_edge({i, j, k}, {a, b, c});
            }
        }
    return ph;
}

auto uturan::random_partitioned_from_palette(const Palette & p, int parts, int part_size, SeededRng & rng)
    -> PartitionedHypergraph
{
    if (parts < 3 || part_size < 1)
        throw InvalidArgument("random partitioned hosts need N >= 3 and s >= 1");
    // part (i, j) occupies row (i, j) of an N x N table; draws go in lexicographic part order
    vector<vector<Color>> colors(size_t(parts + 1) * (parts + 1));
    for (int i = 1; i <= parts; ++i)
        for (int j = i + 1; j <= parts; ++j) {
            auto & c = colors[size_t(i) * (parts + 1) + j];
            c.resize(part_size);
            for (int v = 0; v < part_size; ++v)
                c[v] = static_cast<Color>(rng.below(p.color_count()));
        }
    return partitioned_from_colors(p, parts, part_size,
        [&](Part q, int v) { return colors[size_t(q.i) * (parts + 1) + q.j][v]; });
}

auto uturan::phi3_role_host(int parts) -> PartitionedHypergraph
{
    return partitioned_from_colors(phi3(), parts, 7, [](Part, int v) { return Color{v}; });
}

auto uturan::degree_profile(const PartitionedHypergraph & ph, const Rational & threshold) -> vector<TriadProfile>
{
    if (threshold <= Rational{0} || threshold > Rational{1})
        throw InvalidArgument("degree threshold must lie in (0, 1]");
    int64_t s = ph.part_size();
    vector<TriadProfile> result;
    result.reserve(ph.triad_count());
    for (size_t id = 0; id < ph.triad_count(); ++id) {
        auto t = ph.triad_at(id);
        auto fraction = [&](TriadRole role) {
            int64_t count = 0;
            for (int v = 0; v < ph.part_size(); ++v)
                if (Rational{ph.degree(t, role, v), s * s} >= threshold)
                    ++count;
            return Rational{count, s};
        };
        result.push_back({t, fraction(TriadRole::ij), fraction(TriadRole::jk), fraction(TriadRole::ik)});
    }
    return result;
}

namespace
{
    struct WindowTracker
    {
        Rational lo[3], hi[3];
        bool any = false;

        auto admits(const TriadProfile & p, const Rational & width) const -> bool
        {
            const Rational * v[3] = {&p.ij, &p.jk, &p.ik};
            for (int r = 0; r < 3; ++r) {
                Rational l = any ? std::min(lo[r], *v[r]) : *v[r];
                Rational h = any ? std::max(hi[r], *v[r]) : *v[r];
                if (! (h - l < width))
                    return false;
            }
            return true;
        }

        auto add(const TriadProfile & p) -> void
        {
            const Rational * v[3] = {&p.ij, &p.jk, &p.ik};
            for (int r = 0; r < 3; ++r) {
                lo[r] = any ? std::min(lo[r], *v[r]) : *v[r];
                hi[r] = any ? std::max(hi[r], *v[r]) : *v[r];
            }
            any = true;
        }
    };

    auto window_of(const vector<int> & indices, const WindowTracker & w) -> ProfileWindow
    {
        if (! w.any)
            return {indices, Rational{0}, Rational{0}, Rational{0}};
        return {indices, w.lo[0], w.lo[1], w.lo[2]};
    }

    /// Adds `next` to the tracker if every new triad fits; leaves it unchanged otherwise.
    auto try_extend(const PartitionedHypergraph & ph, const vector<TriadProfile> & profiles,
        const vector<int> & indices, int next, const Rational & width, WindowTracker & w) -> bool
    {
        WindowTracker trial = w;
        for (size_t x = 0; x < indices.size(); ++x)
            for (size_t y = x + 1; y < indices.size(); ++y) {
                int idx[3] = {indices[x], indices[y], next};
                std::sort(idx, idx + 3);
                auto & p = profiles[ph.triad_id({idx[0], idx[1], idx[2]})];
                if (! trial.admits(p, width))
                    return false;
                trial.add(p);
            }
        w = trial;
        return true;
    }
}

auto uturan::greedy_profile_window(const PartitionedHypergraph & ph, const Rational & width) -> ProfileWindow
{
    auto profiles = degree_profile(ph, width);
    vector<int> indices;
    WindowTracker w;
    for (int next = 1; next <= ph.parts(); ++next)
        if (try_extend(ph, profiles, indices, next, width, w))
            indices.push_back(next);
    return window_of(indices, w);
}

auto uturan::find_uniform_profile_subset(const PartitionedHypergraph & ph, const Rational & width, int target,
    SelectionMode mode, int cap) -> optional<ProfileWindow>
{
    if (target < 0 || target > ph.parts())
        throw InvalidArgument("target size must be in [0, N]");
    auto profiles = degree_profile(ph, width);

    if (mode == SelectionMode::greedy) {
        vector<int> indices;
        WindowTracker w;
        for (int next = 1; next <= ph.parts() && int(indices.size()) < target; ++next)
            if (try_extend(ph, profiles, indices, next, width, w))
                indices.push_back(next);
        if (int(indices.size()) < target)
            return std::nullopt;
        return window_of(indices, w);
    }

    if (cap > 0 && ph.parts() > cap)
        throw CapExceeded("exhaustive profile search with N = " + to_string(ph.parts()) + " exceeds the cap of "
            + to_string(cap));

    // depth-first over increasing index sequences visits subsets lexicographically
    vector<int> indices;
    optional<ProfileWindow> found;
    std::function<void(int, const WindowTracker &)> extend = [&](int from, const WindowTracker & w) {
        if (int(indices.size()) == target) {
            found = window_of(indices, w);
            return;
        }
        for (int next = from; next <= ph.parts() - (target - int(indices.size()) - 1) && ! found; ++next) {
            WindowTracker trial = w;
            if (! try_extend(ph, profiles, indices, next, width, trial))
                continue;
            indices.push_back(next);
            extend(next + 1, trial);
            indices.pop_back();
        }
    };
    extend(1, WindowTracker{});
    return found;
}

auto uturan::write_partitioned(std::ostream & out, const PartitionedHypergraph & ph) -> void
{
    string buffer = "phg " + to_string(ph.parts()) + " " + to_string(ph.part_size()) + "\n";
    for (size_t id = 0; id < ph.triad_count(); ++id) {
        auto t = ph.triad_at(id);
        for (auto & e : ph.triad_edges(t)) {
            buffer += to_string(t.i) + " " + to_string(t.j) + " " + to_string(t.k) + " " + to_string(e.a) + " "
                + to_string(e.b) + " " + to_string(e.c) + "\n";
            if (buffer.size() > (1u << 16)) {
                out << buffer;
                buffer.clear();
            }
        }
    }
    out << buffer;
}

auto uturan::read_partitioned(std::istream & in, bool normalize) -> PartitionedHypergraph
{
    vector<long long> tokens;
    string keyword;
    int line_number = 0;
    if (! detail::next_int_line(in, tokens, keyword, line_number))
        throw MalformedInput("empty partitioned hypergraph file");
    if (keyword != "phg" || tokens.size() != 2)
        throw MalformedInput("line " + to_string(line_number) + ": expected header 'phg <N> <s>'");
    if (tokens[0] < 1 || tokens[0] > 1000 || tokens[1] < 1 || tokens[1] > 255)
        throw MalformedInput("line " + to_string(line_number) + ": N or s out of range");

    PartitionedHypergraph ph{static_cast<int>(tokens[0]), static_cast<int>(tokens[1])};
    std::array<long long, 6> previous{};
    bool first = true;
    while (detail::next_int_line(in, tokens, keyword, line_number)) {
        if (! keyword.empty() || tokens.size() != 6)
            throw MalformedInput("line " + to_string(line_number) + ": expected 'i j k a b c'");
        std::array<long long, 6> row;
        std::copy(tokens.begin(), tokens.end(), row.begin());
        auto [i, j, k, a, b, c] = row;
        if (! (1 <= i && i < j && j < k && k <= ph.parts()))
            throw MalformedInput("line " + to_string(line_number) + ": triad indices must satisfy 1 <= i < j < k <= N");
        for (auto v : {a, b, c})
            if (v < 0 || v >= ph.part_size())
                throw MalformedInput("line " + to_string(line_number) + ": vertex outside [0, s)");
        if (! normalize && ! first && ! (previous < row))
            throw MalformedInput("line " + to_string(line_number) + ": edges are not in canonical order");
        previous = row;
        first = false;
        ph.add_edge({int(i), int(j), int(k)}, {int(a), int(b), int(c)});
    }
    return ph;
}
