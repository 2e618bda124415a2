#include "triple_csp.hh"

#include <bit>

using namespace uturan::innards;

using std::uint64_t;
using std::vector;

TripleCsp::TripleCsp(int var_count, Mask initial_domain) :
    _domains(var_count, initial_domain),
    _watchers(var_count)
{
}

auto TripleCsp::value(int var) const -> int
{
    return _domains[var] == 0 ? -1 : std::countr_zero(_domains[var]);
}

auto TripleCsp::undo(Mark m) -> void
{
    while (_trail.size() > m.trail) {
        auto [var, old] = _trail.back();
        _domains[var] = old;
        _trail.pop_back();
    }
    while (_constraints.size() > m.constraints) {
        auto & c = _constraints.back();
        _watchers[c.z].pop_back();
        _watchers[c.y].pop_back();
        _watchers[c.x].pop_back();
        _constraints.pop_back();
    }
    _failed_var = -1;
}

auto TripleCsp::narrow(int var, Mask m) -> bool
{
    if (m == _domains[var])
        return true;
    _trail.emplace_back(var, _domains[var]);
    _domains[var] = m;
    if (m == 0) {
        _failed_var = var;
        return false;
    }
    for (int w : _watchers[var])
        if (! _queued[w]) {
            _queued[w] = 1;
            _queue.push_back(w);
        }
    return true;
}

auto TripleCsp::revise(int index) -> bool
{
    const auto & c = _constraints[index];
    Mask dx = _domains[c.x], dy = _domains[c.y], dz = _domains[c.z];
    Mask sx = 0, sy = 0, sz = 0;
    for (auto & t : *c.rel)
        if (((dx >> t[0]) & (dy >> t[1]) & (dz >> t[2]) & 1) != 0) {
            sx |= Mask{1} << t[0];
            sy |= Mask{1} << t[1];
            sz |= Mask{1} << t[2];
        }
    return narrow(c.x, sx) && narrow(c.y, sy) && narrow(c.z, sz);
}

auto TripleCsp::propagate() -> bool
{
    bool ok = true;
    while (ok && ! _queue.empty()) {
        int c = _queue.back();
        _queue.pop_back();
        _queued[c] = 0;
        ok = revise(c);
    }
    for (int c : _queue)
        _queued[c] = 0;
    _queue.clear();
    return ok;
}

auto TripleCsp::post(int x, int y, int z, const Relation * rel) -> bool
{
    int index = static_cast<int>(_constraints.size());
    _constraints.push_back({x, y, z, rel});
    _watchers[x].push_back(index);
    _watchers[y].push_back(index);
    _watchers[z].push_back(index);
    _queued.resize(_constraints.size(), 0);
    _queued[index] = 1;
    _queue.push_back(index);
    return propagate();
}

auto TripleCsp::solve(uint64_t & decisions_left) -> Outcome
{
    struct Frame
    {
        int var;
        Mask remaining;
        Mark mark;
    };
    vector<Frame> stack;

    auto pick = [&]() -> int {
        int best = -1, best_size = 65;
        for (int v = 0; v < var_count(); ++v) {
            int size = std::popcount(_domains[v]);
            if (size > 1 && size < best_size && ! _watchers[v].empty()) {
                best = v;
                best_size = size;
            }
        }
        return best;
    };

    while (true) {
        int var = pick();
        if (var < 0)
            return Outcome::solved;
        stack.push_back({var, _domains[var], mark()});

        bool descended = false;
        while (! stack.empty() && ! descended) {
            auto & f = stack.back();
            undo(f.mark);
            if (f.remaining == 0) {
                stack.pop_back();
                continue;
            }
            if (decisions_left == 0)
                return Outcome::budget_exhausted;
            if (decisions_left != unlimited)
                --decisions_left;
            Mask bit = f.remaining & (~f.remaining + 1);
            f.remaining &= ~bit;
            descended = narrow(f.var, bit) && propagate();
        }
        if (! descended)
            return Outcome::refuted;
    }
}
