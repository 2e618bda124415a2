#include <uturan/errors.hh>
#include <uturan/selectors.hh>

#include <string>

using namespace uturan;

using std::map;
using std::optional;
using std::pair;
using std::span;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

auto uturan::parse_selector_shape(string_view name) -> SelectorShape
{
    if (name == "ik")
        return SelectorShape::ik;
    if (name == "ij")
        return SelectorShape::ij;
    if (name == "jk")
        return SelectorShape::jk;
    if (name == "first")
        return SelectorShape::first;
    if (name == "every_third" || name == "every-third")
        return SelectorShape::every_third;
    throw InvalidArgument("unknown selector shape '" + string(name) + "'");
}

namespace
{
    /// Evaluates each family at most once per argument tuple.
    class Evaluator
    {
    public:
        Evaluator(const PartitionedHypergraph & ph, span<const SelectorConstraint> constraints) :
            _ph(ph),
            _constraints(constraints),
            _cache(constraints.size())
        {
        }

        /// All vertices of V_pq admissible for every constraint, given I.
        auto candidates(const vector<int> & indices, int p, int q) -> VertexSet
        {
            VertexSet result(_ph.part_size());
            result.set();
            for (size_t c = 0; c < _constraints.size() && result.any(); ++c) {
                auto meet = [&](vector<int> args) { result &= evaluate(c, std::move(args)); };
                switch (_constraints[c].shape) {
                case SelectorShape::ik:
                    for (int j : indices)
                        if (p < j && j < q)
                            meet({p, j, q});
                    break;
                case SelectorShape::ij:
                    for (int k : indices)
                        if (k > q)
                            meet({p, q, k});
                    break;
                case SelectorShape::jk:
                    for (int i : indices)
                        if (i < p)
                            meet({i, p, q});
                    break;
                case SelectorShape::every_third:
                    for (int k : indices)
                        if (k != p && k != q)
                            meet({p, q, k});
                    break;
                case SelectorShape::first:
                    for (int a : indices)
                        for (int b : indices)
                            for (int c3 : indices)
                                if (a < p && p < b && b < q && q < c3)
                                    meet({p, q, a, b, c3});
                    break;
                }
            }
            return result;
        }

    private:
        auto evaluate(size_t c, vector<int> args) -> const VertexSet &
        {
            auto it = _cache[c].find(args);
            if (it == _cache[c].end()) {
                VertexSet value = _constraints[c].family(args);
                if (int(value.size()) != _ph.part_size())
                    throw InvalidArgument("selector family returned a set of the wrong size");
                it = _cache[c].emplace(std::move(args), std::move(value)).first;
            }
            return it->second;
        }

        const PartitionedHypergraph & _ph;
        span<const SelectorConstraint> _constraints;
        vector<map<vector<int>, VertexSet>> _cache;
    };

    /// Fills the selection's pair data; false if some pair has no admissible vertex.
    auto resolve(Evaluator & eval, const vector<int> & indices, Selection & out) -> bool
    {
        out.indices = indices;
        out.witnesses.clear();
        out.candidates.clear();
        for (size_t x = 0; x < indices.size(); ++x)
            for (size_t y = x + 1; y < indices.size(); ++y) {
                auto set = eval.candidates(indices, indices[x], indices[y]);
                if (set.none())
                    return false;
                out.witnesses[{indices[x], indices[y]}] = static_cast<int>(set.find_first());
                out.candidates[{indices[x], indices[y]}] = std::move(set);
            }
        return true;
    }

    auto check_pool(const PartitionedHypergraph & ph, span<const int> pool) -> vector<int>
    {
        vector<int> sorted(pool.begin(), pool.end());
        std::ranges::sort(sorted);
        for (size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] < 1 || sorted[i] > ph.parts() || (i > 0 && sorted[i] == sorted[i - 1]))
                throw InvalidArgument("selector pool must hold distinct indices in [1, N]");
        return sorted;
    }
}

auto uturan::greedy_selection(const PartitionedHypergraph & ph, span<const SelectorConstraint> constraints,
    span<const int> pool) -> Selection
{
    auto sorted = check_pool(ph, pool);
    Evaluator eval(ph, constraints);
    Selection best, trial;
    resolve(eval, {}, best);
    vector<int> indices;
    for (int next : sorted) {
        indices.push_back(next);
        if (resolve(eval, indices, trial))
            best = trial;
        else
            indices.pop_back();
    }
    return best;
}

auto uturan::selector_search(const PartitionedHypergraph & ph, span<const SelectorConstraint> constraints,
    span<const int> pool, int target, SelectionMode mode, int cap) -> optional<Selection>
{
    auto sorted = check_pool(ph, pool);
    if (target < 0)
        throw InvalidArgument("target size must be nonnegative");
    if (target > int(sorted.size()))
        return std::nullopt;

    if (mode == SelectionMode::greedy) {
        Evaluator eval(ph, constraints);
        Selection trial, best;
        resolve(eval, {}, best);
        vector<int> indices;
        for (size_t x = 0; x < sorted.size() && int(indices.size()) < target; ++x) {
            indices.push_back(sorted[x]);
            if (resolve(eval, indices, trial))
                best = trial;
            else
                indices.pop_back();
        }
        if (int(best.indices.size()) < target)
            return std::nullopt;
        return best;
    }

    if (cap > 0 && int(sorted.size()) > cap)
        throw CapExceeded("exhaustive selector search over " + to_string(sorted.size()) + " indices exceeds the cap of "
            + to_string(cap));

    Evaluator eval(ph, constraints);
    vector<int> indices;
    Selection found;
    bool done = false;
    // enlarging I only adds quantified memberships, so a prefix with an
    // unsatisfiable pair cannot be completed
    Selection scratch;
    std::function<void(size_t)> extend = [&](size_t from) {
        if (int(indices.size()) == target) {
            done = resolve(eval, indices, found);
            return;
        }
        for (size_t x = from; x + (target - indices.size()) <= sorted.size() && ! done; ++x) {
            indices.push_back(sorted[x]);
            if (resolve(eval, indices, scratch))
                extend(x + 1);
            indices.pop_back();
        }
    };
    extend(0);
    if (! done)
        return std::nullopt;
    return found;
}
