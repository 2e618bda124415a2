#include <uturan/errors.hh>
#include <uturan/palette.hh>

#include <algorithm>

using namespace uturan;

using std::optional;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

Palette::Palette(int color_count, vector<ColorTriple> triples, vector<string> color_names) :
    _k(color_count),
    _triples(std::move(triples)),
    _names(std::move(color_names))
{
    if (_k < 1)
        throw MalformedInput("palette needs at least one color");
    if (_k > 1024)
        throw MalformedInput("palette color count " + to_string(_k) + " is unreasonably large");

    vector<bool> used(_k, false);
    for (auto & t : _triples)
        for (auto c : t) {
            if (c < 0 || c >= _k)
                throw MalformedInput("palette color " + to_string(c) + " outside [0, " + to_string(_k) + ")");
            used[c] = true;
        }
    if (! _triples.empty())
        for (int c = 0; c < _k; ++c)
            if (! used[c])
                throw MalformedInput("palette color " + to_string(c) + " appears in no triple");

    std::sort(_triples.begin(), _triples.end());
    _triples.erase(std::unique(_triples.begin(), _triples.end()), _triples.end());

    _member.assign(size_t(_k) * _k * _k, false);
    for (auto & t : _triples)
        _member[(size_t(t[0]) * _k + t[1]) * _k + t[2]] = true;
}

auto Palette::contains(Color x, Color y, Color z) const -> bool
{
    if (x < 0 || y < 0 || z < 0 || x >= _k || y >= _k || z >= _k)
        return false;
    return _member[(size_t(x) * _k + y) * _k + z];
}

auto Palette::color_name(Color c) const -> string
{
    if (c >= 0 && size_t(c) < _names.size())
        return _names[c];
    return to_string(c);
}

auto uturan::phi0() -> Palette
{
    using namespace colors;
    return Palette{3, {{alpha, beta, gamma}}, {"alpha", "beta", "gamma"}};
}

auto uturan::phi3() -> Palette
{
    using namespace colors;
    return Palette{7, {{alpha1, beta1, omega}, {alpha2, omega, gamma2}, {omega, beta3, gamma3}},
        {"omega", "alpha1", "beta1", "alpha2", "gamma2", "beta3", "gamma3"}};
}

auto uturan::phi8() -> Palette
{
    using namespace colors;
    vector<ColorTriple> triples;
    for (Color x : {beta, gamma})
        for (Color y : {alpha, gamma})
            for (Color z : {alpha, beta})
                triples.push_back({x, y, z});
    return Palette{3, std::move(triples), {"alpha", "beta", "gamma"}};
}

auto uturan::complete_palette(int color_count) -> Palette
{
    vector<ColorTriple> triples;
    for (int x = 0; x < color_count; ++x)
        for (int y = 0; y < color_count; ++y)
            for (int z = 0; z < color_count; ++z)
                triples.push_back({x, y, z});
    return Palette{color_count, std::move(triples)};
}

auto uturan::builtin_palette(string_view name) -> optional<Palette>
{
    if (name == "phi0")
        return phi0();
    if (name == "phi3")
        return phi3();
    if (name == "phi8")
        return phi8();
    return std::nullopt;
}
