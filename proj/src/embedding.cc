#include "triple_csp.hh"

#include <uturan/embedding.hh>
#include <uturan/errors.hh>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

using namespace uturan;
using namespace uturan::innards;

using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    class EmbedSearch
    {
    public:
        EmbedSearch(const PartitionedHypergraph & ph, const Hypergraph & guest, uint64_t budget) :
            _ph(ph),
            _guest(guest),
            _n(guest.vertex_count()),
            _budget(budget),
            _var(constrained_pairs(guest)),
            _csp(std::max<int>(1, _var.size()), full_mask(ph.part_size())),
            _image(_n, 0),
            _used(ph.parts() + 1, false),
            _edges_at(_n)
        {
            // an edge completes when its highest-labelled vertex is placed
            for (size_t e = 0; e < guest.edge_count(); ++e)
                _edges_at[guest.edge(e)[2]].push_back(e);
        }

        auto run() -> optional<Embedding>
        {
            if (place(0))
                return _found;
            return std::nullopt;
        }

    private:
        static auto constrained_pairs(const Hypergraph & guest) -> std::unordered_map<std::int64_t, int>
        {
            std::unordered_map<std::int64_t, int> var;
            const int n = guest.vertex_count();
            for (size_t e = 0; e < guest.edge_count(); ++e) {
                auto ed = guest.edge(e);
                for (auto [x, y] : {std::pair{ed[0], ed[1]}, {ed[1], ed[2]}, {ed[0], ed[2]}})
                    var.try_emplace(pair_index(n, x, y), int(var.size()));
            }
            return var;
        }

        auto var(Vertex x, Vertex y) const -> int
        {
            return _var.at(pair_index(_n, std::min(x, y), std::max(x, y)));
        }

        auto relation(TriadIndex t) -> const Relation *
        {
            auto id = _ph.triad_id(t);
            auto it = _relations.find(id);
            if (it == _relations.end()) {
                Relation rel;
                for (auto e : _ph.triad_edges(t))
                    rel.push_back({std::uint8_t(e.a), std::uint8_t(e.b), std::uint8_t(e.c)});
                it = _relations.emplace(id, std::move(rel)).first;
            }
            return &it->second;
        }

        auto post_edge(size_t e) -> bool
        {
            auto ed = _guest.edge(e);
            std::array<Vertex, 3> o{ed[0], ed[1], ed[2]};
            std::ranges::sort(o, {}, [&](Vertex v) { return _image[v]; });
            TriadIndex t{_image[o[0]], _image[o[1]], _image[o[2]]};
            return _csp.post(var(o[0], o[1]), var(o[1], o[2]), var(o[0], o[2]), relation(t));
        }

        auto place(Vertex v) -> bool
        {
            if (v == _n)
                return finish();
            for (int index = 1; index <= _ph.parts(); ++index) {
                if (_used[index])
                    continue;
                if (_budget == 0)
                    return false;
                _image[v] = index;
                _used[index] = true;
                auto mark = _csp.mark();
                bool ok = std::ranges::all_of(_edges_at[v], [&](size_t e) { return post_edge(e); });
                if (ok && place(v + 1))
                    return true;
                _csp.undo(mark);
                _used[index] = false;
            }
            return false;
        }

        auto finish() -> bool
        {
            auto mark = _csp.mark();
            if (_csp.solve(_budget) != TripleCsp::Outcome::solved) {
                _csp.undo(mark);
                return false;
            }
            Embedding emb;
            emb.indices = _image;
            for (Vertex x = 0; x < _n; ++x)
                for (Vertex y = x + 1; y < _n; ++y) {
                    auto it = _var.find(pair_index(_n, x, y));
                    emb.witnesses[{x, y}] = it == _var.end() ? 0 : _csp.value(it->second);
                }
            _found = std::move(emb);
            return true;
        }

        const PartitionedHypergraph & _ph;
        const Hypergraph & _guest;
        int _n;
        uint64_t _budget;
        std::unordered_map<std::int64_t, int> _var;
        TripleCsp _csp;
        vector<int> _image;
        vector<bool> _used;
        vector<vector<size_t>> _edges_at;
        std::unordered_map<std::size_t, Relation> _relations;
        Embedding _found;
    };

    auto parse_pair_key(const string & key) -> std::pair<int, int>
    {
        auto comma = key.find(',');
        int u = -1, v = -1;
        if (comma == string::npos || std::from_chars(key.data(), key.data() + comma, u).ptr != key.data() + comma
            || std::from_chars(key.data() + comma + 1, key.data() + key.size(), v).ptr != key.data() + key.size()
            || u < 0 || u >= v)
            throw MalformedInput("pair key '" + key + "' is not of the form \"u,v\" with 0 <= u < v");
        return {u, v};
    }
}

auto uturan::embed_search(const PartitionedHypergraph & ph, const Hypergraph & guest, uint64_t decision_budget)
    -> optional<Embedding>
{
    if (guest.uniformity() != 3)
        throw InvalidArgument("embedding needs a 3-uniform guest");
    if (ph.part_size() > 64)
        throw InvalidArgument("embedding search supports part size up to 64");
    if (guest.vertex_count() > ph.parts())
        return std::nullopt;
    return EmbedSearch(ph, guest, decision_budget).run();
}

auto uturan::verify_embedding(const PartitionedHypergraph & ph, const Hypergraph & guest, const Embedding & emb)
    -> bool
{
    const int n = guest.vertex_count();
    if (int(emb.indices.size()) != n || guest.uniformity() != 3)
        return false;
    vector<bool> used(ph.parts() + 1, false);
    for (int a : emb.indices) {
        if (a < 1 || a > ph.parts() || used[a])
            return false;
        used[a] = true;
    }
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            auto it = emb.witnesses.find({x, y});
            if (it == emb.witnesses.end() || it->second < 0 || it->second >= ph.part_size())
                return false;
        }
    for (size_t e = 0; e < guest.edge_count(); ++e) {
        auto ed = guest.edge(e);
        std::array<Vertex, 3> o{ed[0], ed[1], ed[2]};
        std::ranges::sort(o, {}, [&](Vertex v) { return emb.indices[v]; });
        auto w = [&](Vertex x, Vertex y) { return emb.witnesses.at({std::min(x, y), std::max(x, y)}); };
        TriadIndex t{emb.indices[o[0]], emb.indices[o[1]], emb.indices[o[2]]};
        if (! ph.has_edge(t, {w(o[0], o[1]), w(o[1], o[2]), w(o[0], o[2])}))
            return false;
    }
    return true;
}

auto uturan::embed_from_skeleton(const Phi3Skeleton & sk, const Hypergraph & guest, const ColoringCertificate & cert)
    -> Embedding
{
    const int n = guest.vertex_count();
    if (int(sk.indices.size()) < n)
        throw InvalidArgument("skeleton has " + to_string(sk.indices.size()) + " indices, guest needs " + to_string(n));
    if (cert.vertex_count != n)
        throw InvalidArgument("certificate does not match the guest");
    check_permutation(cert.ordering, n);

    Embedding emb;
    emb.indices.resize(n);
    for (int t = 0; t < n; ++t)
        emb.indices[cert.ordering[t]] = sk.indices[t];
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            Color c = cert.color(x, y);
            if (c < 0 || c >= int(sk.roles.size()))
                throw InvalidArgument("certificate color " + to_string(c) + " is not a phi3 color");
            int p = std::min(emb.indices[x], emb.indices[y]), q = std::max(emb.indices[x], emb.indices[y]);
            emb.witnesses[{x, y}] = sk.vertex(c, p, q);
        }
    return emb;
}

auto uturan::write_embedding_json(std::ostream & out, const Embedding & emb) -> void
{
    string buffer = "{\"indices\": [";
    for (size_t i = 0; i < emb.indices.size(); ++i) {
        if (i > 0)
            buffer += ", ";
        buffer += to_string(emb.indices[i]);
    }
    buffer += "], \"witnesses\": {";
    bool first = true;
    for (auto & [pair, w] : emb.witnesses) {
        if (! first)
            buffer += ", ";
        first = false;
        buffer += '"' + to_string(pair.first) + ',' + to_string(pair.second) + "\": " + to_string(w);
    }
    buffer += "}}\n";
    out << buffer;
}

auto uturan::read_embedding_json(std::istream & in) -> Embedding
{
    try {
        nlohmann::json doc;
        in >> doc;
        Embedding emb;
        emb.indices = doc.at("indices").get<vector<int>>();
        const auto & witnesses = doc.at("witnesses");
        if (! witnesses.is_object())
            throw MalformedInput("witnesses must be an object");
        for (auto & [key, value] : witnesses.items())
            emb.witnesses[parse_pair_key(key)] = value.get<int>();
        return emb;
    }
    catch (const nlohmann::json::exception & e) {
        throw MalformedInput(string{"malformed embedding: "} + e.what());
    }
}
