#include <uturan/errors.hh>
#include <uturan/text_io.hh>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

using namespace uturan;

using std::istream;
using std::ostream;
using std::string;
using std::to_string;
using std::vector;

auto uturan::detail::next_int_line(istream & in, vector<long long> & tokens, string & keyword, int & line_number)
    -> bool
{
    string line;
    while (std::getline(in, line)) {
        ++line_number;
        if (! line.empty() && line.back() == '\r')
            throw MalformedInput("line " + to_string(line_number) + ": CR line endings are not accepted");
        auto first = line.find_first_not_of(" \t");
        if (first == string::npos || line[first] == '#')
            continue;

        tokens.clear();
        keyword.clear();
        std::istringstream words(line);
        string word;
        bool first_word = true;
        while (words >> word) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || ptr != word.data() + word.size()) {
                if (first_word) {
                    keyword = word;
                    first_word = false;
                    continue;
                }
                throw MalformedInput("line " + to_string(line_number) + ": '" + word + "' is not an integer");
            }
            first_word = false;
            tokens.push_back(value);
        }
        return true;
    }
    return false;
}

namespace
{
    auto as_int(long long v, int line_number) -> int
    {
        if (v < INT32_MIN || v > INT32_MAX)
            throw MalformedInput("line " + to_string(line_number) + ": value out of range");
        return static_cast<int>(v);
    }
}

auto uturan::read_hypergraph(istream & in, ParseMode mode) -> Hypergraph
{
    vector<long long> tokens;
    string keyword;
    int line_number = 0;
    if (! detail::next_int_line(in, tokens, keyword, line_number))
        throw MalformedInput("empty hypergraph file");
    if (keyword != "hg" || tokens.size() != 3)
        throw MalformedInput("line " + to_string(line_number) + ": expected header 'hg <k> <n> <m>'");
    int k = as_int(tokens[0], line_number), n = as_int(tokens[1], line_number);
    long long m = tokens[2];
    if (m < 0)
        throw MalformedInput("negative edge count");

    vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    while (detail::next_int_line(in, tokens, keyword, line_number)) {
        if (! keyword.empty())
            throw MalformedInput("line " + to_string(line_number) + ": unexpected keyword '" + keyword + "'");
        if (tokens.size() != size_t(k))
            throw MalformedInput("line " + to_string(line_number) + ": expected " + to_string(k) + " vertices");
        Edge e;
        for (auto t : tokens)
            e.push_back(as_int(t, line_number));
        edges.push_back(std::move(e));
    }
    if (edges.size() != size_t(m))
        throw MalformedInput("header announces " + to_string(m) + " edges, file has " + to_string(edges.size()));

    if (mode == ParseMode::strict)
        return canonical_or_throw(k, n, std::move(edges));
    return canonicalize(k, n, std::move(edges));
}

auto uturan::write_hypergraph(ostream & out, const Hypergraph & h) -> void
{
    string buffer = "hg " + to_string(h.uniformity()) + " " + to_string(h.vertex_count()) + " "
        + to_string(h.edge_count()) + "\n";
    for (size_t i = 0; i < h.edge_count(); ++i) {
        bool first = true;
        for (auto v : h.edge(i)) {
            if (! first)
                buffer += ' ';
            buffer += to_string(v);
            first = false;
        }
        buffer += '\n';
        if (buffer.size() > (1u << 16)) {
            out << buffer;
            buffer.clear();
        }
    }
    out << buffer;
}

auto uturan::read_palette(istream & in) -> Palette
{
    vector<long long> tokens;
    string keyword;
    int line_number = 0;
    if (! detail::next_int_line(in, tokens, keyword, line_number))
        throw MalformedInput("empty palette file");
    if (keyword != "palette" || tokens.size() != 2)
        throw MalformedInput("line " + to_string(line_number) + ": expected header 'palette <k> <t>'");
    int k = as_int(tokens[0], line_number);
    long long t = tokens[1];

    vector<ColorTriple> triples;
    while (detail::next_int_line(in, tokens, keyword, line_number)) {
        if (! keyword.empty() || tokens.size() != 3)
            throw MalformedInput("line " + to_string(line_number) + ": expected three color indices");
        triples.push_back({as_int(tokens[0], line_number), as_int(tokens[1], line_number),
            as_int(tokens[2], line_number)});
    }
    if (triples.size() != size_t(t))
        throw MalformedInput("header announces " + to_string(t) + " triples, file has " + to_string(triples.size()));
    return Palette{k, std::move(triples)};
}

auto uturan::write_palette(ostream & out, const Palette & p) -> void
{
    out << "palette " << p.color_count() << " " << p.size() << "\n";
    for (auto & t : p.triples())
        out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

auto uturan::resolve_palette(const string & name_or_path) -> Palette
{
    if (auto builtin = builtin_palette(name_or_path))
        return *builtin;
    std::ifstream file(name_or_path);
    if (! file)
        throw MalformedInput("no built-in palette or readable file named '" + name_or_path + "'");
    return read_palette(file);
}
