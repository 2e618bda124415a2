#include <uturan/certificate.hh>
#include <uturan/errors.hh>

#include <json.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

using namespace uturan;

using std::istream;
using std::ostream;
using std::span;
using std::string;
using std::to_string;
using std::vector;

auto ColoringCertificate::uniform(int vertex_count, Color fill) -> ColoringCertificate
{
    ColoringCertificate cert;
    cert.vertex_count = vertex_count;
    cert.ordering.resize(vertex_count);
    for (int i = 0; i < vertex_count; ++i)
        cert.ordering[i] = i;
    cert.pair_colors.assign(pair_count(vertex_count), fill);
    return cert;
}

auto uturan::check_permutation(span<const Vertex> ordering, int n) -> void
{
    if (int(ordering.size()) != n)
        throw MalformedInput("ordering has " + to_string(ordering.size()) + " entries, expected " + to_string(n));
    vector<bool> seen(n, false);
    for (auto v : ordering) {
        if (v < 0 || v >= n)
            throw MalformedInput("ordering entry " + to_string(v) + " outside [0, " + to_string(n) + ")");
        if (seen[v])
            throw MalformedInput("ordering repeats vertex " + to_string(v));
        seen[v] = true;
    }
}

auto uturan::write_certificate_json(ostream & out, const ColoringCertificate & cert) -> void
{
    string buffer = "{\"n\": " + to_string(cert.vertex_count) + ", \"ordering\": [";
    for (size_t i = 0; i < cert.ordering.size(); ++i) {
        if (i > 0)
            buffer += ", ";
        buffer += to_string(cert.ordering[i]);
    }
    buffer += "], \"pair_colors\": {";
    bool first = true;
    for (int u = 0; u < cert.vertex_count; ++u)
        for (int v = u + 1; v < cert.vertex_count; ++v) {
            if (! first)
                buffer += ", ";
            first = false;
            buffer += '"';
            buffer += to_string(u);
            buffer += ',';
            buffer += to_string(v);
            buffer += "\": ";
            buffer += to_string(cert.color(u, v));
            if (buffer.size() > (1u << 16)) {
                out << buffer;
                buffer.clear();
            }
        }
    buffer += "}}\n";
    out << buffer;
}

auto uturan::read_certificate_json(istream & in) -> ColoringCertificate
{
    nlohmann::json doc;
    try {
        in >> doc;
    }
    catch (const nlohmann::json::exception & e) {
        throw MalformedInput(string{"certificate is not valid JSON: "} + e.what());
    }

    try {
        ColoringCertificate cert;
        cert.vertex_count = doc.at("n").get<int>();
        if (cert.vertex_count < 0)
            throw MalformedInput("certificate has negative n");
        cert.ordering = doc.at("ordering").get<vector<Vertex>>();
        check_permutation(cert.ordering, cert.vertex_count);

        const auto & colors = doc.at("pair_colors");
        if (! colors.is_object())
            throw MalformedInput("pair_colors must be an object");
        cert.pair_colors.assign(pair_count(cert.vertex_count), -1);
        for (auto & [key, value] : colors.items()) {
            auto comma = key.find(',');
            int u = -1, v = -1;
            if (comma == string::npos
                || std::from_chars(key.data(), key.data() + comma, u).ptr != key.data() + comma
                || std::from_chars(key.data() + comma + 1, key.data() + key.size(), v).ptr
                    != key.data() + key.size())
                throw MalformedInput("pair key '" + key + "' is not of the form \"u,v\"");
            if (! (0 <= u && u < v && v < cert.vertex_count))
                throw MalformedInput("pair key '" + key + "' needs 0 <= u < v < n");
            int c = value.get<int>();
            if (c < 0)
                throw MalformedInput("pair " + key + " has a negative color");
            cert.set_color(u, v, c);
        }
        for (int u = 0; u < cert.vertex_count; ++u)
            for (int v = u + 1; v < cert.vertex_count; ++v)
                if (cert.color(u, v) < 0)
                    throw MalformedInput("pair " + to_string(u) + "," + to_string(v) + " has no color");
        return cert;
    }
    catch (const nlohmann::json::exception & e) {
        throw MalformedInput(string{"malformed certificate: "} + e.what());
    }
}
