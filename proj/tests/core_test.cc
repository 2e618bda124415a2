#include <uturan/certificate.hh>
#include <uturan/constructions.hh>
#include <uturan/errors.hh>
#include <uturan/hypergraph.hh>
#include <uturan/palette.hh>
#include <uturan/rng.hh>
#include <uturan/text_io.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace uturan;

namespace
{
    auto parse(const std::string & text, ParseMode mode = ParseMode::strict) -> Hypergraph
    {
        std::istringstream in(text);
        return read_hypergraph(in, mode);
    }

    auto render(const Hypergraph & h) -> std::string
    {
        std::ostringstream out;
        write_hypergraph(out, h);
        return out.str();
    }
}

TEST_SUITE("hypergraph")
{
    TEST_CASE("canonicalize sorts each edge")
    {
        auto h = canonicalize(3, 3, {{2, 0, 1}});
        REQUIRE(h.edge_count() == 1);
        CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}});
    }

    TEST_CASE("canonicalize removes duplicate edges")
    {
        auto h = canonicalize(3, 4, {{0, 1, 2}, {0, 1, 2}, {2, 1, 0}});
        CHECK(h.edge_count() == 1);
    }

    TEST_CASE("canonicalize rejects bad edges")
    {
        CHECK_THROWS_AS(canonicalize(5, 5, {{0, 1, 2, 3, 3}}), MalformedInput);
        CHECK_THROWS_AS(canonicalize(3, 3, {{0, 1, 3}}), MalformedInput);
        CHECK_THROWS_AS(canonicalize(3, 3, {{0, -1, 2}}), MalformedInput);
        CHECK_THROWS_AS(canonicalize(3, 4, {{0, 1}}), MalformedInput);
        CHECK_THROWS_AS(canonicalize(4, 4, {{0, 1, 2, 3}}), MalformedInput);
    }

    TEST_CASE("canonicalize is idempotent and orders edges lexicographically")
    {
        SeededRng rng(11);
        std::vector<Edge> edges;
        for (int e = 0; e < 60; ++e) {
            Edge ed{int(rng.below(9)), int(rng.below(9)), int(rng.below(9))};
            if (ed[0] != ed[1] && ed[1] != ed[2] && ed[0] != ed[2])
                edges.push_back(ed);
        }
        auto once = canonicalize(3, 9, edges);
        CHECK(canonicalize(once) == once);
        auto listed = once.edges();
        CHECK(std::ranges::is_sorted(listed));
        CHECK(std::adjacent_find(listed.begin(), listed.end()) == listed.end());
        for (auto & e : listed)
            CHECK(std::ranges::is_sorted(e));
    }

    TEST_CASE("empty hypergraphs are valid")
    {
        auto h = canonicalize(3, 0, {});
        CHECK(h.edge_count() == 0);
        CHECK(h.vertex_count() == 0);
        CHECK(is_linear(h));
        CHECK(render(h) == "hg 3 0 0\n");
    }

    TEST_CASE("contains")
    {
        auto h = canonicalize(3, 5, {{0, 1, 3}, {1, 2, 3}, {1, 3, 4}});
        CHECK(h.contains(std::vector<Vertex>{1, 2, 3}));
        CHECK_FALSE(h.contains(std::vector<Vertex>{0, 1, 2}));
    }

    TEST_CASE("is_linear")
    {
        CHECK(is_linear(canonicalize(5, 5, {{0, 1, 2, 3, 4}})));
        CHECK_FALSE(is_linear(canonicalize(5, 8, {{0, 1, 2, 3, 4}, {0, 1, 5, 6, 7}})));
        CHECK(is_linear(canonicalize(5, 9, {{0, 1, 2, 3, 4}, {0, 5, 6, 7, 8}})));
        CHECK_FALSE(is_linear(canonicalize(3, 4, {{0, 1, 2}, {0, 1, 3}})));
    }

    TEST_CASE("AG(2,5) lines are linear")
    {
        auto h = affine_lines(2);
        CHECK(h.vertex_count() == 25);
        CHECK(h.edge_count() == 30);
        CHECK(is_linear(h));
        // every one of the 435 pairs of lines meets in at most one point
        int pairs = 0;
        for (size_t a = 0; a < h.edge_count(); ++a)
            for (size_t b = a + 1; b < h.edge_count(); ++b) {
                auto x = h.edge(a), y = h.edge(b);
                std::vector<Vertex> common;
                std::ranges::set_intersection(x, y, std::back_inserter(common));
                CHECK(common.size() <= 1);
                ++pairs;
            }
        CHECK(pairs == 435);
    }

    TEST_CASE("linearity is invariant under relabeling")
    {
        SeededRng rng(5);
        auto h = greedy_linear(20, rng);
        auto bad = canonicalize(5, 20, {{0, 1, 2, 3, 4}, {0, 1, 5, 6, 7}, {10, 11, 12, 13, 14}});
        for (int round = 0; round < 10; ++round) {
            std::vector<Vertex> perm(20);
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(std::span{perm});
            CHECK(is_linear(relabel(h, perm)));
            CHECK_FALSE(is_linear(relabel(bad, perm)));
            CHECK(relabel(h, perm).edge_count() == h.edge_count());
        }
    }

    TEST_CASE("linear hypergraphs use each pair at most once")
    {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            SeededRng rng(seed);
            auto h = greedy_linear(30, rng);
            CHECK(h.edge_count() * 10 <= pair_count(30));
        }
    }

    TEST_CASE("pair indices enumerate pairs lexicographically")
    {
        const int n = 9;
        size_t expected = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                CHECK(pair_index(n, u, v) == expected);
                CHECK(pair_from_index(n, expected) == std::pair{u, v});
                ++expected;
            }
        CHECK(pair_count(n) == expected);
    }

    TEST_CASE("edge_subset keeps the vertex set")
    {
        auto h = canonicalize(3, 6, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}});
        auto sub = edge_subset(h, {true, false, true});
        CHECK(sub.vertex_count() == 6);
        CHECK(sub.edges() == std::vector<Edge>{{0, 1, 2}, {3, 4, 5}});
    }
}

TEST_SUITE("text format")
{
    TEST_CASE("round trip")
    {
        auto h = canonicalize(3, 5, {{0, 1, 3}, {1, 2, 3}, {1, 3, 4}});
        auto text = render(h);
        CHECK(text == "hg 3 5 3\n0 1 3\n1 2 3\n1 3 4\n");
        CHECK(parse(text) == h);
    }

    TEST_CASE("comments and blank lines are skipped")
    {
        auto h = parse("# fan\nhg 3 5 1\n\n# the middle\n1 2 3\n");
        CHECK(h.edge_count() == 1);
    }

    TEST_CASE("strict mode rejects non-canonical files; normalize fixes them")
    {
        const std::string unsorted = "hg 3 4 2\n1 2 3\n0 1 2\n";
        const std::string descending = "hg 3 4 1\n2 1 0\n";
        const std::string repeated = "hg 3 4 2\n0 1 2\n0 1 2\n";
        CHECK_THROWS_AS(parse(unsorted), MalformedInput);
        CHECK_THROWS_AS(parse(descending), MalformedInput);
        CHECK_THROWS_AS(parse(repeated), MalformedInput);
        CHECK(parse(unsorted, ParseMode::normalize).edges() == std::vector<Edge>{{0, 1, 2}, {1, 2, 3}});
        CHECK(parse(descending, ParseMode::normalize).edges() == std::vector<Edge>{{0, 1, 2}});
        CHECK(parse(repeated, ParseMode::normalize).edge_count() == 1);
    }

    TEST_CASE("malformed files")
    {
        CHECK_THROWS_AS(parse(""), MalformedInput);
        CHECK_THROWS_AS(parse("hg 3 5\n"), MalformedInput);
        CHECK_THROWS_AS(parse("graph 3 5 0\n"), MalformedInput);
        CHECK_THROWS_AS(parse("hg 3 5 2\n0 1 2\n"), MalformedInput);
        CHECK_THROWS_AS(parse("hg 3 5 1\n0 1 2\n0 1 3\n"), MalformedInput);
        CHECK_THROWS_AS(parse("hg 3 5 1\n0 1 x\n"), MalformedInput);
        CHECK_THROWS_AS(parse("hg 3 5 1\n0 1 2 3\n"), MalformedInput);
        CHECK_THROWS_AS(parse("hg 3 5 1\n0 1 5\n"), MalformedInput);
        CHECK_THROWS_AS(parse("hg 3 5 1\r\n0 1 2\r\n"), MalformedInput);
        CHECK_THROWS_AS(parse("hg 4 5 0\n"), MalformedInput);
        CHECK_THROWS_AS(parse("hg 3 -1 0\n"), MalformedInput);
    }

    TEST_CASE("palette files")
    {
        std::istringstream in("palette 2 2\n0 1 1\n1 0 0\n");
        auto p = read_palette(in);
        CHECK(p.color_count() == 2);
        CHECK(p.contains(0, 1, 1));
        CHECK_FALSE(p.contains(1, 1, 1));
        std::ostringstream out;
        write_palette(out, p);
        std::istringstream back(out.str());
        CHECK(read_palette(back) == p);

        std::istringstream unused("palette 3 1\n0 1 1\n");
        CHECK_THROWS_AS(read_palette(unused), MalformedInput);
        std::istringstream range("palette 2 1\n0 1 2\n");
        CHECK_THROWS_AS(read_palette(range), MalformedInput);
    }

    TEST_CASE("built-in names resolve before files")
    {
        CHECK(resolve_palette("phi8") == phi8());
        CHECK(resolve_palette("phi3") == phi3());
        CHECK_THROWS_AS(resolve_palette("/nonexistent/palette.txt"), MalformedInput);
    }
}

TEST_SUITE("palettes")
{
    TEST_CASE("phi0")
    {
        auto p = phi0();
        CHECK(p.color_count() == 3);
        CHECK(p.size() == 1);
        CHECK(p.contains(colors::alpha, colors::beta, colors::gamma));
    }

    TEST_CASE("phi3 matches its three role triples")
    {
        using namespace colors;
        auto p = phi3();
        CHECK(p.color_count() == 7);
        CHECK(p.size() == 3);
        CHECK(p.contains(alpha1, beta1, omega));
        CHECK(p.contains(alpha2, omega, gamma2));
        CHECK(p.contains(omega, beta3, gamma3));
        CHECK(omega == 0);
        CHECK(alpha1 == 1);
        CHECK(beta1 == 2);
        CHECK(alpha2 == 3);
        CHECK(gamma2 == 4);
        CHECK(beta3 == 5);
        CHECK(gamma3 == 6);
    }

    TEST_CASE("phi8 is the product {beta,gamma} x {alpha,gamma} x {alpha,beta}")
    {
        using namespace colors;
        auto p = phi8();
        CHECK(p.size() == 8);
        int count = 0;
        for (Color x = 0; x < 3; ++x)
            for (Color y = 0; y < 3; ++y)
                for (Color z = 0; z < 3; ++z) {
                    bool expected = x != alpha && y != beta && z != gamma;
                    CHECK(p.contains(x, y, z) == expected);
                    count += expected;
                }
        CHECK(count == 8);
    }

    TEST_CASE("palette validation")
    {
        CHECK_THROWS_AS(Palette(0, {}), MalformedInput);
        CHECK_THROWS_AS(Palette(2, {{0, 1, 2}}), MalformedInput);
        CHECK_THROWS_AS(Palette(3, {{0, 1, 1}}), MalformedInput);
        // duplicates collapse
        CHECK(Palette(2, {{0, 1, 1}, {0, 1, 1}, {1, 0, 0}}).size() == 2);
        // an empty palette admits nothing
        auto empty = Palette(3, {});
        CHECK(empty.size() == 0);
        CHECK_FALSE(empty.contains(0, 1, 2));
        CHECK(complete_palette(2).size() == 8);
    }
}

TEST_SUITE("certificates")
{
    TEST_CASE("json round trip")
    {
        auto cert = ColoringCertificate::uniform(4, 0);
        cert.ordering = {2, 0, 3, 1};
        cert.set_color(0, 3, 2);
        cert.set_color(1, 2, 1);
        std::ostringstream out;
        write_certificate_json(out, cert);
        CHECK(out.str()
            == "{\"n\": 4, \"ordering\": [2, 0, 3, 1], \"pair_colors\": {\"0,1\": 0, \"0,2\": 0, \"0,3\": 2, "
               "\"1,2\": 1, \"1,3\": 0, \"2,3\": 0}}\n");
        std::istringstream in(out.str());
        CHECK(read_certificate_json(in) == cert);
    }

    TEST_CASE("structural errors")
    {
        auto bad = [](const std::string & text) {
            std::istringstream in(text);
            return read_certificate_json(in);
        };
        CHECK_THROWS_AS(bad("not json"), MalformedInput);
        CHECK_THROWS_AS(bad(R"({"n": 3, "ordering": [0, 1, 1], "pair_colors": {}})"), MalformedInput);
        CHECK_THROWS_AS(bad(R"({"n": 3, "ordering": [0, 1, 2], "pair_colors": {"0,1": 0, "0,2": 0}})"),
            MalformedInput);
        CHECK_THROWS_AS(
            bad(R"({"n": 3, "ordering": [0, 1, 2], "pair_colors": {"0,1": 0, "0,2": 0, "1,2": -1}})"),
            MalformedInput);
        CHECK_THROWS_AS(bad(R"({"n": 3, "ordering": [0, 1, 2], "pair_colors": {"0;1": 0}})"), MalformedInput);
        CHECK_THROWS_AS(bad(R"({"n": 3, "ordering": [0, 1, 2], "pair_colors": {"2,1": 0}})"), MalformedInput);
    }
}

TEST_SUITE("rng")
{
    TEST_CASE("splitmix64 reference stream")
    {
        SeededRng rng(0);
        CHECK(rng.next_u64() == 16294208416658607535ull);
        CHECK(rng.next_u64() == 7960286522194355700ull);
        CHECK(rng.next_u64() == 487617019471545679ull);
    }

    TEST_CASE("below uses floor(uniform * bound)")
    {
        SeededRng rng(42);
        std::vector<std::uint64_t> draws;
        for (int i = 0; i < 10; ++i)
            draws.push_back(rng.below(10));
        CHECK(draws == std::vector<std::uint64_t>{7, 1, 2, 3, 0, 8, 2, 8, 3, 6});
    }

    TEST_CASE("shuffle is Fisher-Yates from the back")
    {
        SeededRng rng(7);
        std::vector<int> items(8);
        std::iota(items.begin(), items.end(), 0);
        rng.shuffle(std::span{items});
        CHECK(items == std::vector<int>{7, 4, 6, 1, 2, 5, 0, 3});
    }

    TEST_CASE("uniform draws lie in [0, 1)")
    {
        SeededRng rng(3);
        for (int i = 0; i < 1000; ++i) {
            double u = rng.next_uniform();
            CHECK(u >= 0.0);
            CHECK(u < 1.0);
        }
    }
}
