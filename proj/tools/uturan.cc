// Command-line front end: generators, checkers and auditors.
// Machine-readable results go to stdout as one JSON line; logs go to stderr.

#include <uturan/audit.hh>
#include <uturan/certificate.hh>
#include <uturan/colorability.hh>
#include <uturan/constructions.hh>
#include <uturan/embedding.hh>
#include <uturan/errors.hh>
#include <uturan/partitioned.hh>
#include <uturan/skeleton.hh>
#include <uturan/text_io.hh>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <unistd.h>

using namespace uturan;

using json = nlohmann::ordered_json;
using std::string;
using std::vector;

namespace
{
    constexpr auto version_text = "uturan 1.0.0 (formats hg/1, phg/1, cert/1)";

    struct Globals
    {
        std::uint64_t seed = 0;
        bool normalize = false;
        bool deterministic = false;
        int threads = 1;
    };

    template <typename... Args>
    auto log(fmt::format_string<Args...> format, Args &&... args) -> void
    {
        fmt::print(stderr, "uturan: {}\n", fmt::format(format, std::forward<Args>(args)...));
    }

    auto open_input(const string & path) -> std::ifstream
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw MalformedInput("cannot open " + path);
        return in;
    }

    /// Writes through a sibling temp file and renames it over the target.
    auto write_atomically(const string & path, const std::function<void(std::ostream &)> & body) -> void
    {
        namespace fs = std::filesystem;
        fs::path target(path);
        fs::path temp = target;
        temp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            if (! out)
                throw std::runtime_error("cannot write " + temp.string());
            body(out);
            out.flush();
            if (! out)
                throw std::runtime_error("write to " + temp.string() + " failed");
        }
        fs::rename(temp, target);
    }

    auto emit(const json & doc) -> void { std::cout << doc.dump() << '\n'; }

    auto flag_rational(const string & text, const string & name) -> Rational
    {
        try {
            return Rational::parse(text);
        }
        catch (const std::exception &) {
            throw InvalidArgument("--" + name + " expects a rational such as 1/10 or 0.1, got '" + text + "'");
        }
    }

    auto parse_ordering(const string & text) -> vector<Vertex>
    {
        vector<Vertex> ordering;
        string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            try {
                size_t used = 0;
                ordering.push_back(std::stoi(token, &used));
                if (used != token.size())
                    throw std::invalid_argument(token);
            }
            catch (const std::exception &) {
                throw InvalidArgument("--ordering expects comma-separated vertices, got '" + text + "'");
            }
        }
        return ordering;
    }

    auto load_hypergraph(const string & path, const Globals & g) -> Hypergraph
    {
        auto in = open_input(path);
        return read_hypergraph(in, g.normalize ? ParseMode::normalize : ParseMode::strict);
    }

    auto load_partitioned(const string & path, const Globals & g) -> PartitionedHypergraph
    {
        auto in = open_input(path);
        return read_partitioned(in, g.normalize);
    }

    auto rational_json(const Rational & r) -> json
    {
        return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_decimal()}};
    }

    auto captured(const std::function<void(std::ostream &)> & body) -> json
    {
        std::ostringstream out;
        body(out);
        return json::parse(out.str());
    }

    auto role_name(PairRole r) -> string
    {
        switch (r) {
        case PairRole::ij: return "ij";
        case PairRole::jk: return "jk";
        case PairRole::ik: return "ik";
        }
        return "?";
    }

    auto mask_names(const Palette & p, ColorMask mask) -> json
    {
        auto names = json::array();
        for (int c = 0; c < p.color_count() && c < 64; ++c)
            if (mask >> c & 1)
                names.push_back(p.color_name(c));
        return names;
    }

    auto time_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    // --- gen ----------------------------------------------------------------

    auto add_gen(CLI::App & app, const Globals & g, std::function<void()> & action) -> void
    {
        auto gen = app.add_subcommand("gen", "Generate hypergraphs");
        gen->require_subcommand(1);

        {
            auto sub = gen->add_subcommand("palette-random", "Random palette construction on n vertices");
            auto palette = std::make_shared<string>("phi8");
            auto n = std::make_shared<int>(0);
            auto output = std::make_shared<string>();
            auto cert_path = std::make_shared<string>();
            sub->add_option("--palette", *palette, "Built-in name or palette file")->capture_default_str();
            sub->add_option("--n", *n, "Vertex count")->required()->check(CLI::Range(0, 1 << 20));
            sub->add_option("-o,--output", *output, "Output hypergraph")->required();
            sub->add_option("--emit-certificate", *cert_path, "Also write the generating coloring");
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto p = resolve_palette(*palette);
                    SeededRng rng(g.seed);
                    auto built = random_palette_hypergraph(p, *n, rng);
                    write_atomically(*output, [&](std::ostream & out) { write_hypergraph(out, built.hypergraph); });
                    if (! cert_path->empty())
                        write_atomically(
                            *cert_path, [&](std::ostream & out) { write_certificate_json(out, built.coloring); });
                    emit({{"output", *output},
                        {"n", built.hypergraph.vertex_count()},
                        {"m", built.hypergraph.edge_count()},
                        {"seed", g.seed}});
                };
            });
        }
        {
            auto sub = gen->add_subcommand("affine", "Lines of the affine space AG(d, 5)");
            auto dim = std::make_shared<int>(2);
            auto output = std::make_shared<string>();
            sub->add_option("--dim", *dim, "Dimension d")->required()->check(CLI::Range(1, 5));
            sub->add_option("-o,--output", *output, "Output hypergraph")->required();
            sub->callback([=, &action] {
                action = [=] {
                    auto h = affine_lines(*dim);
                    write_atomically(*output, [&](std::ostream & out) { write_hypergraph(out, h); });
                    emit({{"output", *output}, {"n", h.vertex_count()}, {"m", h.edge_count()}});
                };
            });
        }
        {
            auto sub = gen->add_subcommand("greedy-linear", "Random maximal linear 5-uniform hypergraph");
            auto n = std::make_shared<int>(0);
            auto output = std::make_shared<string>();
            sub->add_option("--n", *n, "Vertex count")->required()->check(CLI::Range(5, 100000));
            sub->add_option("-o,--output", *output, "Output hypergraph")->required();
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    SeededRng rng(g.seed);
                    auto h = greedy_linear(*n, rng);
                    write_atomically(*output, [&](std::ostream & out) { write_hypergraph(out, h); });
                    emit({{"output", *output}, {"n", h.vertex_count()}, {"m", h.edge_count()}, {"seed", g.seed}});
                };
            });
        }
        {
            auto sub = gen->add_subcommand("fan-expand", "Replace each 5-edge of a linear hypergraph by a fan");
            auto input = std::make_shared<string>();
            auto output = std::make_shared<string>();
            auto choices_in = std::make_shared<string>();
            auto choices_out = std::make_shared<string>();
            auto cert_path = std::make_shared<string>();
            auto ordering = std::make_shared<string>();
            sub->add_option("-i,--input", *input, "Linear 5-uniform hypergraph")->required();
            sub->add_option("-o,--output", *output, "Output 3-uniform hypergraph")->required();
            sub->add_option("--choices", *choices_in, "Read the chosen pairs instead of drawing them");
            sub->add_option("--emit-choices", *choices_out, "Write the chosen pairs");
            sub->add_option("--emit-certificate", *cert_path, "Write the phi3 coloring of the expansion");
            sub->add_option("--ordering", *ordering, "Vertex ordering for the certificate, comma-separated");
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto h5 = load_hypergraph(*input, g);
                    FanChoice choice;
                    if (! choices_in->empty()) {
                        auto in = open_input(*choices_in);
                        choice = read_fan_choice(in, h5.edge_count());
                    }
                    else {
                        SeededRng rng(g.seed);
                        choice = random_fan_choice(h5, rng);
                    }
                    auto fan = fan_expansion(h5, choice);
                    write_atomically(*output, [&](std::ostream & out) { write_hypergraph(out, fan.hypergraph); });
                    if (! choices_out->empty())
                        write_atomically(*choices_out, [&](std::ostream & out) { write_fan_choice(out, choice); });
                    if (! cert_path->empty()) {
                        auto order = ordering->empty() ? vector<Vertex>{} : parse_ordering(*ordering);
                        if (! order.empty())
                            check_permutation(order, h5.vertex_count());
                        auto cert = phi3_witness(h5, choice, order);
                        write_atomically(*cert_path, [&](std::ostream & out) { write_certificate_json(out, cert); });
                    }
                    emit({{"output", *output},
                        {"n", fan.hypergraph.vertex_count()},
                        {"m", fan.hypergraph.edge_count()},
                        {"seed", g.seed}});
                };
            });
        }
        {
            auto sub = gen->add_subcommand("partitioned-random", "Random partitioned host from a palette");
            auto palette = std::make_shared<string>("phi8");
            auto parts = std::make_shared<int>(0);
            auto size = std::make_shared<int>(0);
            auto roles = std::make_shared<bool>(false);
            auto output = std::make_shared<string>();
            sub->add_option("--palette", *palette, "Built-in name or palette file")->capture_default_str();
            sub->add_option("--parts", *parts, "Number of indices N")->required()->check(CLI::Range(3, 255));
            sub->add_option("--size", *size, "Part size s")->check(CLI::Range(1, 255));
            sub->add_flag("--roles", *roles, "phi3 host with vertex v of every part colored v (s = 7)");
            sub->add_option("-o,--output", *output, "Output partitioned hypergraph")->required();
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    std::optional<PartitionedHypergraph> ph;
                    if (*roles) {
                        ph = phi3_role_host(*parts);
                    }
                    else {
                        if (*size < 1)
                            throw InvalidArgument("--size is required unless --roles is given");
                        SeededRng rng(g.seed);
                        ph = random_partitioned_from_palette(resolve_palette(*palette), *parts, *size, rng);
                    }
                    write_atomically(*output, [&](std::ostream & out) { write_partitioned(out, *ph); });
                    emit({{"output", *output},
                        {"parts", ph->parts()},
                        {"size", ph->part_size()},
                        {"edges", ph->total_edge_count()},
                        {"min_density", rational_json(min_density(*ph))},
                        {"seed", g.seed}});
                };
            });
        }
    }

    // --- check --------------------------------------------------------------

    auto add_check(CLI::App & app, const Globals & g, std::function<void()> & action) -> void
    {
        auto check = app.add_subcommand("check", "Decide or verify properties");
        check->require_subcommand(1);

        {
            auto sub = check->add_subcommand("colorable", "Is the hypergraph colorable from a palette?");
            auto palette = std::make_shared<string>();
            auto input = std::make_shared<string>();
            auto mode = std::make_shared<string>("exhaustive");
            auto ordering = std::make_shared<string>();
            auto cert_path = std::make_shared<string>();
            auto cap = std::make_shared<int>(10);
            auto allow_large = std::make_shared<bool>(false);
            auto budget = std::make_shared<std::uint64_t>(0);
            sub->add_option("--palette", *palette, "Built-in name or palette file")->required();
            sub->add_option("-i,--input", *input, "3-uniform hypergraph")->required();
            sub->add_option("--mode", *mode, "exhaustive or heuristic")
                ->check(CLI::IsMember({"exhaustive", "heuristic"}))
                ->capture_default_str();
            sub->add_option("--ordering", *ordering, "Only try this vertex ordering (comma-separated)");
            sub->add_option("--emit-certificate", *cert_path, "Write the coloring when one is found");
            sub->add_option("--cap", *cap, "Largest vertex count for exhaustive search")->capture_default_str();
            sub->add_flag("--allow-large", *allow_large, "Ignore the exhaustive cap");
            sub->add_option("--budget", *budget, "Search budget (0 = mode default)");
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto h = load_hypergraph(*input, g);
                    auto p = resolve_palette(*palette);
                    std::optional<ColoringCertificate> cert;
                    json doc;
                    if (! ordering->empty()) {
                        auto order = parse_ordering(*ordering);
                        check_permutation(order, h.vertex_count());
                        auto result = check_fixed_ordering(h, p, order, *budget);
                        doc["mode"] = "fixed-ordering";
                        doc["feasible"] = result.feasible();
                        doc["budget_exhausted"] = result.budget_exhausted;
                        if (result.witness) {
                            json w;
                            if (result.witness->pair)
                                w["pair"] = {result.witness->pair->first, result.witness->pair->second};
                            else
                                w["pair"] = nullptr;
                            w["search_exhausted"] = result.witness->search_exhausted;
                            auto & edges = w["edges"] = json::array();
                            for (auto & e : result.witness->edges)
                                edges.push_back({{"edge", e.edge},
                                    {"role", role_name(e.role)},
                                    {"domain", mask_names(p, e.positional_domain)}});
                            doc["witness"] = w;
                        }
                        cert = result.certificate;
                    }
                    else {
                        SearchOptions opts;
                        opts.mode = *mode == "heuristic" ? SearchMode::heuristic : SearchMode::exhaustive;
                        opts.budget = *budget;
                        opts.cap = *cap;
                        opts.allow_over_cap = *allow_large;
                        opts.deterministic = g.deterministic || g.threads <= 1;
                        opts.threads = g.threads;
                        opts.seed = g.seed;
                        auto start = std::chrono::steady_clock::now();
                        auto result = search_colorable(h, p, opts);
                        log("search finished in {:.3f} s", time_since(start));
                        doc["mode"] = *mode;
                        switch (result.verdict) {
                        case Verdict::colorable: doc["colorable"] = true; break;
                        case Verdict::not_colorable: doc["colorable"] = false; break;
                        case Verdict::unknown: doc["colorable"] = nullptr; break;
                        }
                        doc["orderings_examined"] = result.orderings_examined;
                        cert = result.certificate;
                    }
                    if (cert) {
                        doc["certificate"] = captured([&](std::ostream & out) { write_certificate_json(out, *cert); });
                        if (! cert_path->empty())
                            write_atomically(*cert_path, [&](std::ostream & out) { write_certificate_json(out, *cert); });
                    }
                    emit(doc);
                };
            });
        }
        {
            auto sub = check->add_subcommand("certificate", "Verify a coloring certificate");
            auto palette = std::make_shared<string>();
            auto input = std::make_shared<string>();
            auto cert_path = std::make_shared<string>();
            sub->add_option("--palette", *palette, "Built-in name or palette file")->required();
            sub->add_option("-i,--input", *input, "3-uniform hypergraph")->required();
            sub->add_option("-c,--certificate", *cert_path, "Certificate JSON")->required();
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto h = load_hypergraph(*input, g);
                    auto p = resolve_palette(*palette);
                    auto in = open_input(*cert_path);
                    auto cert = read_certificate_json(in);
                    auto result = verify_certificate(h, p, cert);
                    json doc{{"valid", result.valid}};
                    doc["violated_edge"] = result.violated_edge ? json(*result.violated_edge) : json(nullptr);
                    emit(doc);
                };
            });
        }
        {
            auto sub = check->add_subcommand("growth", "Compare n! with (10/9)^m");
            auto n = std::make_shared<std::int64_t>(0);
            auto m = std::make_shared<std::int64_t>(0);
            sub->add_option("--n", *n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
            sub->add_option("--m", *m, "Edge count")->required()->check(CLI::NonNegativeNumber);
            sub->callback([=, &action] {
                action = [=] {
                    auto r = growth_and_union_bound(*n, *m);
                    emit({{"n", *n},
                        {"m", *m},
                        {"holds", r.holds},
                        {"log_margin", r.log_margin},
                        {"log_factorial", r.log_factorial}});
                };
            });
        }
        {
            auto sub = check->add_subcommand("linear", "Do any two edges share at most one vertex?");
            auto input = std::make_shared<string>();
            sub->add_option("-i,--input", *input, "Hypergraph")->required();
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto h = load_hypergraph(*input, g);
                    bool linear = is_linear(h);
                    std::int64_t k = h.uniformity();
                    bool covers = linear
                        && std::int64_t(h.edge_count()) * (k * (k - 1) / 2) == std::int64_t(pair_count(h.vertex_count()));
                    emit({{"k", k},
                        {"n", h.vertex_count()},
                        {"m", h.edge_count()},
                        {"linear", linear},
                        {"every_pair_once", covers}});
                };
            });
        }
        {
            auto sub = check->add_subcommand("embedding", "Verify an embedding into a partitioned host");
            auto host = std::make_shared<string>();
            auto guest = std::make_shared<string>();
            auto emb_path = std::make_shared<string>();
            sub->add_option("--host", *host, "Partitioned hypergraph")->required();
            sub->add_option("--guest", *guest, "3-uniform guest")->required();
            sub->add_option("-e,--embedding", *emb_path, "Embedding JSON")->required();
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto ph = load_partitioned(*host, g);
                    auto h = load_hypergraph(*guest, g);
                    auto in = open_input(*emb_path);
                    auto emb = read_embedding_json(in);
                    emit({{"valid", verify_embedding(ph, h, emb)}});
                };
            });
        }
    }

    // --- audit --------------------------------------------------------------

    auto add_audit(CLI::App & app, const Globals & g, std::function<void()> & action) -> void
    {
        auto audit = app.add_subcommand("audit", "Density measurements");
        audit->require_subcommand(1);
        {
            auto sub = audit->add_subcommand("density", "Minimum density over linear-size vertex subsets");
            auto input = std::make_shared<string>();
            auto eps = std::make_shared<string>();
            auto samples = std::make_shared<std::int64_t>(100);
            auto exact = std::make_shared<bool>(false);
            auto cap = std::make_shared<int>(20);
            auto allow_large = std::make_shared<bool>(false);
            sub->add_option("-i,--input", *input, "3-uniform hypergraph")->required();
            sub->add_option("--epsilon", *eps, "Subset fraction in (0, 1]")->required();
            sub->add_option("--samples", *samples, "Sampled subsets")->capture_default_str();
            sub->add_flag("--exact", *exact, "Enumerate every qualifying subset");
            sub->add_option("--cap", *cap, "Largest vertex count for --exact")->capture_default_str();
            sub->add_flag("--allow-large", *allow_large, "Ignore the --exact cap (up to 30 vertices)");
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto h = load_hypergraph(*input, g);
                    auto e = flag_rational(*eps, "epsilon");
                    auto report = *exact ? exact_min_density(h, e, *allow_large ? 30 : *cap)
                                         : sampled_min_density(h, e, *samples, g.seed);
                    write_density_json(std::cout, report);
                };
            });
        }
        {
            auto sub = audit->add_subcommand("triads", "Triad density against the significant-fraction product");
            auto input = std::make_shared<string>();
            auto eps = std::make_shared<string>();
            sub->add_option("-i,--input", *input, "Partitioned hypergraph")->required();
            sub->add_option("--epsilon", *eps, "Degree threshold in (0, 1)")->required();
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto ph = load_partitioned(*input, g);
                    write_triad_json(std::cout, triad_product_check(ph, flag_rational(*eps, "epsilon")));
                };
            });
        }
    }

    // --- embed / extract-skeleton ---------------------------------------------

    auto skeleton_json(const SkeletonResult & r, const Palette & phi3_palette) -> json
    {
        json doc;
        doc["success"] = r.skeleton.has_value();
        doc["failed_stage"] = r.failed_stage ? json(stage_name(*r.failed_stage)) : json(nullptr);
        auto & stages = doc["stages"] = json::array();
        for (auto [stage, size] : r.stage_sizes)
            stages.push_back({{"stage", stage_name(stage)}, {"size", size}});
        if (r.skeleton) {
            auto & sk = *r.skeleton;
            doc["indices"] = sk.indices;
            doc["a"] = rational_json(sk.a);
            doc["b"] = rational_json(sk.b);
            doc["c"] = rational_json(sk.c);
            json roles;
            for (Color c = 0; c < int(sk.roles.size()); ++c) {
                json pairs = json::object();
                for (auto & [pair, v] : sk.roles[c])
                    pairs[std::to_string(pair.first) + "," + std::to_string(pair.second)] = v;
                roles[phi3_palette.color_name(c)] = pairs;
            }
            doc["roles"] = roles;
        }
        return doc;
    }

    auto add_embedding_commands(CLI::App & app, const Globals & g, std::function<void()> & action) -> void
    {
        {
            auto sub = app.add_subcommand("embed", "Search for an embedding of a guest into a partitioned host");
            auto host = std::make_shared<string>();
            auto guest = std::make_shared<string>();
            auto output = std::make_shared<string>();
            auto budget = std::make_shared<std::uint64_t>(0);
            sub->add_option("--host", *host, "Partitioned hypergraph")->required();
            sub->add_option("--guest", *guest, "3-uniform guest")->required();
            sub->add_option("-o,--output", *output, "Write the embedding JSON");
            sub->add_option("--budget", *budget, "Decision budget (0 = unlimited)");
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto ph = load_partitioned(*host, g);
                    auto h = load_hypergraph(*guest, g);
                    auto emb = embed_search(ph, h, *budget == 0 ? std::numeric_limits<std::uint64_t>::max() : *budget);
                    json doc{{"embedded", emb.has_value()}};
                    if (emb) {
                        doc["verified"] = verify_embedding(ph, h, *emb);
                        doc["embedding"] = captured([&](std::ostream & out) { write_embedding_json(out, *emb); });
                        if (! output->empty())
                            write_atomically(*output, [&](std::ostream & out) { write_embedding_json(out, *emb); });
                    }
                    emit(doc);
                };
            });
        }
        {
            auto sub = app.add_subcommand("extract-skeleton", "Staged phi3 skeleton extraction");
            auto input = std::make_shared<string>();
            auto delta = std::make_shared<string>();
            auto min_size = std::make_shared<int>(3);
            auto guest = std::make_shared<string>();
            auto cert_path = std::make_shared<string>();
            auto output = std::make_shared<string>();
            sub->add_option("-i,--input", *input, "Partitioned hypergraph")->required();
            sub->add_option("--delta", *delta, "Density surplus in (0, 1); eps = delta/20")->required();
            sub->add_option("--min-size", *min_size, "Smallest index set a stage may keep")
                ->check(CLI::Range(1, 255))
                ->capture_default_str();
            sub->add_option("--guest", *guest, "Embed this phi3-colorable guest through the skeleton");
            sub->add_option("-c,--certificate", *cert_path, "phi3 coloring of the guest (searched when absent)");
            sub->add_option("-o,--output", *output, "Write the guest embedding JSON");
            sub->callback([=, &g, &action] {
                action = [=, &g] {
                    auto ph = load_partitioned(*input, g);
                    auto result = extract_phi3_skeleton(ph, flag_rational(*delta, "delta"), *min_size);
                    auto p = phi3();
                    auto doc = skeleton_json(result, p);
                    if (result.skeleton)
                        doc["holds"] = skeleton_holds(ph, *result.skeleton);
                    if (result.skeleton && ! guest->empty()) {
                        auto h = load_hypergraph(*guest, g);
                        std::optional<ColoringCertificate> cert;
                        if (! cert_path->empty()) {
                            auto in = open_input(*cert_path);
                            cert = read_certificate_json(in);
                            if (! verify_certificate(h, p, *cert).valid)
                                throw MalformedInput("certificate is not a phi3 coloring of the guest");
                        }
                        else {
                            SearchOptions opts;
                            opts.cap = std::max(10, h.vertex_count());
                            cert = search_colorable(h, p, opts).certificate;
                        }
                        if (! cert) {
                            doc["guest_embedded"] = false;
                        }
                        else if (int(result.skeleton->indices.size()) < h.vertex_count()) {
                            doc["guest_embedded"] = false;
                            log("skeleton has {} indices, guest needs {}", result.skeleton->indices.size(),
                                h.vertex_count());
                        }
                        else {
                            auto emb = embed_from_skeleton(*result.skeleton, h, *cert);
                            doc["guest_embedded"] = verify_embedding(ph, h, emb);
                            if (! output->empty())
                                write_atomically(*output, [&](std::ostream & out) { write_embedding_json(out, emb); });
                        }
                    }
                    emit(doc);
                };
            });
        }
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Palette colorings, constructions and density audits for uniform hypergraphs"};
    app.set_version_flag("--version", version_text);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_flag("--normalize", g.normalize, "Canonicalize input instead of rejecting non-canonical files");
    app.add_flag("--deterministic", g.deterministic, "Reproducible search even with several threads");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();

    std::function<void()> action;
    add_gen(app, g, action);
    add_check(app, g, action);
    add_audit(app, g, action);
    add_embedding_commands(app, g, action);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (action)
            action();
        return 0;
    }
    catch (const MalformedInput & e) {
        log("malformed input: {}", e.what());
        return 2;
    }
    catch (const CapExceeded & e) {
        log("{}", e.what());
        return 3;
    }
    catch (const std::invalid_argument & e) {
        log("invalid argument: {}", e.what());
        return 1;
    }
    catch (const std::exception & e) {
        log("error: {}", e.what());
        return 2;
    }
}
