#include "cli_process.hh"

#include <doctest.h>

#include <json.hpp>

using nlohmann::json;

namespace
{
    auto write_file(const std::string & path, const std::string & text) -> void
    {
        std::ofstream(path, std::ios::binary) << text;
    }

    const std::string fan_text = "hg 3 5 3\n0 1 3\n1 2 3\n1 3 4\n";
}

TEST_CASE("colorability of the fan")
{
    cli::ScratchDir dir;
    write_file(dir / "fan.hg3", fan_text);
    auto r = cli::run("check colorable --palette phi8 --input " + dir / "fan.hg3" + " --mode exhaustive");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["colorable"] == true);

    auto fixed = cli::run("check colorable --palette phi8 -i " + dir / "fan.hg3" + " --ordering 0,1,2,3,4");
    REQUIRE(fixed.exit_code == 0);
    doc = json::parse(fixed.out);
    CHECK(doc["feasible"] == false);
    CHECK(doc["witness"]["pair"] == json::array({1, 3}));
    CHECK(doc["witness"]["edges"][0]["domain"] == json::array({"alpha", "gamma"}));

    auto k4 = dir / "k4.hg3";
    write_file(k4, "hg 3 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    auto no = cli::run("check colorable --palette phi0 -i " + k4);
    REQUIRE(no.exit_code == 0);
    CHECK(json::parse(no.out)["colorable"] == false);
}

TEST_CASE("certificates written by search verify")
{
    cli::ScratchDir dir;
    write_file(dir / "fan.hg3", fan_text);
    auto r = cli::run("check colorable --palette phi8 -i " + dir / "fan.hg3" + " --emit-certificate " + dir / "c.json");
    REQUIRE(r.exit_code == 0);
    auto v = cli::run("check certificate --palette phi8 -i " + dir / "fan.hg3" + " -c " + dir / "c.json");
    REQUIRE(v.exit_code == 0);
    CHECK(json::parse(v.out)["valid"] == true);
    auto wrong = cli::run("check certificate --palette phi0 -i " + dir / "fan.hg3" + " -c " + dir / "c.json");
    REQUIRE(wrong.exit_code == 0);
    CHECK(json::parse(wrong.out)["valid"] == false);
}

TEST_CASE("affine space and growth bound")
{
    cli::ScratchDir dir;
    auto r = cli::run("gen affine --dim 5 -o " + dir / "ag55.hg5");
    REQUIRE(r.exit_code == 0);
    auto text = cli::slurp(dir / "ag55.hg5");
    CHECK(text.substr(0, text.find('\n')) == "hg 5 3125 488125");
    auto lin = cli::run("check linear -i " + dir / "ag55.hg5");
    REQUIRE(lin.exit_code == 0);
    CHECK(json::parse(lin.out)["linear"] == true);
    CHECK(json::parse(lin.out)["every_pair_once"] == true);

    auto g = cli::run("check growth --n 3125 --m 488125");
    REQUIRE(g.exit_code == 0);
    CHECK(json::parse(g.out)["holds"] == true);
    auto fail = cli::run("check growth --n 120 --m 100");
    CHECK(json::parse(fail.out)["holds"] == false);
}

TEST_CASE("exit codes")
{
    cli::ScratchDir dir;
    CHECK(cli::run("").exit_code == 1);
    CHECK(cli::run("frobnicate").exit_code == 1);
    CHECK(cli::run("gen affine --dim 9 -o " + dir / "x").exit_code == 1);
    CHECK(cli::run("audit density -i " + dir / "missing.hg3" + " --epsilon 1/2").exit_code == 2);

    write_file(dir / "bad.hg3", "hg 3 5 1\n3 1 0\n");
    CHECK(cli::run("check linear -i " + dir / "bad.hg3").exit_code == 2);
    CHECK(cli::run("--normalize check linear -i " + dir / "bad.hg3").exit_code == 0);
    CHECK(cli::run("check linear --normalize -i " + dir / "bad.hg3").exit_code == 0);

    write_file(dir / "big.hg3", "hg 3 11 1\n0 1 2\n");
    CHECK(cli::run("check colorable --palette phi0 -i " + dir / "big.hg3").exit_code == 3);
    CHECK(cli::run("check colorable --palette phi0 --allow-large -i " + dir / "big.hg3").exit_code == 0);

    write_file(dir / "small.hg3", "hg 3 4 1\n0 1 2\n");
    CHECK(cli::run("audit density -i " + dir / "small.hg3" + " --epsilon 1/2").exit_code == 1);
    CHECK(cli::run("audit density -i " + dir / "small.hg3" + " --epsilon half").exit_code == 1);

    auto version = cli::run("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.out.find("hg/1") != std::string::npos);
    CHECK(version.out.find("phg/1") != std::string::npos);
    CHECK(version.out.find("cert/1") != std::string::npos);
}

TEST_CASE("generated files pass strict parsing downstream")
{
    cli::ScratchDir dir;
    REQUIRE(cli::run("--seed 4 gen greedy-linear --n 30 -o " + dir / "g.hg5").exit_code == 0);
    REQUIRE(cli::run("--seed 4 gen fan-expand -i " + dir / "g.hg5" + " -o " + dir / "f.hg3" + " --emit-choices "
                + dir / "f.choices" + " --emit-certificate " + dir / "f.cert")
                .exit_code
        == 0);
    auto v = cli::run("check certificate --palette phi3 -i " + dir / "f.hg3" + " -c " + dir / "f.cert");
    REQUIRE(v.exit_code == 0);
    CHECK(json::parse(v.out)["valid"] == true);

    // replaying the choices reproduces the expansion
    REQUIRE(cli::run("gen fan-expand -i " + dir / "g.hg5" + " --choices " + dir / "f.choices" + " -o " + dir / "f2.hg3")
                .exit_code
        == 0);
    CHECK(cli::slurp(dir / "f.hg3") == cli::slurp(dir / "f2.hg3"));

    REQUIRE(cli::run("--seed 2 gen palette-random --palette phi8 --n 40 -o " + dir / "p.hg3" + " --emit-certificate "
                + dir / "p.cert")
                .exit_code
        == 0);
    auto pv = cli::run("check certificate --palette phi8 -i " + dir / "p.hg3" + " -c " + dir / "p.cert");
    CHECK(json::parse(pv.out)["valid"] == true);
    CHECK(cli::run("audit density -i " + dir / "p.hg3" + " --epsilon 1/2 --samples 10").exit_code == 0);

    REQUIRE(cli::run("--seed 1 gen partitioned-random --palette phi8 --parts 5 --size 6 -o " + dir / "h.phg").exit_code
        == 0);
    auto t = cli::run("audit triads -i " + dir / "h.phg" + " --epsilon 0.1");
    REQUIRE(t.exit_code == 0);
    CHECK(json::parse(t.out)["violations"] == 0);
}

TEST_CASE("skeleton and embedding commands")
{
    cli::ScratchDir dir;
    write_file(dir / "fan.hg3", fan_text);
    REQUIRE(cli::run("gen partitioned-random --roles --parts 8 -o " + dir / "roles.phg").exit_code == 0);
    auto sk = cli::run("extract-skeleton -i " + dir / "roles.phg" + " --delta 1/10 --guest " + dir / "fan.hg3"
        + " -o " + dir / "emb.json");
    REQUIRE(sk.exit_code == 0);
    auto doc = json::parse(sk.out);
    CHECK(doc["success"] == true);
    CHECK(doc["indices"].size() == 8);
    CHECK(doc["holds"] == true);
    CHECK(doc["guest_embedded"] == true);
    auto check = cli::run("check embedding --host " + dir / "roles.phg" + " --guest " + dir / "fan.hg3" + " -e "
        + dir / "emb.json");
    REQUIRE(check.exit_code == 0);
    CHECK(json::parse(check.out)["valid"] == true);

    auto e = cli::run("embed --host " + dir / "roles.phg" + " --guest " + dir / "fan.hg3");
    REQUIRE(e.exit_code == 0);
    CHECK(json::parse(e.out)["verified"] == true);

    write_file(dir / "empty.phg", "phg 4 2\n");
    auto fail = cli::run("extract-skeleton -i " + dir / "empty.phg" + " --delta 0.1");
    REQUIRE(fail.exit_code == 0);
    CHECK(json::parse(fail.out)["failed_stage"] == "profile");
}

TEST_CASE("identical invocations give identical bytes")
{
    cli::ScratchDir dir;
    for (auto args : {std::string("--seed 9 gen palette-random --palette phi8 --n 60 -o "),
             std::string("--seed 9 gen greedy-linear --n 45 -o "),
             std::string("--seed 9 gen partitioned-random --palette phi3 --parts 6 --size 5 -o ")}) {
        auto a = cli::run(args + dir / "a");
        auto b = cli::run(args + dir / "b");
        REQUIRE(a.exit_code == 0);
        CHECK(cli::slurp(dir / "a") == cli::slurp(dir / "b"));
        auto ja = json::parse(a.out), jb = json::parse(b.out);
        ja.erase("output");
        jb.erase("output");
        CHECK(ja == jb);
    }
    REQUIRE(cli::run("--seed 9 gen palette-random --palette phi8 --n 60 -o " + dir / "h").exit_code == 0);
    auto d1 = cli::run("--seed 3 audit density -i " + dir / "h" + " --epsilon 0.25 --samples 40");
    auto d2 = cli::run("--seed 3 audit density -i " + dir / "h" + " --epsilon 0.25 --samples 40");
    CHECK(d1.exit_code == 0);
    CHECK(d1.out == d2.out);
    // no temp files are left behind
    int files = 0;
    for ([[maybe_unused]] auto & entry : std::filesystem::directory_iterator(dir.path))
        ++files;
    CHECK(files == 3);
}
