#include "fixtures.hpp"
#include "oracles.hpp"

#include "ipset/io.hpp"

#include <doctest.h>
#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace ipset;
namespace fs = std::filesystem;

namespace {

struct Run {
    int rc = -1;
    std::string out;
};

Run ipset_cli(const std::string& args)
{
    const std::string cmd = std::string(IPSET_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name)
{
    return std::string(IPSET_DATA_DIR) + "/" + name;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (!l.empty())
            out.push_back(l);
    return out;
}

std::vector<DistanceMatrix> records(const std::string& text)
{
    std::vector<DistanceMatrix> out;
    for (const auto& l : lines(text))
        out.push_back(parse_record(l));
    return out;
}

Integer record_characteristic(const std::string& line)
{
    const auto j = nlohmann::json::parse(line);
    return Integer(j.at("characteristic").dump(), 10);
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("ipset_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("verify")
{
    auto r = ipset_cli("verify " + data("heptagon_22270.txt"));
    CHECK(r.rc == 0);
    CHECK(r.out.find("diameter=22270 characteristic=2002 canonical=true") != std::string::npos);
    CHECK(r.out.find("35 triples non-collinear") != std::string::npos);
    CHECK(r.out.find("35 quadruples non-concyclic") != std::string::npos);

    r = ipset_cli("verify " + data("heptagon_66810.txt"));
    CHECK(r.rc == 0);
    CHECK(r.out.find("diameter=66810") != std::string::npos);

    r = ipset_cli("verify --format json " + data("heptagon_66810.txt"));
    CHECK(r.rc == 0);
    CHECK(r.out.find("\"passed\":true") != std::string::npos);

    CHECK(ipset_cli("verify " + data("asymmetric.txt")).rc == 2);
    CHECK(ipset_cli("verify " + data("collinear_123.txt")).rc == 1);
    CHECK(ipset_cli("verify " + data("heptagon_22270_perturbed.txt")).rc == 1);
    CHECK(ipset_cli("verify /nonexistent/matrix.txt").rc == 2);
}

TEST_CASE("embed and distances")
{
    auto r = ipset_cli("embed " + data("heptagon_22270.txt"));
    REQUIRE(r.rc == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 7);
    CHECK(out[3] == "(245363/17, 3144/17*sqrt(2002))");
    CHECK(out[6] == "(19079044/2227, -54168/2227*sqrt(2002))");

    r = ipset_cli("embed --format json " + data("triangle_543.txt"));
    REQUIRE(r.rc == 0);
    const auto e = parse_embedding_json(r.out);
    CHECK(e.k == 1);
    CHECK(e.points[2].x == Rational(Integer(16), Integer(5)));
    CHECK(e.points[2].y_coeff == Rational(Integer(12), Integer(5)));

    CHECK(ipset_cli("embed " + data("heptagon_22270_perturbed.txt")).rc == 1);
    CHECK(ipset_cli("embed " + data("asymmetric.txt")).rc == 2);

    for (const auto* name : {"heptagon_22270.txt", "heptagon_66810.txt", "triangle_543.txt"}) {
        const auto path = scratch(std::string(name) + ".json");
        std::ofstream(path) << ipset_cli("embed --format json " + data(name)).out;
        r = ipset_cli("distances " + path.string());
        CHECK(r.rc == 0);
        CHECK(parse_matrix_text(r.out) == read_matrix_file(data(name)));
    }

    const auto bad = scratch("nonintegral.json");
    std::ofstream(bad) << R"({"radicand":1,"points":[{"x":"0/1","y":{"coeff":"0/1","radicand":1}},{"x":"1/1","y":{"coeff":"1/1","radicand":1}}]})";
    CHECK(ipset_cli("distances " + bad.string()).rc == 1);
    const auto garbage = scratch("garbage.json");
    std::ofstream(garbage) << "{not json";
    CHECK(ipset_cli("distances " + garbage.string()).rc == 2);
}

TEST_CASE("canon")
{
    const auto h = fixtures::heptagon_22270();
    const std::vector<std::size_t> perm{4, 2, 6, 0, 5, 1, 3};
    const auto path = scratch("shuffled.txt");
    std::ofstream(path) << format_matrix(h.permuted(perm));
    const auto r = ipset_cli("canon " + path.string());
    CHECK(r.rc == 0);
    CHECK(parse_matrix_text(r.out) == h);
}

TEST_CASE("search")
{
    auto r = ipset_cli("search --n 5 --dmin 1 --dmax 73");
    REQUIRE(r.rc == 0);
    const auto five = records(r.out);
    REQUIRE_FALSE(five.empty());
    for (const auto& m : five)
        CHECK(m.diameter() == 73);

    r = ipset_cli("search --n 7 --dmin 22270 --dmax 22270 --char 2002");
    REQUIRE(r.rc == 0);
    REQUIRE(records(r.out).size() == 1);
    CHECK(records(r.out)[0] == fixtures::heptagon_22270());

    r = ipset_cli("search --n 3 --dmax 1 --format matrix");
    CHECK(r.rc == 0);
    CHECK(parse_matrix_text(r.out) == fixtures::triangle(1, 1, 1));

    const auto want = oracles::brute_force_quadrilaterals(30);
    std::set<std::vector<Integer>> got;
    for (const auto& m : records(ipset_cli("search --n 4 --dmax 30").out))
        got.insert(m.upper_vector());
    CHECK(got == want);
}

TEST_CASE("search output does not depend on jobs or shards")
{
    const auto one = ipset_cli("search --n 4 --dmax 60");
    const auto three = ipset_cli("search --n 4 --dmax 60 --jobs 3");
    REQUIRE(one.rc == 0);
    CHECK(one.out == three.out);

    std::multiset<std::string> merged;
    for (int i = 0; i < 3; ++i)
        for (const auto& l : lines(ipset_cli("search --n 4 --dmax 60 --shard " + std::to_string(i) + "/3").out))
            merged.insert(l);
    const auto all = lines(one.out);
    CHECK(merged == std::multiset<std::string>(all.begin(), all.end()));
}

TEST_CASE("checkpoint and resume")
{
    const auto full_ckpt = scratch("full.ckpt");
    fs::remove(full_ckpt);
    const auto full = ipset_cli("search --n 4 --dmax 40 --checkpoint " + full_ckpt.string());
    REQUIRE(full.rc == 0);
    const auto keys = read_checkpoint(full_ckpt);
    REQUIRE(keys.size() > 20);

    // interrupted run: only the first half of the keys made it to disk
    std::ifstream in(full_ckpt);
    std::vector<std::string> ckpt_lines;
    for (std::string l; std::getline(in, l);)
        ckpt_lines.push_back(l);
    const auto part = scratch("part.ckpt");
    {
        std::ofstream out(part);
        for (std::size_t i = 0; i < ckpt_lines.size() / 2; ++i)
            out << ckpt_lines[i] << '\n';
    }
    const auto first_half = read_checkpoint(part);

    const auto resumed = ipset_cli("search --n 4 --dmax 40 --resume --checkpoint " + part.string());
    REQUIRE(resumed.rc == 0);
    CHECK(read_checkpoint(part) == keys);

    std::vector<std::string> expected;
    for (const auto& l : lines(full.out)) {
        const auto m = parse_record(l);
        const auto k = record_characteristic(l);
        if (first_half.count({m.diameter().get_si(), k}) == 0)
            expected.push_back(l);
    }
    CHECK(lines(resumed.out) == expected);
}

TEST_CASE("search flag errors")
{
    CHECK(ipset_cli("search --n 4 --dmax 10 --cluster --char 6").rc == 2);
    CHECK(ipset_cli("search --n 4 --dmax 10 --resume").rc == 2);
    CHECK(ipset_cli("search --n 4 --dmin 5 --dmax 4").rc == 2);
    CHECK(ipset_cli("search --n 4 --dmax 10 --char 12").rc == 2);
    CHECK(ipset_cli("search --n 4 --dmax 10 --shard 3/2").rc == 2);
    CHECK(ipset_cli("search --n 4 --dmax 10 --shard x").rc == 2);
    CHECK(ipset_cli("search --n 2 --dmax 10").rc == 2);
    CHECK(ipset_cli("search --dmax 10").rc == 2);
    CHECK(ipset_cli("frobnicate").rc == 2);
    CHECK(ipset_cli("").rc == 2);
}

TEST_CASE("mindiam")
{
    auto r = ipset_cli("mindiam --n 4 --cap 20");
    CHECK(r.rc == 0);
    CHECK(r.out == "n=4 min_diameter=8\n");
    r = ipset_cli("mindiam --n 4 --cap 7");
    CHECK(r.rc == 1);
    CHECK(ipset_cli("mindiam --n 4 --cap 0").rc == 2);
}

TEST_CASE("modsearch")
{
    for (int n : {2, 5, 7}) {
        const auto r = ipset_cli("modsearch --modulus " + std::to_string(n));
        REQUIRE(r.rc == 0);
        const auto out = lines(r.out);
        const std::string head = "modulus=" + std::to_string(n) + " size=" + std::to_string(oracles::brute_force_modular_max(n)) + " exact";
        CHECK(out[0].rfind(head, 0) == 0);
        CHECK(out.size() == oracles::brute_force_modular_max(n) + 1);
    }
    CHECK(ipset_cli("modsearch --modulus 1").rc == 2);
    const auto r = ipset_cli("modsearch --modulus 13 --budget 3");
    CHECK(r.rc == 0);
    CHECK(r.out.find("lower_bound") != std::string::npos);
}

TEST_CASE("catalog")
{
    const auto r = ipset_cli("catalog");
    REQUIRE(r.rc == 0);
    auto row = [&](const std::string& name) {
        for (const auto& l : lines(r.out))
            if (l.rfind(name + " ", 0) == 0) {
                std::istringstream s(l.substr(name.size()));
                std::string v;
                s >> v;
                return v;
            }
        return std::string();
    };
    CHECK(row("min_diameter_general_position n=3") == "1");
    CHECK(row("min_diameter_general_position n=4") == "8");
    CHECK(row("min_diameter_general_position n=5") == "73");
    CHECK(row("min_diameter_general_position n=6") == "174");
    CHECK(row("min_diameter_general_position n=7") == "22270");
    CHECK(row("smallest_6_2_cluster_diameter") == "1886");
    CHECK(row("heptagon_22270_characteristic") == "2002");
    CHECK(row("restricted_search_characteristic_bound") == "6469693230");
}
