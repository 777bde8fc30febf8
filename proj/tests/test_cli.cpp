#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ktoric/fanio.hpp"

using namespace ktoric;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(KTORIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name)
{
    return std::string(KTORIC_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string write_temp(const std::string& name, const std::string& content)
{
    std::string path = "/tmp/ktoric_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::vector<std::string> corpus = {
    "p2.json",           "p1xp1.json",    "hirzebruch_f2.json",
    "p112.json",         "p111122.json",  "borisov_open.json",
    "p1xp1_minus_2pts.json", "gerbe_p1_z2.json"};

}  // namespace

TEST_CASE("corpus files round-trip through parse and serialize")
{
    for (const auto& name : corpus) {
        FanFile f = parse_fan_json(read_file(data(name)));
        FanFile g = parse_fan_json(serialize_fan_json(f));
        CHECK(f == g);
        CHECK(serialize_fan_json(f) == serialize_fan_json(g));
    }
}

TEST_CASE("schema errors are rejected")
{
    CHECK_THROWS_AS(parse_fan_json("not json at all"), FanIoError);
    CHECK_THROWS_AS(parse_fan_json("{}"), FanIoError);
    CHECK_THROWS_AS(parse_fan_json(R"({"format": 2})"), FanIoError);
    CHECK_THROWS_AS(parse_fan_json(
                        R"({"format":1,"lattice":{"rank":1,"torsion":[2]},
                            "rays":[{"free":[1],"torsion":[]}],"max_cones":[[0]]})"),
                    FanIoError);
}

TEST_CASE("report on the projective plane")
{
    auto r = run_cli("report " + data("p2.json"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.output);
    CHECK(rep["validation"]["valid"] == true);
    CHECK(rep["validation"]["complete"] == true);
    CHECK(rep["k0"]["free"] == true);
    CHECK(rep["k0"]["rank"] == 3);
    CHECK(rep["dg_beta"]["rank"] == 1);
    CHECK(rep["simplicial"]["shellable"] == "shellable");
    CHECK(rep["simplicial"]["cm"]["Q"] == true);
}

TEST_CASE("report on the torsion open substack")
{
    auto r = run_cli("report " + data("borisov_open.json"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.output);
    CHECK(rep["k0"]["free"] == false);
    CHECK(rep["k0"]["rank"] == 2);
    CHECK(rep["k0"]["invariant_factors"] == json::array({4, 4}));
    CHECK(rep["k0"]["complete_hypothesis"] == false);
    CHECK(rep["validation"]["complete"] == false);
}

TEST_CASE("json reports are byte-identical across runs")
{
    for (const auto& name : {"p2.json", "borisov_open.json", "gerbe_p1_z2.json"}) {
        auto a = run_cli("report " + data(name));
        auto b = run_cli("report " + data(name));
        CHECK(a.output == b.output);
    }
}

TEST_CASE("text format and flags")
{
    auto r = run_cli("report " + data("p2.json") + " --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("rank 3") != std::string::npos);

    auto noshell = run_cli("report " + data("p2.json") + " --no-shellability");
    json rep = json::parse(noshell.output);
    CHECK(rep["simplicial"]["shellable"] == "skipped");

    auto capped = run_cli("report " + data("p2.json") + " --shell-cap 1");
    CHECK(json::parse(capped.output)["simplicial"]["shellable"] == "undecided");

    auto primes = run_cli("report " + data("p2.json") + " --primes 2,11");
    json prep = json::parse(primes.output);
    CHECK(prep["simplicial"]["cm"].contains("F11"));
    CHECK(!prep["simplicial"]["cm"].contains("F5"));

    auto laurent = run_cli("report " + data("p112.json") + " --mode laurent");
    json lrep = json::parse(laurent.output);
    CHECK(lrep["presentation"]["mode"] == "laurent");
    CHECK(lrep["k0"]["rank"] == 4);
}

TEST_CASE("exit codes")
{
    CHECK(run_cli("report /nonexistent.json").exit_code == 2);
    auto bad = write_temp("bad.json", "{\"format\": 1");
    CHECK(run_cli("report " + bad).exit_code == 2);

    // parallel rays: structurally invalid fan
    auto invalid = write_temp("invalid.json", R"({
      "format": 1, "name": "inv", "lattice": {"rank": 2, "torsion": []},
      "rays": [{"free": [1, 0], "torsion": []}, {"free": [2, 0], "torsion": []}],
      "max_cones": [[0], [1]]})");
    CHECK(run_cli("report " + invalid).exit_code == 1);

    CHECK(run_cli("order " + data("borisov_open.json") + " --element \"x7+1\"")
              .exit_code == 3);

    // a fan with a torus factor: infinite-rank K0
    auto torus = write_temp("torus.json", R"({
      "format": 1, "name": "cxcstar", "lattice": {"rank": 2, "torsion": []},
      "rays": [{"free": [1, 0], "torsion": []}],
      "max_cones": [[0]]})");
    CHECK(run_cli("order " + torus + " --element \"1\"").exit_code == 4);
}

TEST_CASE("element orders through the cli")
{
    auto r = run_cli("order " + data("borisov_open.json") +
                     " --element \"x1*(1-x1)^2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4\n");

    auto inf = run_cli("order " + data("p2.json") + " --element \"1\"");
    CHECK(inf.exit_code == 0);
    CHECK(inf.output == "infinite\n");

    auto zero = run_cli("order " + data("borisov_open.json") +
                        " --element \"(1-x1)^4\"");
    CHECK(zero.output == "1\n");
}

TEST_CASE("gerbe report uses the group ring and stays free")
{
    auto r = run_cli("report " + data("gerbe_p1_z2.json"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.output);
    CHECK(rep["k0"]["free"] == true);
    CHECK(rep["k0"]["rank"] == 4);
    CHECK(rep["dg_beta"]["rank"] == 1);
    CHECK(rep["dg_beta"]["torsion"] == json::array());
}
