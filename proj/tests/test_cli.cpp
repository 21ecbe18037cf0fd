#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fracfactor/cli.hpp"
#include "fracfactor/json_io.hpp"

using namespace fracfactor;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream s(text);
    std::string line;
    while (std::getline(s, line))
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("construct")
{
    auto r = run_cli({"construct", "--family", "extremal", "--n", "7", "--a", "1"});
    CHECK(r.code == cli::ok);
    CHECK(r.out == to_graph6(extremal(7, 1)) + "\n");

    r = run_cli({"construct", "--n", "5"});
    CHECK(r.out == "D~{\n");

    r = run_cli({"construct", "--family", "dense", "--n", "4", "--max-missing", "1"});
    CHECK(lines_of(r.out).size() == 7);

    CHECK(run_cli({"construct", "--family", "extremal", "--n", "2", "--a", "1"}).code == cli::usage);
    CHECK(run_cli({"construct", "--family", "wheel", "--n", "5"}).code == cli::usage);
}

TEST_CASE("spectral")
{
    const auto r = run_cli({"spectral", "--graph6", "Bw"});
    REQUIRE(r.code == cli::ok);
    const Json j = Json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(std::abs(j["rho"].get<double>() - 2.0) <= 1e-9);
    CHECK(std::abs(j["q"].get<double>() - 4.0) <= 1e-9);
    CHECK(j["hsf_bound"].get<double>() == doctest::Approx(2.0));
    CHECK(j["feng_yu_bound"].get<double>() == doctest::Approx(4.0));
    CHECK(j["residual"].get<double>() <= j["tol"].get<double>());

    const Json split = Json::parse(run_cli({"spectral", "--graph6", "A?"}).out);
    CHECK(split["feng_yu_bound"].is_null());

    const auto edges = run_cli({"spectral", "--input-format", "edges"}, "4\n0 1\n1 2\n2 3\n3 0\n");
    REQUIRE(edges.code == cli::ok);
    CHECK(std::abs(Json::parse(edges.out)["rho"].get<double>() - 2.0) <= 1e-9);
}

TEST_CASE("check")
{
    const std::string g6 = to_graph6(extremal(7, 1));
    auto r = run_cli({"check", "--graph6", g6, "--a", "1", "--b", "3"});
    CHECK(r.code == cli::property_false);
    Json j = Json::parse(r.out);
    CHECK(j["deleted"] == false);
    CHECK(j["witness"]["S"] == Json::array());
    CHECK(j["witness"]["T"] == Json::array({6}));
    CHECK(j["witness"]["theta"] == 0);
    CHECK(j["witness"]["epsilon"] == 1);

    for (const char* method : {"criterion", "edges", "flow"}) {
        r = run_cli({"check", "--a", "1", "--b", "3", "--method", method}, to_graph6(complete(7)) + "\n");
        CHECK(r.code == cli::ok);
        CHECK(Json::parse(r.out)["deleted"] == true);
    }

    r = run_cli({"check", "--graph6", to_graph6(complete(26)), "--a", "1", "--b", "3"});
    CHECK(r.code == cli::usage);
    CHECK(r.err.find("error:") == 0);
    r = run_cli({"check", "--graph6", to_graph6(complete(26)), "--a", "1", "--b", "3", "--method", "flow"});
    CHECK(r.code == cli::ok);
}

TEST_CASE("factor")
{
    auto r = run_cli({"factor", "--graph6", to_graph6(star(3)), "--a", "1", "--b", "1", "--integer"});
    CHECK(r.code == cli::property_false);
    Json j = Json::parse(r.out);
    CHECK(j["has_factor"] == false);
    CHECK(j["witness"]["S"] == Json::array({0}));
    CHECK(j["assignment"].is_null());
    CHECK(j["integer_factor"] == false);

    r = run_cli({"factor", "--graph6", to_graph6(cycle(5)), "--g", "1,1,1,1,1", "--f", "1,1,1,1,1"});
    CHECK(r.code == cli::ok);
    j = Json::parse(r.out);
    CHECK(j["has_factor"] == true);
    CHECK(j["witness"].is_null());
    double total = 0.0;
    for (const auto& e : j["assignment"])
        total += e["h"].get<double>();
    CHECK(total == doctest::Approx(2.5));

    CHECK(run_cli({"factor", "--graph6", "Bw"}).code == cli::usage);
    CHECK(run_cli({"factor", "--graph6", "Bw", "--g", "1,1", "--f", "1,1"}).code == cli::usage);
}

TEST_CASE("theorem")
{
    auto r = run_cli({"theorem", "--graph6", to_graph6(complete(7)), "--theorem", "1.4", "--a", "1", "--b", "3"});
    CHECK(r.code == cli::ok);
    const Json j = Json::parse(r.out);
    CHECK(j["theorem"] == "1.4");
    CHECK(j["hypothesis_met"] == true);
    CHECK(j["oracle"] == true);
    CHECK(j["consistent"] == true);
    CHECK(j["hypothesis_values"].contains("rho_extremal"));

    r = run_cli({"theorem", "--graph6", to_graph6(complete(7)), "--a", "1", "--b", "3", "--max-n", "5"});
    CHECK(Json::parse(r.out)["oracle"] == "skipped(size-guard)");
    CHECK(run_cli({"theorem", "--graph6", "Bw", "--theorem", "1.5", "--a", "1", "--b", "3"}).code == cli::usage);
}

TEST_CASE("scan")
{
    const std::string input = to_graph6(complete(7)) + "\nnope\n" + to_graph6(extremal(7, 1)) + "\n";
    auto r = run_cli({"scan", "--a", "1", "--b", "3", "--theorem", "1.6"}, input);
    CHECK(r.code == cli::ok);
    auto out = lines_of(r.out);
    REQUIRE(out.size() == 4);
    CHECK(Json::parse(out[0])["counterexample"] == false);
    CHECK(Json::parse(out[1]).contains("error"));
    const Json summary = Json::parse(out[3])["summary"];
    CHECK(summary["lines"] == 3);
    CHECK(summary["errors"] == 1);
    CHECK(summary["counterexamples"] == 0);

    r = run_cli({"scan", "--a", "1", "--b", "3", "--format", "tsv"}, input);
    CHECK(r.code == cli::ok);
    out = lines_of(r.out);
    REQUIRE(out.size() == 5);
    CHECK(out[0] == tsv_header());
    CHECK(out[1] == "1\t1.8\ttrue\ttrue\ttrue\t-\t-\t21\t6");
    CHECK(out[2].rfind("2\t1.8\terror\t", 0) == 0);
    CHECK(out[3] == "3\t1.8\tfalse\tfalse\ttrue\t-\t-\t16\t1");

    const auto path = std::filesystem::temp_directory_path() / "fracfactor_cli_scan.g6";
    {
        std::ofstream f(path);
        f << to_graph6(complete(8)) << '\n';
    }
    r = run_cli({"scan", "--file", path.string(), "--a", "1", "--b", "3", "--theorem", "1.4"});
    CHECK(r.code == cli::ok);
    CHECK(Json::parse(lines_of(r.out)[0])["report"]["hypothesis_met"] == true);
    std::filesystem::remove(path);

    CHECK(run_cli({"scan", "--file", "/nonexistent/input.g6", "--a", "1", "--b", "3"}).code == cli::usage);
    CHECK(run_cli({"scan", "--a", "3", "--b", "1"}, input).code == cli::usage);
}

TEST_CASE("sharpness")
{
    auto r = run_cli({"sharpness", "--n", "9", "--a", "2", "--b", "3"});
    CHECK(r.code == cli::ok);
    const Json j = Json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["witness"]["T"] == Json::array({8}));
    CHECK(j["rho_hypothesis_met"] == false);
    CHECK(run_cli({"sharpness", "--n", "5", "--a", "1", "--b", "3"}).code == cli::usage);
}

TEST_CASE("usage errors and help")
{
    CHECK(run_cli({}).code == cli::usage);
    CHECK(run_cli({"bogus"}).code == cli::usage);
    CHECK(run_cli({"check", "--graph6", "Bw"}).code == cli::usage);
    CHECK(run_cli({"check", "--graph6", "Bw?", "--a", "1", "--b", "1"}).code == cli::usage);
    CHECK(run_cli({"spectral"}, "").code == cli::usage);
    const auto help = run_cli({"--help"});
    CHECK(help.code == cli::ok);
    CHECK(help.out.find("scan") != std::string::npos);
}
