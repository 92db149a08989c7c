#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bfc/cli.hpp"
#include "bfc/symm.hpp"
#include "json.hpp"

using namespace bfc;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path.string();
}

} // namespace

TEST_CASE("convert")
{
    auto r = run({"convert", "--from", "boson", "--to", "fermion", "--expr", "z1^2"});
    CHECK(r.code == exit_code::success);
    CHECK(r.out == "xi[-1] + xi[0,1]\n");

    CHECK(run({"convert", "--from", "boson", "--to", "symm-s", "--expr", "z2"}).out == "s(2) - s(1,1)\n");
    CHECK(run({"convert", "--from", "symm", "--to", "boson", "--expr", "p2*p1"}).out == "z1*z2\n");
    CHECK(run({"convert", "--from", "boson", "--to", "asymm", "--expr", "z1"}).out == "S[0]\n");
    CHECK(run({"schur-expand", "--expr", "p1^2"}).out == "s(2) + s(1,1)\n");
}

TEST_CASE("convert through json documents")
{
    auto path = temp_file("bfc_test_fermion.json",
                          R"({"space": "fermion", "terms": [{"coeff": "1", "partition": [2]}]})");
    auto r = run({"convert", "--from", "fermion", "--to", "boson", "--json", path});
    CHECK(r.code == exit_code::success);
    CHECK(r.out == "1/2*z1^2 + 1/2*z2\n");

    auto j = run({"convert", "--from", "boson", "--to", "fermion", "--expr", "z2", "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["space"] == "fermion");
    CHECK(doc["terms"].size() == 2);

    auto shifted = temp_file("bfc_test_shifted.json",
                             R"({"space": "fermion", "terms": [{"coeff": "1", "indices": [0], "tail_start": 3}]})");
    auto bad = run({"convert", "--from", "fermion", "--to", "boson", "--json", shifted});
    CHECK(bad.code == exit_code::usage);
    CHECK(bad.err.find("charge -1") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    auto mixed = run({"convert", "--from", "boson", "--to", "fermion", "--expr", "z1*p2"});
    CHECK(mixed.code == exit_code::usage);
    CHECK(mixed.err.find("mixed variable families (z and p) at offset 3") != std::string::npos);
    CHECK(mixed.out.empty());

    CHECK(run({"convert", "--from", "boson", "--to", "fermion", "--expr", "z9"}).code == exit_code::usage);
    CHECK(run({"convert", "--from", "boson", "--to", "fermion", "--expr", "z3", "--max-degree", "2"}).code ==
          exit_code::usage);
    CHECK(run({"convert", "--from", "boson", "--to", "fermion"}).code == exit_code::usage);
    CHECK(run({"convert", "--from", "boson", "--to", "nowhere", "--expr", "z1"}).code == exit_code::usage);
    CHECK(run({"frobnicate"}).code == exit_code::usage);
    CHECK(run({"verify", "--degree", "9"}).code == exit_code::usage);
    CHECK(run({"chartable", "9"}).code == exit_code::usage);
    CHECK(run({"inner", "--space", "boson", "z1"}).code == exit_code::usage);
    CHECK(run({"convert", "--from", "fermion", "--to", "boson", "--json", "/nonexistent/file.json"}).code ==
          exit_code::usage);
}

TEST_CASE("help exits with 0")
{
    auto r = run({"--help"});
    CHECK(r.code == exit_code::success);
    CHECK(r.out.find("chartable") != std::string::npos);
}

TEST_CASE("inner")
{
    CHECK(run({"inner", "--space", "boson", "z1^2", "z1^2"}).out == "2\n");
    CHECK(run({"inner", "--space", "symm", "p2", "p1^2"}).out == "0\n");
    CHECK(run({"inner", "--space", "boson", "z1^2 + z2", "1/2*z2"}).out == "1\n");

    auto a = temp_file("bfc_test_a.json", R"({"space": "fermion", "terms": [{"coeff": "2", "partition": [1]}]})");
    auto b = temp_file("bfc_test_b.json", R"({"space": "fermion", "terms": [{"coeff": "3/4", "partition": [1]}]})");
    CHECK(run({"inner", "--space", "fermion", a, b}).out == "3/2\n");
}

TEST_CASE("chartable")
{
    auto r = run({"chartable", "3"});
    CHECK(r.code == exit_code::success);
    CHECK(r.out == "         (1,1,1)  (2,1)  (3)\n"
                   "(3)            1      1    1\n"
                   "(2,1)          2      0   -1\n"
                   "(1,1,1)        1     -1    1\n");

    auto j = nlohmann::json::parse(run({"chartable", "3", "--format", "json"}).out);
    CHECK(j["values"] == nlohmann::json{{1, 1, 1}, {2, 0, -1}, {1, -1, 1}});
    CHECK(j["columns"][0] == nlohmann::json{1, 1, 1});
}

TEST_CASE("chartable rows have unit norm")
{
    // sum over columns of chi(mu)^2 / z_mu = 1 for every row
    for (int n = 1; n <= 6; ++n) {
        auto j = nlohmann::json::parse(run({"chartable", std::to_string(n), "--format", "json"}).out);
        for (const auto& row : j["values"]) {
            Rational total = 0;
            for (std::size_t c = 0; c < row.size(); ++c) {
                Partition mu(j["columns"][c].get<std::vector<int>>());
                long chi = row[c].get<long>();
                total += Rational(chi * chi) / Rational(z_mu(mu));
            }
            CHECK(total == 1);
        }
    }
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--degree", "3"});
    CHECK(r.code == exit_code::success);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("degree  monomials  pairs") == 0);

    auto j = nlohmann::json::parse(run({"verify", "--degree", "2", "--format", "json"}).out);
    CHECK(j["total_pairs"] == 5);
    CHECK(j["passed"] == true);
    CHECK(j["degrees"][2]["pairs"] == 3);
}

TEST_CASE("output is deterministic")
{
    std::vector<std::string> args = {"convert", "--from", "boson", "--to", "fermion", "--expr", "(z1 + z2 + z3)^2"};
    auto first = run(args).out;
    for (int i = 0; i < 5; ++i)
        CHECK(run(args).out == first);
    CHECK(run({"verify", "--degree", "5"}).out == run({"verify", "--degree", "5"}).out);
}
