#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "partcat/cli.hpp"

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "partcat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int rc = partcat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("gram determinant") {
        Run r = run({"gram", "--category", "P", "--k", "2", "--det"});
        CHECK(r.rc == 0);
        CHECK(r.out == "t^3 - t^2\n");
    }

    TEST_CASE("enumerate") {
        Run r = run({"enumerate", "--category", "NC2", "--points", "0", "4"});
        CHECK(r.rc == 0);
        CHECK(lines(r.out) == 2);
        Run j = run({"enumerate", "--category", "P", "--points", "0", "3", "--format", "json"});
        CHECK(nlohmann::json::parse(j.out).size() == 5);
    }

    TEST_CASE("census") {
        Run r = run({"census", "--category", "P_even", "--kmax", "2", "--format", "json"});
        REQUIRE(r.rc == 0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.size() == 3);
        CHECK(j[0]["new_indecomposables"] == 1);
        CHECK(j[1]["new_indecomposables"] == 1);
        CHECK(j[2]["new_indecomposables"] == 3);
        CHECK(j[2]["classes"][0].contains("group_order"));
    }

    TEST_CASE("other verbs") {
        CHECK(run({"mobius", "--category", "P", "--k", "3"}).rc == 0);
        CHECK(run({"omega", "--category", "P_even", "--k", "4"}).out == "t^7 - 3*t^6 + 3*t^5 - t^4\n");
        CHECK(run({"wscalar", "--map", "1,2", "--l", "3"}).out == "t - 2\n");
        CHECK(run({"projectives", "--category", "P", "--k", "2", "--format", "csv"}).rc == 0);
        CHECK(run({"surjective-check", "--category", "P_even", "--kmax", "3"}).rc == 0);
        CHECK(run({"jw", "--k", "3"}).rc == 0);
        CHECK(run({"jw", "--k", "2", "--t", "2", "--format", "json"}).rc == 0);
        CHECK(run({"fatten", "--partition", "1 1' | 2 3 | 4 2' | 3' 4'"}).out.rfind("1 2 1' | 2'\n", 0) == 0);
        CHECK(run({"negligible", "--category", "NC2", "--jw", "2", "--t", "1"}).out == "negligible\n");
        CHECK(run({"negligible", "--category", "P", "--partition", "1 1' | 2 2'", "--x", "--t", "3"}).out == "not negligible\n");
        Run s = run({"scan", "--category", "NC2", "--kmax", "4", "--format", "csv"});
        CHECK(s.rc == 0);
        CHECK(s.out.rfind("k,", 0) == 0);
    }

    TEST_CASE("generator files") {
        auto path = std::filesystem::temp_directory_path() / "partcat_gen_test.json";
        std::ofstream(path) << R"({"generated": {"generators": [{"upper": 2, "lower": 2, "blocks": [[1, 2, -1, -2]]}], "bound": 6}})";
        Run r = run({"enumerate", "--category", path.string(), "--points", "0", "4"});
        CHECK(r.rc == 0);
        CHECK(lines(r.out) == 3);
        std::filesystem::remove(path);
    }

    TEST_CASE("errors") {
        CHECK(run({"gram", "--category", "nope", "--k", "2"}).rc == 2);
        CHECK(run({"gram", "--category", "P"}).rc == 2);
        CHECK(run({"jw", "--k", "3", "--t", "1"}).rc == 2);
        CHECK(run({"omega", "--category", "NC", "--k", "4"}).rc == 2);
        CHECK(run({"bogus"}).rc == 2);
        CHECK(run({"gram", "--format", "xml", "--k", "1"}).rc == 2);
        CHECK(run({"negligible", "--category", "P", "--t", "1"}).rc == 2);
        Run bad = run({"enumerate", "--category", "P", "--points", "40", "0"});
        CHECK(bad.rc == 2);
        CHECK_FALSE(bad.err.empty());
    }
}
