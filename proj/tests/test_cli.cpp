#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "superko/json_io.hpp"

using namespace superko;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run superko_run(std::vector<std::string> args) {
    args.insert(args.begin(), "superko");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(superko_run({}).code == 2);
    CHECK(superko_run({"verify", "nosuch"}).code == 2);
    CHECK(superko_run({"verify"}).code == 2);
    CHECK(superko_run({"ko-table", "--n-range", "3..1"}).code == 2);
    CHECK(superko_run({"ko-table", "--n-range", "0..30"}).code == 2);
    CHECK(superko_run({"ko-table", "--format", "xml"}).code == 2);
    CHECK(superko_run({"tate", "--k-min", "2", "--k-max", "1"}).code == 2);
    CHECK(superko_run({"frobnicate"}).code == 2);
    CHECK(superko_run({"verify", "grassmann", "--input", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("ko-table json and markdown agree") {
    Run j = superko_run({"ko-table", "--n-range", "-8..7"});
    Run m = superko_run({"ko-table", "--n-range", "-8..7", "--format", "markdown"});
    REQUIRE(j.code == 0);
    REQUIRE(m.code == 0);
    Json doc = Json::parse(j.out);
    REQUIRE(doc["rows"].size() == 16);
    for (const auto& row : doc["rows"]) {
        std::string line = "| " + std::to_string(row["n"].get<int>()) + " | " + row["group"].get<std::string>() +
                           " | " + std::to_string(row["rank"].get<int>()) + " |";
        CHECK_MESSAGE(m.out.find(line) != std::string::npos, line);
    }
    for (int i = 0; i < 8; ++i) CHECK(doc["rows"][i]["group"] == doc["rows"][i + 8]["group"]);
    CHECK(doc["rows"][8]["group"] == "Z");
    CHECK(doc["rows"][9]["group"] == "Z/2");
}

TEST_CASE("verify is reproducible and honours SUPERKO_SEED") {
    Run a = superko_run({"verify", "grassmann", "--seed", "42"});
    Run b = superko_run({"verify", "grassmann", "--seed", "42", "--jobs", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    setenv("SUPERKO_SEED", "42", 1);
    Run c = superko_run({"verify", "grassmann"});
    unsetenv("SUPERKO_SEED");
    CHECK(c.out == a.out);
    Run d = superko_run({"verify", "grassmann", "--seed", "43"});
    CHECK(d.out != a.out);
    CHECK(Json::parse(a.out)["ok"] == true);
}

TEST_CASE("verify reads theory data") {
    Rng rng(61);
    std::string path = "superko_cli_input.json";
    {
        std::ofstream f(path);
        f << to_json(random_seft_generator(rng, 2, 8)).dump();
    }
    Run r = superko_run({"verify", "fieldtheory", "--input", path, "--format", "markdown"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fieldtheory.input_relations") != std::string::npos);
    {
        std::ofstream f(path);
        f << R"({"kind": "nothing"})";
    }
    CHECK(superko_run({"verify", "fieldtheory", "--input", path}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("pi0 and tate report success") {
    Run p = superko_run({"pi0", "--n", "1", "--dim-cap", "8"});
    CHECK(p.code == 0);
    CHECK(Json::parse(p.out)["ok"] == true);
    Run t = superko_run({"tate", "--n", "0", "--k-min", "-1", "--k-max", "1", "--format", "markdown"});
    CHECK(t.code == 0);
    CHECK(t.out.find("PASS") != std::string::npos);
}

TEST_CASE("output file") {
    std::string path = "superko_cli_output.json";
    Run r = superko_run({"ko-table", "--n-range", "0..1", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(Json::parse(ss.str())["rows"].size() == 2);
    std::remove(path.c_str());
}
