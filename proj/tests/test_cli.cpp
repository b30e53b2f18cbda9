#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const fs::path dir = fs::temp_directory_path() / "plateau_cli_test";
    fs::create_directories(dir);
    const fs::path out = dir / "stdout.txt";
    const std::string cmd = std::string("\"") + PLATEAU_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
    Run r = run(args);
    REQUIRE(r.code == expect_code);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("analyze") {
    auto a = run_json("analyze --example 2");
    CHECK(a["type"] == "(-)");
    CHECK(a["s"] == 1);
    CHECK(a["k"] == 162);

    auto b = run_json("analyze --poly \"x1^2+x2^2\" --p 3");
    CHECK(b["bent"] == true);
    CHECK(b["eps0"] == -1);

    CHECK(run("analyze --poly \"x1^4\" --p 5").code == 2);
}

TEST_CASE("parse errors exit 1") {
    const fs::path bad = fs::temp_directory_path() / "plateau_bad_table.txt";
    std::ofstream(bad) << "3 2\n012\n";
    CHECK(run("analyze --table \"" + bad.string() + "\"").code == 1);
    CHECK(run("analyze --poly \"x1 +* x2\" --p 3").code == 1);
    CHECK(run("build --example 2 --family nope").code == 1);
    CHECK(run("analyze").code == 1);
}

TEST_CASE("build") {
    auto d = run_json("build --example 2 --family Dsq-punct");
    CHECK(d["code"]["length"] == 108);
    CHECK(d["code"]["dimension"] == 6);
    CHECK(d["code"]["min_distance"] == 63);
    CHECK(d["code"]["enumerator"] == "1+72z^63+576z^72+80z^81");
    CHECK(d["dual"]["length"] == 108);
    CHECK(d["dual"]["dimension"] == 102);
    CHECK(d["dual"]["min_distance"] == 3);
    CHECK(d["diff"].empty());

    auto e = run_json("build --poly \"x1^2+x2^2\" --p 3 --family D0");
    CHECK(e["code"]["length"] == 0);
    CHECK_FALSE(e["code"]["warnings"].empty());
}

TEST_CASE("quantum and LCD") {
    auto q = run_json("quantum --thm 7 --p 7 --n 2 --s 1");
    CHECK(q["length"] == 42);
    CHECK(q["dimension"] == 38);
    CHECK(q["distance"] == 3);
    CHECK(q["quantum_hamming"]["max_k"] == 38);

    auto l = run_json("lcd --thm 10 --p 3 --n 4 --s 2 --type +");
    CHECK(l["length"] == 41);
    CHECK(l["dimension"] == 36);
    CHECK(l["distance"] == 3);

    CHECK(run("quantum --thm 8 --p 5 --n 5").code == 4);
    CHECK(run("quantum --thm 9 --p 7 --n 3 --s 0 --type +").code == 4);
}

TEST_CASE("size guard exits 3") {
    CHECK(run("analyze --p 31 --n 6 --s 0 --type +").code == 3);
}

TEST_CASE("output does not depend on the job count") {
    Run a = run("build --example 2 --family Cf-punct --jobs 1");
    Run b = run("build --example 2 --family Cf-punct --jobs 8");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run c = run("analyze --example 1 --jobs 1");
    Run d = run("analyze --example 1 --jobs 8");
    CHECK(c.out == d.out);
}

TEST_CASE("verify scope") {
    auto v = run_json("verify lcd");
    CHECK(v["failed"] == 0);
    CHECK(run("verify nonsense").code == 1);
}
