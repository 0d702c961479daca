#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qgr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("qgr-cli-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("mul golden outputs") {
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "1", "--b", "1"}).out == "(2) + (1,1)\n");
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "2,2", "--b", "2,2"}).out == "1\n");
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "", "--b", "2,1"}).out == "(2,1)\n");
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "2,1", "--b", "2,1"}).out == "(2) + (1,1)\n");
}

TEST_CASE("bar, dual and cshift golden outputs") {
    CHECK(run({"bar", "--k", "2", "--n", "4", "--class", "1"}).out == "(2,1)\n");
    CHECK(run({"dual", "--k", "2", "--n", "4", "--class", "2,1"}).out == "(1)\n");
    CHECK(run({"cshift", "--k", "2", "--n", "4", "--class", "", "--j", "1"}).out == "(1,1)\n");
    CHECK(run({"cshift", "--k", "2", "--n", "4", "--class", "1"}).out == "(2,1)\n");
    CHECK(run({"bar", "--k", "2", "--n", "4", "--class", "(1) + (2)"}).out == "(1,1) + (2,1)\n");
}

TEST_CASE("gw golden outputs") {
    CHECK(run({"gw", "--k", "2", "--n", "4", "--a", "2,1", "--b", "2,1", "--c", "2"}).out == "value 1, d 1\n");
    CHECK(run({"gw", "--k", "2", "--n", "4", "--a", "1", "--b", "1", "--c", "1"}).out == "value 0, d none\n");
    CHECK(run({"gw", "--k", "2", "--n", "4", "--a", "", "--b", "", "--c", "2,2"}).out == "value 1, d 0\n");
    CHECK(run({"gw", "--k", "2", "--n", "4", "--a", "2,1", "--b", "2,1", "--c", "2", "--json"}).out ==
          "{\"value\":1,\"d\":1}\n");
    CHECK(run({"gw", "--k", "2", "--n", "4", "--a", "1", "--b", "1", "--c", "1", "--json"}).out ==
          "{\"value\":0,\"d\":null}\n");
}

TEST_CASE("text and JSON modes agree") {
    const Result text = run({"mul", "--k", "3", "--n", "6", "--a", "2,1", "--b", "3,1"});
    const Result js = run({"mul", "--k", "3", "--n", "6", "--a", "2,1", "--b", "3,1", "--json"});
    REQUIRE(text.code == 0);
    REQUIRE(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    std::string rebuilt;
    for (const auto& t : doc["terms"]) {
        std::string parts;
        for (const auto& p : t["p"]) parts += (parts.empty() ? "" : ",") + std::to_string(p.get<int>());
        const long long c = t["c"];
        if (!rebuilt.empty()) rebuilt += c < 0 ? " - " : " + ";
        const long long m = c < 0 && !rebuilt.empty() ? -c : c;
        if (parts.empty()) {
            rebuilt += std::to_string(m);
        } else {
            if (m != 1) rebuilt += std::to_string(m) + "*";
            rebuilt += "(" + parts + ")";
        }
    }
    CHECK(rebuilt + "\n" == text.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"verify", "--k", "0", "--n", "4"}).code == 2);
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "3", "--b", "1"}).code == 2);
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "3", "--b", "1"}).err.find("exceeds k=2") != std::string::npos);
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "1,1,1", "--b", "1"}).err.find("at most l=2") !=
          std::string::npos);
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "1,2", "--b", "1"}).code == 2);
    CHECK(run({"bar", "--k", "2", "--n", "4", "--class", "x"}).code == 2);
    CHECK(run({"gw", "--k", "2", "--n", "4", "--a", "1"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", "--k", "2", "--n", "4", "--suite", "bogus"}).code == 2);
    CHECK(run({"verify", "--k", "2", "--n", "4", "--tol", "-1"}).code == 2);
    CHECK(run({"spectrum", "--k", "3", "--n", "6", "--tol", "1e-30"}).code == 3);
    CHECK(run({"verify", "--k", "3", "--n", "6", "--suite", "spectrum", "--tol", "1e-30"}).code == 3);
}

TEST_CASE("verify reports") {
    const Result all = run({"verify", "--k", "2", "--n", "4", "--suite", "all"});
    CHECK(all.code == 0);
    const auto doc = nlohmann::json::parse(all.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["seed"] == qgr::kDefaultSeed);
    for (const auto& s : doc["suites"]) {
        CHECK(s["failed"] == 0);
        CHECK(s["ctx"]["k"] == 2);
    }

    const Result inv = run({"verify", "--k", "2", "--n", "5", "--suite", "involution"});
    CHECK(inv.code == 0);
    const auto inv_doc = nlohmann::json::parse(inv.out);
    bool found = false;
    for (const auto& s : inv_doc["suites"])
        if (s["suite"] == "bar_is_ring_map") {
            found = true;
            CHECK(s["checked"] == 55);
        }
    CHECK(found);
}

TEST_CASE("spectrum command") {
    const Result a = run({"spectrum", "--k", "1", "--n", "2"});
    REQUIRE(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j["points"].size() == 2);
    std::vector<double> re;
    for (const auto& p : j["points"]) {
        re.push_back(p["coords"][0][0]);
        CHECK(std::abs(p["coords"][0][1].get<double>()) < 1e-8);
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-1).epsilon(1e-8));
    CHECK(re[1] == doctest::Approx(1).epsilon(1e-8));

    const Result b = run({"spectrum", "--k", "2", "--n", "4"});
    CHECK(nlohmann::json::parse(b.out)["points"].size() == 6);
    CHECK(run({"spectrum", "--k", "2", "--n", "4"}).out == b.out);
    CHECK(run({"spectrum", "--k", "2", "--n", "4", "--seed", "99"}).code == 0);

    const auto dir = scratch_dir("spectrum");
    CHECK(run({"spectrum", "--k", "2", "--n", "4", "--out", (dir / "s.json").string()}).code == 0);
    CHECK(slurp(dir / "s.json") == b.out);
    fs::remove_all(dir);
}

TEST_CASE("cache round trip") {
    const auto dir = scratch_dir("cache");
    const std::string d = dir.string();
    const Result t = run({"table", "--k", "2", "--n", "5", "--cache-dir", d});
    REQUIRE(t.code == 0);
    const fs::path file = qgr::cli::cache_file(dir, 2, 5);
    CHECK(t.out == file.string() + "\n");
    const std::string first = slurp(file);

    CHECK(run({"mul", "--k", "2", "--n", "5", "--a", "2,1", "--b", "3,1", "--cache", "--cache-dir", d}).out ==
          run({"mul", "--k", "2", "--n", "5", "--a", "2,1", "--b", "3,1"}).out);
    CHECK(slurp(file) == first);

    CHECK(run({"table", "--k", "2", "--n", "5", "--out", (dir / "copy.json").string()}).code == 0);
    CHECK(slurp(dir / "copy.json") == first);

    // A missing cache file is created on first use.
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "1", "--b", "1", "--cache", "--cache-dir", d}).out ==
          "(2) + (1,1)\n");
    CHECK(fs::exists(qgr::cli::cache_file(dir, 2, 4)));

    // A file under the wrong name is rejected, not trusted.
    fs::copy_file(file, qgr::cli::cache_file(dir, 3, 5));
    CHECK(run({"mul", "--k", "3", "--n", "5", "--a", "1", "--b", "1", "--cache", "--cache-dir", d}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("QGR_CACHE_DIR overrides the default") {
    const auto dir = scratch_dir("env");
    ::setenv("QGR_CACHE_DIR", dir.c_str(), 1);
    CHECK(run({"mul", "--k", "2", "--n", "4", "--a", "1", "--b", "1", "--cache"}).code == 0);
    ::unsetenv("QGR_CACHE_DIR");
    CHECK(fs::exists(qgr::cli::cache_file(dir, 2, 4)));
    fs::remove_all(dir);
}
