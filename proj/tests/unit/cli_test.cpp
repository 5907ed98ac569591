#include "mixedmoore/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "mixedmoore");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = mixedmoore::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "mixedmoore_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("bound")
{
    const auto r = run({"bound", "--k", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("moore=19") != std::string::npos);
    CHECK(r.out.find("upper=14") != std::string::npos);
}

TEST_CASE("construct then diameter")
{
    const auto path = scratch("f3.txt").string();
    CHECK(run({"construct", "--family", "F", "--n", "3", "--out", path}).code == 0);
    const auto r = run({"diameter", "--in", path});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");
}

TEST_CASE("codec round trip through files")
{
    const auto d6 = scratch("k.d6").string(), txt = scratch("k.txt").string();
    CHECK(run({"construct", "--family", "F", "--n", "2", "--format", "digraph6", "--out", d6}).code == 0);
    CHECK(run({"codec", "--decode", "--in", d6, "--out", txt}).code == 0);
    const auto r = run({"codec", "--encode", "--in", txt});
    std::ifstream in(d6);
    std::string line;
    std::getline(in, line);
    CHECK(r.out == line + "\n");
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    const auto r = run({"verify", "--suite", "nope"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(run({"cayley", "--group", "cyclic:x"}).code == 2);
    CHECK(run({"voltage-search", "--group", "dihedral:18", "--base", "fig8", "--budget", "10"}).code == 2);
}

TEST_CASE("verify table3 passes and output is deterministic")
{
    const auto a = run({"--no-timing", "verify", "--suite", "table3"});
    const auto b = run({"--no-timing", "--jobs", "2", "verify", "--suite", "table3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cayley and lift")
{
    const auto c = run({"cayley", "--group", "dihedral:14", "--s1", "Ref(0)", "--s2", "Rot(1)"});
    CHECK(c.code == 0);
    CHECK(c.out.find("diameter=4") != std::string::npos);
    const auto l = run({"lift", "--group", "dihedral:18", "--base", "fig7"});
    CHECK(l.code == 0);
    CHECK(l.out.find("order=72") != std::string::npos);
    CHECK(l.out.find("diameter=8") != std::string::npos);
}

TEST_CASE("search writes survivors")
{
    const auto dir = scratch("k3").string();
    const auto r = run({"--no-timing", "search", "--mode", "almost-moore", "--k", "3", "--out", dir});
    CHECK(r.code == 0);
    CHECK(r.out.find("survivors=3") != std::string::npos);
    std::ifstream in(std::filesystem::path(dir) / "survivors.d6");
    int lines = 0;
    for (std::string s; std::getline(in, s);)
        lines += !s.empty();
    CHECK(lines == 3);
}
