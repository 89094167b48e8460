#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path out_path = fs::temp_directory_path() / "mvcut_test_out.txt";
    std::string cmd = std::string(MVCUT_BIN) + " " + args + " > " + out_path.string() +
                      " 2> /dev/null";
    int raw = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(raw), buf.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("approx subcommand exit codes and document shape") {
    RunResult ok = run("approx --named icosahedron");
    CHECK(ok.status == 0);
    json doc = json::parse(ok.out);
    CHECK(doc["command"] == "approx");
    CHECK(doc["input"]["n"] == 12);
    CHECK(doc["result"]["size"].get<int>() <= 5);
    CHECK(doc["result"]["kappa"] == 5);

    CHECK(run("approx --named complete -n 6").status == 2);

    auto p4 = write_temp("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    RunResult path = run("approx " + p4.string());
    CHECK(path.status == 0);
    CHECK(json::parse(path.out)["result"]["size"] == 1);

    auto bad = write_temp("bad.txt", "2 1\n0 5\n");
    CHECK(run("approx " + bad.string()).status == 1);

    auto split = write_temp("split.txt", "4 2\n0 1\n2 3\n");
    CHECK(run("approx " + split.string()).status == 1);  // disconnected
}

TEST_CASE("exact subcommand") {
    RunResult k5m = run("exact --named k5_minus");
    CHECK(k5m.status == 0);
    CHECK(json::parse(k5m.out)["result"]["k"] == 2);

    RunResult ico = run("exact --named icosahedron");
    CHECK(ico.status == 0);
    CHECK(json::parse(ico.out)["result"]["k"] == 3);

    CHECK(run("exact --named complete -n 4").status == 2);
}

TEST_CASE("verify subcommand") {
    auto p4 = write_temp("p4v.txt", "4 3\n0 1\n1 2\n2 3\n");
    CHECK(run("verify " + p4.string() + " --matching 1-2").status == 0);

    auto k4 = write_temp("k4v.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(run("verify " + k4.string() + " --matching 0-1").status == 3);
    CHECK(run("verify " + k4.string() + " --matching 0-1,1-2").status == 1);  // overlap
}

TEST_CASE("reduce subcommand") {
    auto p3 = write_temp("p3r.txt", "3 2\n0 1\n1 2\n");
    RunResult red = run("reduce " + p3.string() + " -k 1 --check");
    CHECK(red.status == 0);
    json doc = json::parse(red.out);
    CHECK(doc["result"]["gadget_n"] == 6);
    CHECK(doc["result"]["gadget_m"] == 7);
    CHECK(doc["result"]["equivalence"]["all_agree"] == true);

    auto k3 = write_temp("k3r.txt", "3 3\n0 1\n1 2\n0 2\n");
    CHECK(run("reduce " + k3.string() + " -k 1").status == 1);  // not bipartite
}

TEST_CASE("planar-suite subcommand is deterministic per seed") {
    RunResult a = run("planar-suite --count 3 --n-min 5 --n-max 8 --seed 4");
    RunResult b = run("planar-suite --count 3 --n-min 5 --n-max 8 --seed 4");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc["result"]["passed"] == true);
    CHECK(doc["result"]["violations"].empty());
}

TEST_CASE("gen subcommand round-trips into the other commands") {
    RunResult gen = run("gen --named icosahedron");
    CHECK(gen.status == 0);
    CHECK(gen.out.substr(0, 5) == "12 30");

    auto ico = write_temp("ico.txt", gen.out);
    CHECK(run("exact " + ico.string()).status == 0);

    RunResult r1 = run("gen --random --gen-n 8 -p 0.3 --seed 5");
    RunResult r2 = run("gen --random --gen-n 8 -p 0.3 --seed 5");
    CHECK(r1.out == r2.out);

    RunResult rp = run("gen --random-planar -n 8 --seed 5");
    CHECK(rp.status == 0);
    CHECK(rp.out.substr(0, 4) == "8 18");

    CHECK(run("gen --named nonsense").status == 1);
}
