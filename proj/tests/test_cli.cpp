#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "fnm/oracle.hpp"

namespace {

const std::string kCli = FNM_CLI_PATH;

struct Workspace {
    std::string dir;
    Workspace() {
        char tmpl[] = "/tmp/fnm_cli_XXXXXX";
        dir = mkdtemp(tmpl);
        std::ofstream v(dir + "/toy.vlabels.tsv"), e(dir + "/toy.edges.tsv");
        fnm::save_graph(fnm::oracle::toy_db(), v, e);
    }
    std::string path(const std::string& name) const { return dir + "/" + name; }
};

int run(const std::string& args) {
    int rc = std::system(args.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("cli: ratio mining on the toy fixture") {
    Workspace ws;
    std::string cmd = kCli + " --vertex-labels " + ws.path("toy.vlabels.tsv") +
                      " --edges " + ws.path("toy.edges.tsv") +
                      " --min-ratio 0.5 --pivot-label Author --max-size 3" +
                      " --output " + ws.path("out.txt") + " --stats " + ws.path("stats.txt");
    REQUIRE(run(cmd) == 0);
    std::string out = slurp(ws.path("out.txt"));
    CHECK(out.find("# ratio=0.750") != std::string::npos);  // two-paper pattern
    CHECK(out.find("# ratio=0.500") != std::string::npos);  // self-cite pattern
    CHECK(out.find("E 0 1 writes") != std::string::npos);
    std::string stats = slurp(ws.path("stats.txt"));
    CHECK(stats.find("universe=4 tau=2") != std::string::npos);
    CHECK(stats.find("level=2") != std::string::npos);
    CHECK(stats.find("types path=") != std::string::npos);

    // Determinism: a second run produces byte-identical output.
    std::string cmd2 = kCli + " --vertex-labels " + ws.path("toy.vlabels.tsv") +
                       " --edges " + ws.path("toy.edges.tsv") +
                       " --min-ratio 0.5 --pivot-label Author --max-size 3" +
                       " --output " + ws.path("out2.txt") + " --stats /dev/null";
    REQUIRE(run(cmd2) == 0);
    CHECK(out == slurp(ws.path("out2.txt")));
}

TEST_CASE("cli: threshold flags are exclusive") {
    Workspace ws;
    std::string cmd = kCli + " --vertex-labels " + ws.path("toy.vlabels.tsv") +
                      " --edges " + ws.path("toy.edges.tsv") +
                      " --min-support 2 --min-ratio 0.5 >/dev/null 2>&1";
    CHECK(run(cmd) == 2);
    std::string none = kCli + " --vertex-labels " + ws.path("toy.vlabels.tsv") +
                       " --edges " + ws.path("toy.edges.tsv") + " >/dev/null 2>&1";
    CHECK(run(none) == 2);
}

TEST_CASE("cli: paths mode emits only path patterns") {
    Workspace ws;
    std::string cmd = kCli + " --vertex-labels " + ws.path("toy.vlabels.tsv") +
                      " --edges " + ws.path("toy.edges.tsv") +
                      " --min-support 2 --mode paths --max-size 3" +
                      " --output " + ws.path("paths.txt") + " --stats " +
                      ws.path("pstats.txt");
    REQUIRE(run(cmd) == 0);
    std::string stats = slurp(ws.path("pstats.txt"));
    CHECK(stats.find("paths=") != std::string::npos);
    CHECK(stats.find(" tree=0 cyclic=0") != std::string::npos);
}

TEST_CASE("cli: parse and validation failures exit 1") {
    Workspace ws;
    {
        std::ofstream bad(ws.path("bad.edges.tsv"));
        bad << "p1\tp1\tcites\n";
    }
    std::string cmd = kCli + " --vertex-labels " + ws.path("toy.vlabels.tsv") +
                      " --edges " + ws.path("bad.edges.tsv") +
                      " --min-support 2 >/dev/null 2>&1";
    CHECK(run(cmd) == 1);
    std::string missing = kCli + " --vertex-labels /nonexistent --edges " +
                          ws.path("toy.edges.tsv") + " --min-support 2 >/dev/null 2>&1";
    CHECK(run(missing) == 1);
}
