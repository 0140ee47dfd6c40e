#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "dpcover/counterexample.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/instances.hpp"
#include "dpcover/json_io.hpp"

using namespace dpcover;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DPCOVER_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "dpcover_cli_test";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("graph JSON round trip is byte stable") {
    Rng rng(97);
    for (const Graph& g : {build_g0().graph, build_cycle(5), random_connected_graph(rng, 7, 4)}) {
        std::string s = graph_to_json(g);
        Graph back = graph_from_json(s);
        CHECK(back == g);
        CHECK(graph_to_json(back) == s);
    }
}

TEST_CASE("cover JSON round trip, 1-based labels and partial entries") {
    Cover tw = build_g0_twisted_cover();
    std::string s = cover_to_json(tw);
    Cover back = cover_from_json(s);
    CHECK(back == tw);
    CHECK(cover_to_json(back) == s);
    // labels in the file are 1-based
    CHECK(s.find("\"m\": 4") != std::string::npos);

    // a partial matching round-trips through nulls
    Cover partial(build_cycle(3), 3);
    Matching m = Matching::empty(3);
    m.set(0, 2);
    partial.set_matching(0, 1, m);
    Cover back2 = cover_from_json(cover_to_json(partial));
    CHECK(back2 == partial);
}

TEST_CASE("cover JSON validation failures") {
    std::string bad = R"({"m": 2, "graph": {"vertices": ["a","b"], "edges": [["a","b"]]},
                          "matchings": [{"edge": ["a","b"], "map": [1, 1]}]})";
    CHECK_THROWS_WITH_AS(cover_from_json(bad), doctest::Contains("axiom (4)"), std::invalid_argument);
    std::string nonedge = R"({"m": 2, "graph": {"vertices": ["a","b","c"], "edges": [["a","b"]]},
                             "matchings": [{"edge": ["a","c"], "map": [1, 2]}]})";
    CHECK_THROWS_WITH_AS(cover_from_json(nonedge), doctest::Contains("axiom (3)"), std::invalid_argument);
}

TEST_CASE("perm table and gluing spec JSON") {
    PermTable f{{Perm(std::vector<std::int8_t>{1, 2, 0})}};
    std::string s = perm_table_to_json(f);
    PermTable back = perm_table_from_json(s, 3);
    REQUIRE(back.fs.size() == 1);
    CHECK(back.fs[0] == f.fs[0]);

    fs::path dir = temp_dir();
    save_graph(build_cycle(3), (dir / "c3.json").string());
    std::string spec = R"({"p": 2, "parts": [
        {"graph": "c3.json", "clique": ["v1","v2"]},
        {"graph": "c3.json", "clique": ["v2","v3"]}]})";
    GluingSpec gs = gluing_spec_from_json(spec, dir.string());
    CHECK(gs.glue.glued.n() == 4);
    CHECK(gs.glue.glued.edge_count() == 5);
}

TEST_CASE("count report JSON uses decimal strings") {
    CountReport r = count_report(build_g0_twisted_cover(), {});
    std::string s = count_report_to_json(r);
    CHECK(s.find("\"count\": \"104\"") != std::string::npos);
    CHECK(s.find("nodes_expanded") != std::string::npos);
}

TEST_CASE("cli: chromatic, count, dpmin") {
    fs::path dir = temp_dir();
    save_graph(build_g0().graph, (dir / "g0.json").string());
    save_graph(build_cycle(4), (dir / "c4.json").string());
    save_cover(build_g0_twisted_cover(), (dir / "tw.json").string());

    RunResult chrom = run_cli("chromatic " + (dir / "g0.json").string() + " --m 4");
    CHECK(chrom.exit_code == 0);
    CHECK(chrom.out.find("120") != std::string::npos);

    RunResult cnt = run_cli("count " + (dir / "g0.json").string() + " " + (dir / "tw.json").string());
    CHECK(cnt.exit_code == 0);
    CHECK(cnt.out == "104\n");

    RunResult pres = run_cli("count " + (dir / "g0.json").string() + " " + (dir / "tw.json").string() +
                             " --prescribe w:1");
    CHECK(pres.exit_code == 0);
    CHECK(pres.out == "26\n");

    RunResult dp = run_cli("dpmin " + (dir / "c4.json").string() + " --m 3");
    CHECK(dp.exit_code == 0);
    CHECK(dp.out == "15\n");

    // budget exhaustion is distinguished by exit code 3
    RunResult bound = run_cli("dpmin " + (dir / "g0.json").string() + " --m 4 --budget 100000");
    CHECK(bound.exit_code == 3);
    CHECK(bound.out.find("upper bound only") != std::string::npos);

    // the written argmin cover round-trips
    RunResult out = run_cli("dpmin " + (dir / "c4.json").string() + " --m 3 --out " +
                            (dir / "argmin.json").string());
    CHECK(out.exit_code == 0);
    Cover argmin = load_cover((dir / "argmin.json").string());
    CHECK(count_colorings(argmin) == CheckedInt(15));
}

TEST_CASE("cli: errors and verify suites") {
    fs::path dir = temp_dir();
    CHECK(run_cli("chromatic " + (dir / "missing.json").string() + " --m 3").exit_code == 2);
    CHECK(run_cli("verify nosuchsuite").exit_code == 2);

    // graph/cover mismatch
    save_graph(build_cycle(4), (dir / "c4b.json").string());
    save_cover(build_g0_twisted_cover(), (dir / "twb.json").string());
    CHECK(run_cli("count " + (dir / "c4b.json").string() + " " + (dir / "twb.json").string()).exit_code == 2);

    RunResult prop = run_cli("verify prop28");
    CHECK(prop.exit_code == 0);
    CHECK(prop.out.find("all checks passed") != std::string::npos);

    RunResult l31 = run_cli("verify lemma31 --format json");
    CHECK(l31.exit_code == 0);
    CHECK(l31.out.find("\"pass\": true") != std::string::npos);

    // json output is byte-identical across runs
    RunResult again = run_cli("verify lemma31 --format json");
    CHECK(again.out == l31.out);
}
