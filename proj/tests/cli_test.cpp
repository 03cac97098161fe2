#include "edgestab/cli.hpp"
#include "edgestab/generators.hpp"
#include "edgestab/io.hpp"
#include "edgestab/stability.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace edgestab;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string gen(const std::vector<std::string>& args)
{
    std::vector<std::string> full{"gen"};
    full.insert(full.end(), args.begin(), args.end());
    const auto r = run(full);
    REQUIRE(r.code == 0);
    return r.out;
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

} // namespace

TEST_CASE("gen then es")
{
    const auto p = run({"es", "--exact"}, gen({"petersen"}));
    CHECK(p.code == 0);
    CHECK(contains(p.out, "es: 2 (exact)"));

    const auto k = run({"es", "--exact"}, gen({"complete_minus_matching", "3", "2"}));
    CHECK(k.code == 0);
    CHECK(contains(k.out, "es: 1 (exact)"));

    const auto off = run({"es", "--prune", "off", "--json"}, gen({"petersen"}));
    CHECK(nlohmann::json::parse(off.out)["es"]["value"] == 2);
}

TEST_CASE("chi")
{
    const auto r = run({"chi", "--json"}, gen({"petersen"}));
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["chi"] == 4);
    CHECK(j["class"] == "class2");
    CHECK(j["command"] == "chi");
    CHECK(contains(run({"chi"}, gen({"complete_bipartite", "3", "3"})).out, "chi': 3 (class 1)"));
}

TEST_CASE("mitigate picks the applicable construction")
{
    const auto bip = nlohmann::json::parse(run({"mitigate", "--json"}, gen({"complete_bipartite", "2", "3"})).out);
    CHECK(bip["es"]["method"] == "bipartite_formula");
    CHECK(bip["es"]["value"] == 2);

    const auto c2 = nlohmann::json::parse(run({"mitigate", "--json"}, gen({"petersen"})).out);
    CHECK(c2["es"]["method"] == "class2_bound");
    CHECK(c2["es"]["value"].get<int>() <= 4);

    const auto gen_bound = nlohmann::json::parse(run({"mitigate", "--json"}, gen({"q_chain", "1"})).out);
    CHECK(gen_bound["es"]["method"] == "general_bound");

    // The constructive set is mitigating and within its bound.
    for (const auto& spec : std::vector<std::vector<std::string>>{{"petersen"}, {"q_chain", "2"}, {"remark8_union", "2", "5"},
             {"random", "9", "--seed", "4"}, {"star", "5"}}) {
        const std::string line = gen(spec);
        const Graph g = parse_graph6(line.substr(0, line.size() - 1));
        const auto j = nlohmann::json::parse(run({"mitigate", "--json"}, line).out);
        EdgeSet edges;
        for (const auto& e : j["es"]["witness"])
            edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
        CHECK(is_mitigating(g, edges));
        const std::string method = j["es"]["method"];
        for (const auto& b : j["bounds"])
            if (b["method"] == method)
                CHECK(static_cast<int>(edges.size()) <= b["value"].get<int>());
    }
}

TEST_CASE("es --bound reports the constructive value")
{
    const auto r = run({"es", "--bound"}, gen({"petersen"}));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "es <= "));
    CHECK(run({"es", "--bound", "--exact"}, gen({"petersen"})).code == exit_bad_input);
}

TEST_CASE("normalize")
{
    const auto ok = run({"normalize", "--edges", "0-8,1-2", "--json"}, gen({"prop_counterexample", "2", "0"}));
    REQUIRE(ok.code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["normalized"]["edges"].size() == 2);
    CHECK(j["trace"].size() == 1);

    const auto not_min = run({"normalize", "--edges", "0-1,4-5"}, "6 4\n0 1\n0 2\n0 3\n4 5\n");
    CHECK(not_min.code == exit_bad_input);
    const auto not_min_el = run({"normalize", "--format", "edgelist", "--edges", "0-1,4-5"}, "6 4\n0 1\n0 2\n0 3\n4 5\n");
    CHECK(not_min_el.code == exit_bad_input);
    CHECK(contains(not_min_el.err, "smaller mitigating set: (0,1)"));

    CHECK(run({"normalize", "--edges", "0-1"}, gen({"petersen"})).code == exit_bad_input);
    CHECK(run({"normalize", "--edges", "0+1"}, gen({"petersen"})).code == exit_bad_input);
}

TEST_CASE("gen formats and seeds")
{
    CHECK(gen({"petersen"}) == "IheA@GUAo\n");
    CHECK(gen({"cycle", "3", "--format", "edgelist"}) == "3 3\n0 1\n0 2\n1 2\n");
    CHECK(run({"gen", "random", "8", "--json"}).code == exit_bad_input);
    const auto a = run({"gen", "random", "8", "--seed", "5", "--p", "0.4", "--json"});
    const auto b = run({"gen", "random", "8", "--seed", "5", "--p", "0.4", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["input"]["seed"] == 5);
    CHECK(run({"gen", "nope"}).code == exit_bad_input);
    CHECK(run({"gen", "complete_minus_matching", "2", "2"}).code == exit_bad_input);
}

TEST_CASE("json output is deterministic")
{
    const std::string input = gen({"remark8_union", "2", "4"});
    const auto a = run({"es", "--json"}, input);
    const auto b = run({"es", "--json"}, input);
    CHECK(a.out == b.out);
    CHECK_FALSE(contains(a.out, "timings"));
    CHECK(contains(run({"es", "--json", "--timings"}, input).out, "timings"));
}

TEST_CASE("input handling")
{
    const auto dir = std::filesystem::temp_directory_path() / "edgestab_cli_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "k5.txt";
    std::ofstream(file) << "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    const auto r = run({"es", "--input", file.string(), "--format", "edgelist", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["es"]["value"] == 2);
    CHECK(j["input"]["kind"] == "file");
    CHECK(j["input"]["path"] == file.string());

    CHECK(run({"es", "--input", (dir / "missing").string()}).code == exit_bad_input);
    CHECK(run({"es"}, "not-graph6!").code == exit_bad_input);
    CHECK(run({"es"}, "D??\n").code == exit_bad_input);
    CHECK(run({"es"}, "A_\nA_\n").code == exit_bad_input);
    CHECK(run({"chi", "--format", "edgelist"}, "2 1\n0 0\n").code == exit_bad_input);
    CHECK(run({"frobnicate"}).code == exit_bad_input);
    CHECK(run({}).code == exit_bad_input);
}

TEST_CASE("budget exhaustion has its own exit code")
{
    const auto r = run({"es", "--budget", "10"}, gen({"q_chain", "2"}));
    CHECK(r.code == exit_budget);
    CHECK(contains(r.err, "budget"));
}

TEST_CASE("verify small suites")
{
    const auto r = run({"verify", "petersen"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS  1"));
    const auto c = run({"verify", "thm4", "--json"});
    CHECK(c.code == 0);
    const auto j = nlohmann::json::parse(c.out);
    CHECK(j["passed"] == true);
    CHECK(j["criteria"].size() == 2);
    CHECK(run({"verify", "nonsense"}).code == exit_bad_input);
}

TEST_CASE("help and version")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(contains(run({"--version"}).out, "0."));
}
