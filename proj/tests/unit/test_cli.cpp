#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "foldchi");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = foldchi::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FOLDCHI_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("the three contract commands") {
    const Outcome euler = call({"euler", fixture("d4_projection.json")});
    CHECK(euler.code == 0);
    CHECK(euler.out == "1\n");

    const Outcome ext = call({"extension-check", "--chi", "6", fixture("s4_boundary.json")});
    CHECK(ext.code == 1);
    CHECK(ext.out.find("Obstructed(3, 1)") != std::string::npos);

    const Outcome compose = call({"plumb", "compose", "--factors", "[]"});
    CHECK(compose.code == 0);
    CHECK(compose.out == "[[0, 1], [1, 0]]\n");
}

TEST_CASE("exit codes separate verdicts from input errors") {
    CHECK(call({"extension-check", "--chi", "2", fixture("s4_boundary.json")}).code == 0);
    CHECK(call({"extension-check", "--chi", "3", fixture("s4_boundary.json")}).code == 1);
    CHECK(call({"validate", fixture("d4_projection.json")}).code == 0);

    const Outcome bad = call({"validate", fixture("dangling.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("DanglingEdge") != std::string::npos);

    const Outcome dangling = call({"euler", fixture("dangling.json")});
    CHECK(dangling.code == 2);
    CHECK_FALSE(dangling.err.empty());

    CHECK(call({"euler", fixture("no_such_file.json")}).code == 2);
    CHECK(call({"euler"}, "{not json").code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"fiber", fixture("d4_projection.json")}).code == 2);
    CHECK(call({"fiber", "--vertex", "v7", fixture("d4_projection.json")}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("stdin input and subcommand outputs") {
    const std::string doc = R"({"n":4,"k":2,"root":"v0","vertices":[{"id":"v0","chi":0},{"id":"v1","chi":1}],
        "edges":[{"from":"v0","to":"v1","lambda":"min","sigma":"+","chiS":0}]})";
    CHECK(call({"euler"}, doc).out == "1\n");
    CHECK(call({"euler", "-"}, doc).out == "1\n");
    CHECK(call({"fiber", "--vertex", "v1"}, doc).out == "1\n");
    CHECK(call({"mod2"}, doc).out == "1\n");
    CHECK(call({"euler", fixture("two_level.json")}).out == "2\n");
    CHECK(call({"sc-mod2", fixture("d4_projection.json")}).code == 2);

    CHECK(call({"surface-gen", "--g", "1", "--s", "0", "--b", "2"}).code == 0);
    CHECK(call({"surface-gen", "--g", "0", "--s", "0", "--b", "0"}).code == 2);
    CHECK(call({"arrange", "round", "--n", "5", "--k", "2", "--labels", "min+,max+"}).code == 0);
    CHECK(call({"arrange", "forest", fixture("forest_k2.json")}).code == 0);
    CHECK(call({"plumb", "factor", "--matrix", "[[-1,0],[-1,1]]"}).out == "[1, 1]\n");
    CHECK(call({"plumb", "factor", "--matrix", "[[1,0],[0,1]]"}).code == 2);
    CHECK(call({"plumb", "graph", fixture("plumbing_g1_b2.json")}).code == 0);
    CHECK(call({"export-dot", fixture("d4_projection.json")}).out.rfind("digraph target_graph", 0) == 0);
    CHECK(call({"export-dot", "--kind", "plumbing", fixture("plumbing_g1_b2.json")})
              .out.rfind("digraph plumbing_graph", 0) == 0);
    CHECK(call({"mfunc", "validate", fixture("seq_ladder.json")}).code == 0);
    CHECK(call({"mfunc", "handles", fixture("seq_n5.json")}).code == 0);
    CHECK(call({"certify", "--periodic-monodromy", "--orientable-fiber", "--no-central-circles"}).code == 0);
    CHECK(call({"certify", "--orientable-fiber"}).code == 1);
}

TEST_CASE("json mode envelope is deterministic") {
    const std::vector<std::string> args = {"--format", "json", "euler", fixture("two_level.json")};
    const Outcome a = call(args);
    const Outcome b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("command") == "euler");
    CHECK(j.at("exit_code") == 0);
    CHECK(j.at("inputs_digest").get<std::string>().rfind("sha256:", 0) == 0);
    CHECK(j.at("inputs_digest").get<std::string>().size() == 7 + 64);
    CHECK(j.at("warnings").is_array());

    const Outcome obstructed = call({"--format", "json", "extension-check", "--chi", "6", fixture("s4_boundary.json")});
    CHECK(obstructed.code == 1);
    CHECK(nlohmann::json::parse(obstructed.out).at("exit_code") == 1);
}

TEST_CASE("diffeotype convention flag and environment default") {
    const std::string seq = fixture("seq_n5.json");
    const Outcome proof = call({"--format", "json", "mfunc", "diffeotype", seq});
    const Outcome text = call({"--format", "json", "mfunc", "diffeotype", "--ball-count-convention", "theorem_text", seq});
    REQUIRE(proof.code == 0);
    REQUIRE(text.code == 0);
    CHECK(proof.out != text.out);

    setenv("FOLDCHI_CONVENTION", "theorem_text", 1);
    const Outcome from_env = call({"--format", "json", "mfunc", "diffeotype", seq});
    setenv("FOLDCHI_CONVENTION", "bogus", 1);
    const Outcome bogus = call({"mfunc", "diffeotype", seq});
    unsetenv("FOLDCHI_CONVENTION");
    CHECK(nlohmann::json::parse(from_env.out).at("outputs") == nlohmann::json::parse(text.out).at("outputs"));
    CHECK(bogus.code == 2);
}
