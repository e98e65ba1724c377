#include <doctest.h>

#include <fstream>
#include <sstream>

#include "foldchi/dot.hpp"
#include "foldchi/io.hpp"

using namespace foldchi;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("single vertex graph") {
    TargetGraph g{{5, 2}, {{"v0", 2}}, "v0", {}};
    const std::string dot = emit_dot(g);
    CHECK(dot.rfind("digraph target_graph {", 0) == 0);
    CHECK(count(dot, "[label=") == 1);
    CHECK(count(dot, "->") == 0);
    CHECK(dot.find("depth=0 chiR=2") != std::string::npos);
}

TEST_CASE("golden target graphs") {
    for (const char* name : {"d4_projection", "two_level"}) {
        CAPTURE(name);
        const std::string dir = FOLDCHI_FIXTURE_DIR;
        const TargetGraph g = parse_target_graph_json(slurp(dir + "/" + name + ".json"));
        const std::string first = emit_dot(g);
        CHECK(first == emit_dot(parse_target_graph_json(slurp(dir + "/" + name + ".json"))));
        CHECK(first == slurp(dir + "/golden/" + name + ".dot"));
    }
}

TEST_CASE("edge order does not leak into the output") {
    TargetGraph a{{4, 2}, {{"a", 0}, {"b", 1}, {"c", 2}}, "a",
                  {{"a", "b", min_plus, 0}, {"a", "c", max_minus, 0}}};
    TargetGraph b = a;
    std::swap(b.edges[0], b.edges[1]);
    CHECK(emit_dot(a) == emit_dot(b));
    CHECK(emit_dot(a).find("\"(0,+) chiS=0\"") != std::string::npos);
    CHECK(emit_dot(a).find("\"(1,-) chiS=0\"") != std::string::npos);
}

TEST_CASE("plumbing graphs") {
    const PlumbingGraph bare = build_plumbing_graph(2, 3, {});
    const std::string dot = emit_dot(bare);
    CHECK(dot.find("label=\"[2]\"") != std::string::npos);
    CHECK(count(dot, "shape=circle") == 1);
    CHECK(count(dot, "arrowhead=normal") == 3);
    CHECK(dot == slurp(std::string(FOLDCHI_FIXTURE_DIR) + "/golden/plumbing_g2_b3.dot"));

    const AttachingMatrix a(Mat2Z{1, -2, 0, -1});
    const PlumbingGraph chained = build_plumbing_graph(1, 2, std::span(&a, 1));
    const std::string cdot = emit_dot(chained);
    CHECK(count(cdot, "arrowhead=normal") == 1);
    CHECK(count(cdot, "shape=circle") == 1 + chained.chains.at(0).weights.size());
    CHECK(cdot == emit_dot(build_plumbing_graph(1, 2, std::span(&a, 1))));
}
