#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "foldchi/io.hpp"
#include "foldchi/roundfold.hpp"

using namespace foldchi;

namespace {

const char* minimal = R"({"n":4,"k":2,"vertices":[{"id":"v0","chi":0},{"id":"v1","chi":1}],"root":"v0",
  "edges":[{"from":"v0","to":"v1","lambda":"min","sigma":"+","chiS":0}]})";

ParseError parse_failure(const std::string& doc) {
    try {
        parse_target_graph_json(doc);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("document parsed");
    return ParseError(Errc::schema_error, {});
}

bool has_pointer(const ParseError& e, const std::string& ptr) {
    for (const auto& i : e.issues())
        if (i.pointer == ptr) return true;
    return false;
}

}  // namespace

TEST_CASE("minimal document parses") {
    const TargetGraph g = parse_target_graph_json(minimal);
    CHECK(g.codim == Codim{4, 2});
    CHECK(g.root == "v0");
    CHECK(g.chi_region.at("v1") == 1);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].label == min_plus);
}

TEST_CASE("schema errors carry JSON pointers") {
    const ParseError no_root = parse_failure(
        R"({"n":4,"k":2,"vertices":[{"id":"v0","chi":0}],"edges":[]})");
    CHECK(no_root.code() == Errc::schema_error);
    CHECK(has_pointer(no_root, "/root"));

    const ParseError typo = parse_failure(
        R"({"n":4,"k":2,"root":"v0","vertices":[{"id":"v0","chi":0,"chl":1}],"edges":[]})");
    CHECK(has_pointer(typo, "/vertices/0/chl"));

    const ParseError label = parse_failure(
        R"({"n":4,"k":2,"root":"v0","vertices":[{"id":"v0","chi":0},{"id":"v1","chi":0}],
            "edges":[{"from":"v0","to":"v1","lambda":"mid","sigma":"*","chiS":"0"}]})");
    CHECK(has_pointer(label, "/edges/0/lambda"));
    CHECK(has_pointer(label, "/edges/0/sigma"));
    CHECK(has_pointer(label, "/edges/0/chiS"));

    const ParseError dup = parse_failure(
        R"({"n":4,"k":2,"root":"v0","vertices":[{"id":"v0","chi":0},{"id":"v0","chi":1}],"edges":[]})");
    CHECK(has_pointer(dup, "/vertices/1/id"));

    const ParseError escaped = parse_failure(R"({"n":4,"k":2,"root":"v0","vertices":[],"edges":[],"a/b~":1})");
    CHECK(has_pointer(escaped, "/a~1b~0"));

    const ParseError big = parse_failure(
        R"({"n":4,"k":2,"root":"v0","vertices":[{"id":"v0","chi":18446744073709551615}],"edges":[]})");
    CHECK(has_pointer(big, "/vertices/0/chi"));

    CHECK(parse_failure("[1, 2]").code() == Errc::schema_error);
}

TEST_CASE("syntax and validation errors") {
    CHECK(parse_failure("{\"n\": 4,").code() == Errc::syntax_error);

    const ParseError dangling = parse_failure(
        R"({"n":4,"k":2,"root":"v0","vertices":[{"id":"v0","chi":0},{"id":"v1","chi":1}],
            "edges":[{"from":"v0","to":"v9","lambda":"min","sigma":"+","chiS":0}]})");
    CHECK(dangling.code() == Errc::validation_error);
    CHECK(dangling.report().has(ViolationKind::dangling_edge));
    CHECK(has_pointer(dangling, "/edges/0"));

    const ParseError low = parse_failure(
        R"({"n":3,"k":2,"root":"v0","vertices":[{"id":"v0","chi":0}],"edges":[]})");
    CHECK(low.report().has(ViolationKind::codim_too_small));
}

TEST_CASE("supplied depths are checked, not trusted") {
    const std::string good =
        R"({"n":4,"k":2,"root":"v0","vertices":[{"id":"v0","chi":0,"depth":0},{"id":"v1","chi":1,"depth":1}],
            "edges":[{"from":"v0","to":"v1","lambda":"min","sigma":"+","chiS":0}]})";
    CHECK_NOTHROW(parse_target_graph_json(good));
    std::string bad = good;
    bad.replace(bad.find("\"depth\":1"), 9, "\"depth\":4");
    const ParseError e = parse_failure(bad);
    CHECK(e.code() == Errc::validation_error);
    CHECK(has_pointer(e, "/vertices/1/depth"));
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        foldchi::testing::RandomGraphSpec spec;
        spec.codim = {3 + trial % 6 + 2, 1 + trial % 2};
        spec.max_edges = 20;
        spec.chi_lo = -1000;
        spec.chi_hi = 1000;
        const TargetGraph g = foldchi::testing::random_graph(rng, spec);
        const std::string doc = serialize_target_graph(g);
        CHECK(parse_target_graph_json(doc) == g);
        CHECK(serialize_target_graph(parse_target_graph_json(doc)) == doc);
    }
    const FoldLabel labels[] = {min_plus, max_plus, min_minus};
    const TargetGraph round = target_graph_from_round({6, 3}, labels);
    CHECK(parse_target_graph_json(serialize_target_graph(round)) == round);
}

TEST_CASE("serialized form is canonical") {
    const TargetGraph g = parse_target_graph_json(minimal);
    const std::string doc = serialize_target_graph(g);
    CHECK(doc.find("depth") == std::string::npos);
    CHECK(doc.find("\"edges\"") < doc.find("\"k\""));
    TargetGraph shuffled = g;
    shuffled.edges.insert(shuffled.edges.begin(), {"v0", "v1", max_plus, 0});
    TargetGraph other = g;
    other.edges.push_back({"v0", "v1", max_plus, 0});
    CHECK(serialize_target_graph(shuffled) == serialize_target_graph(other));
}

TEST_CASE("auxiliary documents") {
    const CriticalSequence s =
        parse_critical_sequence_json(R"({"n":3,"events":[{"lambda":"min","sigma":"+"},{"lambda":"max","sigma":"-"}]})");
    CHECK(s == CriticalSequence{3, {min_plus, max_minus}});
    CHECK_THROWS_AS(parse_critical_sequence_json(R"({"n":3,"events":[{"lambda":"min"}]})"), ParseError);

    const ForestInput f = parse_forest_json(
        R"({"n":4,"k":2,"nodes":[{"id":"a","parent":null,"lambda":"min","sigma":"+"},
                                 {"id":"b","parent":"a","lambda":"max","sigma":"-"}]})");
    REQUIRE(f.forest.nodes.size() == 2);
    CHECK_FALSE(f.forest.nodes[0].parent.has_value());
    CHECK(f.forest.nodes[1].parent.value() == "a");

    CHECK(parse_matrix_json("[[1,-2],[0,-1]]") == Mat2Z{1, -2, 0, -1});
    CHECK_THROWS_AS(parse_matrix_json("[[1,2,3],[0,-1]]"), ParseError);
    CHECK(parse_factors_json("[]").empty());
    CHECK(parse_factors_json("[2, -3]") == std::vector<std::int64_t>{2, -3});

    const PlumbingInput p = parse_plumbing_json(R"({"g":1,"b":2,"attachings":[[[0,1],[1,0]]]})");
    CHECK(p.genus == 1);
    CHECK(p.boundary == 2);
    CHECK(p.attachings.at(0) == Mat2Z::swap());
    CHECK_THROWS_AS(parse_plumbing_json(R"({"g":1,"b":2})"), ParseError);
}
