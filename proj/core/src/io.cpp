#include "foldchi/io.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

namespace foldchi {

using nlohmann::json;

ParseError::ParseError(Errc code, std::vector<SchemaIssue> issues, ValidationReport report)
    : Error(code,
            [&] {
                std::string msg;
                for (const auto& i : issues) msg += (msg.empty() ? "" : "; ") + i.pointer + ": " + i.message;
                if (msg.empty() && !report.ok()) msg += (msg.empty() ? "" : "; ") + report.summary();
                return msg;
            }()),
      issues_(std::move(issues)),
      report_(std::move(report)) {}

namespace {

std::string escape_token(const std::string& key) {
    std::string out;
    for (char ch : key) {
        if (ch == '~') out += "~0";
        else if (ch == '/') out += "~1";
        else out += ch;
    }
    return out;
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + escape_token(key); }
std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

json parse_syntax(std::string_view doc) {
    try {
        return json::parse(doc.begin(), doc.end());
    } catch (const json::parse_error& e) {
        throw ParseError(Errc::syntax_error, {{"", e.what()}});
    }
}

// Collects schema problems instead of stopping at the first one.
class Checker {
public:
    std::vector<SchemaIssue> issues;

    void fail(std::string ptr, std::string msg) { issues.push_back({std::move(ptr), std::move(msg)}); }

    std::optional<std::int64_t> integer(const json& v, const std::string& ptr) {
        if (v.is_number_integer()) {
            if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
                fail(ptr, "integer out of range");
                return std::nullopt;
            }
            return v.get<std::int64_t>();
        }
        fail(ptr, "expected an integer");
        return std::nullopt;
    }

    std::optional<int> small_int(const json& v, const std::string& ptr) {
        auto x = integer(v, ptr);
        if (!x) return std::nullopt;
        if (*x < std::numeric_limits<int>::min() || *x > std::numeric_limits<int>::max()) {
            fail(ptr, "integer out of range");
            return std::nullopt;
        }
        return static_cast<int>(*x);
    }

    std::optional<std::string> string(const json& v, const std::string& ptr) {
        if (v.is_string()) return v.get<std::string>();
        fail(ptr, "expected a string");
        return std::nullopt;
    }

    bool array(const json& v, const std::string& ptr) {
        if (v.is_array()) return true;
        fail(ptr, "expected an array");
        return false;
    }

    // Checks that `v` is an object with exactly the required keys plus any of
    // the optional ones. Returns false if `v` is not an object at all.
    bool object(const json& v, const std::string& ptr, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
        if (!v.is_object()) {
            fail(ptr, "expected an object");
            return false;
        }
        for (const char* key : required) {
            if (!v.contains(key)) fail(child(ptr, key), "missing required key");
        }
        auto listed = [](std::initializer_list<const char*> keys, const std::string& key) {
            return std::any_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; });
        };
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!listed(required, it.key()) && !listed(optional, it.key())) fail(child(ptr, it.key()), "unknown key");
        }
        return true;
    }

    std::optional<FoldLabel> label(const json& obj, const std::string& ptr) {
        std::optional<std::string> lam, sig;
        if (obj.contains("lambda")) lam = string(obj["lambda"], child(ptr, "lambda"));
        if (obj.contains("sigma")) sig = string(obj["sigma"], child(ptr, "sigma"));
        bool good = true;
        if (lam && *lam != "min" && *lam != "max") {
            fail(child(ptr, "lambda"), "expected \"min\" or \"max\"");
            good = false;
        }
        if (sig && *sig != "+" && *sig != "-") {
            fail(child(ptr, "sigma"), "expected \"+\" or \"-\"");
            good = false;
        }
        if (!lam || !sig || !good) return std::nullopt;
        return FoldLabel{*lam == "min" ? Lambda::min : Lambda::max, *sig == "+" ? Sigma::plus : Sigma::minus};
    }

    void throw_if_any() {
        if (!issues.empty()) throw ParseError(Errc::schema_error, std::move(issues));
    }
};

json label_json(FoldLabel l, json obj) {
    obj["lambda"] = l.lambda == Lambda::min ? "min" : "max";
    obj["sigma"] = l.sigma == Sigma::plus ? "+" : "-";
    return obj;
}

std::optional<Mat2Z> read_matrix(Checker& c, const json& v, const std::string& ptr) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_array() || !v[1].is_array() || v[0].size() != 2 ||
        v[1].size() != 2) {
        c.fail(ptr, "expected a 2x2 array [[a, b], [c, d]]");
        return std::nullopt;
    }
    auto a = c.integer(v[0][0], ptr + "/0/0");
    auto b = c.integer(v[0][1], ptr + "/0/1");
    auto cc = c.integer(v[1][0], ptr + "/1/0");
    auto d = c.integer(v[1][1], ptr + "/1/1");
    if (!a || !b || !cc || !d) return std::nullopt;
    return Mat2Z{*a, *b, *cc, *d};
}

std::string violation_pointer(const Violation& v) {
    if (v.edge_index) return child("/edges", *v.edge_index);
    switch (v.kind) {
        case ViolationKind::unknown_root: return "/root";
        case ViolationKind::bad_dims:
        case ViolationKind::codim_too_small: return "/n";
        default: return "/edges";
    }
}

}  // namespace

TargetGraph parse_target_graph_json(std::string_view doc) {
    const json j = parse_syntax(doc);
    Checker c;
    TargetGraph g;
    std::map<VertexId, std::pair<std::int64_t, std::string>> claimed_depths;

    if (!c.object(j, "", {"n", "k", "vertices", "root", "edges"})) c.throw_if_any();

    if (j.contains("n")) g.codim.n = c.small_int(j["n"], "/n").value_or(0);
    if (j.contains("k")) g.codim.k = c.small_int(j["k"], "/k").value_or(0);
    if (j.contains("root")) g.root = c.string(j["root"], "/root").value_or("");

    if (j.contains("vertices") && c.array(j["vertices"], "/vertices")) {
        const json& vs = j["vertices"];
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const std::string ptr = child("/vertices", i);
            if (!c.object(vs[i], ptr, {"id", "chi"}, {"depth"})) continue;
            std::optional<std::string> id;
            std::optional<std::int64_t> chi;
            if (vs[i].contains("id")) id = c.string(vs[i]["id"], ptr + "/id");
            if (vs[i].contains("chi")) chi = c.integer(vs[i]["chi"], ptr + "/chi");
            if (vs[i].contains("depth")) {
                auto d = c.integer(vs[i]["depth"], ptr + "/depth");
                if (d && *d < 0) c.fail(ptr + "/depth", "depth must be non-negative");
                if (d && id) claimed_depths[*id] = {*d, ptr + "/depth"};
            }
            if (id && chi && !g.chi_region.emplace(*id, *chi).second)
                c.fail(ptr + "/id", "duplicate vertex id '" + *id + "'");
        }
    }

    if (j.contains("edges") && c.array(j["edges"], "/edges")) {
        const json& es = j["edges"];
        for (std::size_t i = 0; i < es.size(); ++i) {
            const std::string ptr = child("/edges", i);
            if (!c.object(es[i], ptr, {"from", "to", "lambda", "sigma", "chiS"})) continue;
            std::optional<std::string> from, to;
            std::optional<std::int64_t> chi_s;
            if (es[i].contains("from")) from = c.string(es[i]["from"], ptr + "/from");
            if (es[i].contains("to")) to = c.string(es[i]["to"], ptr + "/to");
            if (es[i].contains("chiS")) chi_s = c.integer(es[i]["chiS"], ptr + "/chiS");
            auto label = c.label(es[i], ptr);
            if (from && to && chi_s && label) g.edges.push_back({*from, *to, *label, *chi_s});
        }
    }
    c.throw_if_any();

    ValidationReport report = validate_target_graph(g);
    if (!report.ok()) {
        std::vector<SchemaIssue> issues;
        for (const Violation& v : report.violations) issues.push_back({violation_pointer(v), std::string(to_string(v.kind)) + ": " + v.detail});
        throw ParseError(Errc::validation_error, std::move(issues), std::move(report));
    }

    if (!claimed_depths.empty()) {
        const RootedTree tree(g);
        std::vector<SchemaIssue> issues;
        for (const auto& [id, claim] : claimed_depths) {
            const int actual = tree.depth(id);
            if (claim.first != actual)
                issues.push_back({claim.second, "depth " + std::to_string(claim.first) + " disagrees with computed depth " +
                                                    std::to_string(actual)});
        }
        if (!issues.empty()) throw ParseError(Errc::validation_error, std::move(issues));
    }
    return g;
}

std::string serialize_target_graph(const TargetGraph& g) {
    json vertices = json::array();
    for (const auto& [id, chi] : g.chi_region) vertices.push_back({{"id", id}, {"chi", chi}});
    json edges = json::array();
    for (const Edge& e : g.sorted_edges())
        edges.push_back(label_json(e.label, {{"from", e.tail}, {"to", e.head}, {"chiS", e.chi_sing}}));
    json j = {{"n", g.codim.n}, {"k", g.codim.k}, {"root", g.root}, {"vertices", vertices}, {"edges", edges}};
    return j.dump(2) + "\n";
}

CriticalSequence parse_critical_sequence_json(std::string_view doc) {
    const json j = parse_syntax(doc);
    Checker c;
    CriticalSequence seq;
    if (!c.object(j, "", {"n", "events"})) c.throw_if_any();
    if (j.contains("n")) seq.n = c.small_int(j["n"], "/n").value_or(0);
    if (j.contains("events") && c.array(j["events"], "/events")) {
        const json& ev = j["events"];
        for (std::size_t i = 0; i < ev.size(); ++i) {
            const std::string ptr = child("/events", i);
            if (!c.object(ev[i], ptr, {"lambda", "sigma"})) continue;
            if (auto l = c.label(ev[i], ptr)) seq.events.push_back(*l);
        }
    }
    c.throw_if_any();
    return seq;
}

ForestInput parse_forest_json(std::string_view doc) {
    const json j = parse_syntax(doc);
    Checker c;
    ForestInput in;
    if (!c.object(j, "", {"n", "k", "nodes"})) c.throw_if_any();
    if (j.contains("n")) in.codim.n = c.small_int(j["n"], "/n").value_or(0);
    if (j.contains("k")) in.codim.k = c.small_int(j["k"], "/k").value_or(0);
    if (j.contains("nodes") && c.array(j["nodes"], "/nodes")) {
        const json& ns = j["nodes"];
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const std::string ptr = child("/nodes", i);
            if (!c.object(ns[i], ptr, {"id", "lambda", "sigma"}, {"parent"})) continue;
            NestingNode node;
            std::optional<std::string> id;
            if (ns[i].contains("id")) id = c.string(ns[i]["id"], ptr + "/id");
            bool parent_ok = true;
            if (ns[i].contains("parent") && !ns[i]["parent"].is_null()) {
                auto p = c.string(ns[i]["parent"], ptr + "/parent");
                parent_ok = p.has_value();
                node.parent = p;
            }
            auto label = c.label(ns[i], ptr);
            if (id && label && parent_ok) {
                node.id = *id;
                node.label = *label;
                in.forest.nodes.push_back(std::move(node));
            }
        }
    }
    c.throw_if_any();
    return in;
}

Mat2Z parse_matrix_json(std::string_view doc) {
    const json j = parse_syntax(doc);
    Checker c;
    auto m = read_matrix(c, j, "");
    c.throw_if_any();
    return *m;
}

std::vector<std::int64_t> parse_factors_json(std::string_view doc) {
    const json j = parse_syntax(doc);
    Checker c;
    std::vector<std::int64_t> es;
    if (c.array(j, "")) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (auto e = c.integer(j[i], child("", i))) es.push_back(*e);
        }
    }
    c.throw_if_any();
    return es;
}

PlumbingInput parse_plumbing_json(std::string_view doc) {
    const json j = parse_syntax(doc);
    Checker c;
    PlumbingInput in;
    if (!c.object(j, "", {"g", "b", "attachings"})) c.throw_if_any();
    if (j.contains("g")) in.genus = c.integer(j["g"], "/g").value_or(0);
    if (j.contains("b")) in.boundary = c.integer(j["b"], "/b").value_or(0);
    if (j.contains("attachings") && c.array(j["attachings"], "/attachings")) {
        const json& as = j["attachings"];
        for (std::size_t i = 0; i < as.size(); ++i) {
            if (auto m = read_matrix(c, as[i], child("/attachings", i))) in.attachings.push_back(*m);
        }
    }
    c.throw_if_any();
    return in;
}

}  // namespace foldchi
