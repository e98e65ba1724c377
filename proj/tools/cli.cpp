#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "foldchi/dot.hpp"
#include "foldchi/eulercalc.hpp"
#include "foldchi/io.hpp"
#include "foldchi/mfunctions.hpp"
#include "foldchi/plumbing.hpp"
#include "foldchi/roundfold.hpp"

namespace foldchi::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    std::string input = "-";
    std::string vertex;
    std::int64_t chi = 0;
    std::string convention;
    int g = 0, s = 0, b = 1;
    int n = 0, k = 0;
    std::string labels;
    std::string matrix;
    std::string factors = "[]";
    std::string sign_convention = "negate";
    std::string kind = "target";
    bool periodic = false, orientable = false, no_circles = false;
};

// One command's result, printed either as JSON (RunResult) or as text.
struct Outcome {
    int code = exit_ok;
    json outputs = json::object();
    std::string text;
    std::vector<std::string> warnings;
};

class Session {
public:
    Session(const Options& opt, std::istream& in) : opt_(opt), in_(in) {}

    std::string read_input() {
        std::string doc;
        if (opt_.input == "-") {
            doc.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        } else {
            std::ifstream file(opt_.input, std::ios::binary);
            if (!file) throw Error(Errc::invalid_argument, "cannot open '" + opt_.input + "'");
            doc.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        }
        digest_material_ += doc;
        return doc;
    }

    void note(const std::string& material) { digest_material_ += material + '\0'; }

    std::string digest() const {
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        EVP_Digest(digest_material_.data(), digest_material_.size(), md, &len, EVP_sha256(), nullptr);
        std::ostringstream os;
        os << "sha256:";
        for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
        return os.str();
    }

private:
    const Options& opt_;
    std::istream& in_;
    std::string digest_material_;
};

json counts_json(const DepthCounts& d) {
    return {{"min+", d.min_plus}, {"min-", d.min_minus}, {"max+", d.max_plus}, {"max-", d.max_minus}};
}

json report_json(const ValidationReport& r, const std::vector<SchemaIssue>& issues) {
    json out = json::array();
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        json v = {{"kind", to_string(r.violations[i].kind)}, {"detail", r.violations[i].detail}};
        if (i < issues.size()) v["pointer"] = issues[i].pointer;
        out.push_back(v);
    }
    return out;
}

json issues_json(const std::vector<SchemaIssue>& issues) {
    json out = json::array();
    for (const auto& i : issues) out.push_back({{"pointer", i.pointer}, {"message", i.message}});
    return out;
}

TargetGraph load_graph(Session& s) { return parse_target_graph_json(s.read_input()); }

BallCountConvention default_convention(const Options& opt) {
    if (!opt.convention.empty()) return parse_ball_count_convention(opt.convention);
    if (const char* env = std::getenv("FOLDCHI_CONVENTION"); env && *env) return parse_ball_count_convention(env);
    return BallCountConvention::handle_proof;
}

std::vector<FoldLabel> parse_label_list(const std::string& csv) {
    std::vector<FoldLabel> out;
    std::stringstream ss(csv);
    std::string tag;
    while (std::getline(ss, tag, ',')) {
        if (!tag.empty()) out.push_back(parse_label(tag));
    }
    return out;
}

json matrix_json(const Mat2Z& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

json plumbing_json(const PlumbingGraph& p) {
    json chains = json::array();
    for (const auto& c : p.chains) chains.push_back({{"raw", c.raw}, {"weights", c.weights}});
    return {{"central", {{"genus", p.genus}, {"weight", p.central_weight}}},
            {"chains", chains},
            {"boundary_arrows", p.boundary_arrows},
            {"sign_convention", to_string(p.convention)}};
}

void add_graph_warnings(Outcome& o, const TargetGraph& g) {
    for (auto& w : realizability_warnings(g)) o.warnings.push_back(std::move(w));
}

Outcome cmd_validate(Session& s) {
    Outcome o;
    try {
        TargetGraph g = load_graph(s);
        o.outputs = {{"ok", true}, {"violations", json::array()}};
        o.text = "ok";
        add_graph_warnings(o, g);
    } catch (const ParseError& e) {
        if (e.code() != Errc::validation_error) throw;
        o.code = exit_verdict;
        const bool structural = !e.report().ok();
        o.outputs = {{"ok", false},
                     {"violations", structural ? report_json(e.report(), e.issues()) : issues_json(e.issues())}};
        std::ostringstream os;
        for (const auto& i : e.issues()) os << (i.pointer.empty() ? "/" : i.pointer) << ": " << i.message << "\n";
        o.text = os.str();
        if (!o.text.empty()) o.text.pop_back();
    }
    return o;
}

Outcome cmd_euler(Session& s) {
    Outcome o;
    TargetGraph g = load_graph(s);
    const std::int64_t chi = total_euler(g);
    o.outputs = {{"total_euler", chi}};
    o.text = std::to_string(chi);
    add_graph_warnings(o, g);
    return o;
}

Outcome cmd_fiber(Session& s, const Options& opt) {
    Outcome o;
    TargetGraph g = load_graph(s);
    const std::int64_t chi = fiber_euler(g, opt.vertex);
    o.outputs = {{"vertex", opt.vertex},
                 {"fiber_euler", chi},
                 {"depth", depth(g, opt.vertex)},
                 {"label_counts", counts_json(path_label_counts(g, opt.vertex))}};
    o.text = std::to_string(chi);
    add_graph_warnings(o, g);
    return o;
}

Outcome cmd_mod2(Session& s) {
    Outcome o;
    TargetGraph g = load_graph(s);
    const int r = total_euler_mod2(g);
    o.outputs = {{"total_euler_mod2", r}};
    o.text = std::to_string(r);
    return o;
}

Outcome cmd_sc_mod2(Session& s) {
    Outcome o;
    TargetGraph g = load_graph(s);
    const int r = simply_connected_mod2(g);
    o.outputs = {{"simply_connected_mod2", r}};
    o.text = std::to_string(r);
    return o;
}

Outcome cmd_extension(Session& s, const Options& opt) {
    Outcome o;
    TargetGraph g = load_graph(s);
    const ExtensionVerdict v = extension_obstruction(opt.chi, g);
    o.code = v.consistent ? exit_ok : exit_verdict;
    o.outputs = {{"verdict", v.consistent ? "Consistent" : "Obstructed"},
                 {"chi_boundary", v.chi_boundary},
                 {"lhs", v.lhs_text()},
                 {"rhs", v.rhs}};
    o.text = v.describe();
    return o;
}

Outcome cmd_mfunc(Session& s, const Options& opt, const std::string& action) {
    Outcome o;
    const CriticalSequence seq = parse_critical_sequence_json(s.read_input());
    if (action == "validate") {
        const SequenceReport r = validate_sequence(seq);
        json vs = json::array();
        for (std::size_t i = 0; i < r.violations.size(); ++i)
            vs.push_back({{"kind", to_string(r.violations[i])}, {"detail", r.details[i]}});
        o.outputs = {{"ok", r.ok()}, {"violations", vs}};
        o.text = r.summary();
        o.code = r.ok() ? exit_ok : exit_verdict;
    } else if (action == "handles") {
        const HandleList h = handle_decomposition(seq);
        o.outputs = {{"n", h.n}, {"handles", h.handles}, {"euler", euler_from_handles(h)}};
        std::ostringstream os;
        os << "handles:";
        for (int idx : h.handles) os << ' ' << idx;
        os << "\neuler: " << euler_from_handles(h);
        o.text = os.str();
    } else {
        const BallCountConvention c = default_convention(opt);
        const DiffeoType t = diffeotype(seq, c);
        o.outputs = {{"kind", t.kind == DiffeoType::Kind::planar_surface ? "PlanarSurface" : "SphereMinusBalls"},
                     {"n", t.n},
                     {"count", t.count},
                     {"description", t.describe()},
                     {"euler", t.euler()},
                     {"convention", to_string(c)},
                     {"convention_note", t.convention_note}};
        o.text = t.describe();
    }
    return o;
}

Outcome cmd_surface(const Options& opt) {
    Outcome o;
    const BlockDecomposition d = generate_surface_mfunction(opt.g, opt.s, opt.b);
    json blocks = json::array();
    std::ostringstream os;
    for (const Block& b : d.blocks) {
        blocks.push_back({{"kind", to_string(b.kind)}, {"euler", b.euler}});
        os << to_string(b.kind) << ' ' << b.euler << '\n';
    }
    os << "total " << d.total_euler();
    o.outputs = {{"g", d.genus}, {"s", d.cross_caps}, {"b", d.boundary}, {"blocks", blocks}, {"total_euler", d.total_euler()}};
    o.text = os.str();
    return o;
}

Outcome graph_outcome(const TargetGraph& g) {
    Outcome o;
    const std::string doc = serialize_target_graph(g);
    o.outputs = {{"graph", json::parse(doc)}};
    o.text = doc.substr(0, doc.size() - 1);
    return o;
}

Outcome cmd_arrange(Session& s, const Options& opt, const std::string& action) {
    if (action == "round") {
        s.note(opt.labels);
        return graph_outcome(target_graph_from_round({opt.n, opt.k}, parse_label_list(opt.labels)));
    }
    const ForestInput in = parse_forest_json(s.read_input());
    return graph_outcome(target_graph_from_forest(in.codim, in.forest));
}

Outcome cmd_plumb(Session& s, const Options& opt, const std::string& action) {
    Outcome o;
    if (action == "factor") {
        std::string doc;
        if (opt.matrix.empty()) {
            doc = s.read_input();
        } else {
            doc = opt.matrix;
            s.note(doc);
        }
        const Mat2Z m = parse_matrix_json(doc);
        const auto es = factor_attaching(AttachingMatrix(m));
        o.outputs = {{"matrix", matrix_json(m)}, {"factors", es}};
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < es.size(); ++i) os << (i ? ", " : "") << es[i];
        os << ']';
        o.text = os.str();
    } else if (action == "compose") {
        s.note(opt.factors);
        const auto es = parse_factors_json(opt.factors);
        const Mat2Z m = compose_factors(es);
        o.outputs = {{"factors", es}, {"matrix", matrix_json(m)}};
        o.text = m.to_string();
    } else {
        const PlumbingInput in = parse_plumbing_json(s.read_input());
        std::vector<AttachingMatrix> as;
        for (const Mat2Z& m : in.attachings) as.emplace_back(m);
        const PlumbingGraph p =
            build_plumbing_graph(in.genus, in.boundary, as, parse_weight_convention(opt.sign_convention));
        o.outputs = plumbing_json(p);
        std::ostringstream os;
        os << "center [" << p.genus << "] weight " << p.central_weight << '\n';
        for (std::size_t i = 0; i < p.chains.size(); ++i) {
            os << "chain " << i + 1 << ':';
            for (auto w : p.chains[i].weights) os << ' ' << w;
            os << '\n';
        }
        os << "boundary arrows " << p.boundary_arrows;
        o.text = os.str();
    }
    return o;
}

Outcome cmd_export_dot(Session& s, const Options& opt) {
    Outcome o;
    std::string dot;
    if (opt.kind == "plumbing") {
        const PlumbingInput in = parse_plumbing_json(s.read_input());
        std::vector<AttachingMatrix> as;
        for (const Mat2Z& m : in.attachings) as.emplace_back(m);
        dot = emit_dot(build_plumbing_graph(in.genus, in.boundary, as, parse_weight_convention(opt.sign_convention)));
    } else {
        dot = emit_dot(load_graph(s));
    }
    o.outputs = {{"dot", dot}};
    o.text = dot.substr(0, dot.size() - 1);
    return o;
}

Outcome cmd_certify(const Options& opt) {
    Outcome o;
    const Certificate c = certify_graph_manifold(opt.periodic, opt.orientable, opt.no_circles);
    o.code = c.graph_manifold() ? exit_ok : exit_verdict;
    o.outputs = {{"certificate", c.graph_manifold() ? "GraphManifold" : "NotCertified"},
                 {"failed_hypothesis", to_string(c.failure)}};
    o.text = c.describe();
    return o;
}

void add_input(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "Input JSON file, '-' for stdin")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Euler characteristics, handle types and plumbing data for submersions with definite folds",
                 "foldchi"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    add_input(app.add_subcommand("validate", "Check a target graph"), opt);
    add_input(app.add_subcommand("euler", "Euler characteristic of the source manifold"), opt);
    auto* fiber = app.add_subcommand("fiber", "Euler characteristic of the regular fiber over one region");
    fiber->add_option("--vertex", opt.vertex, "Vertex id")->required();
    add_input(fiber, opt);
    add_input(app.add_subcommand("mod2", "Euler characteristic mod 2 via depths"), opt);
    add_input(app.add_subcommand("sc-mod2", "Euler characteristic mod 2, simply connected boundary"), opt);
    auto* ext = app.add_subcommand("extension-check", "Test chi(M)/2 against the target graph");
    ext->add_option("--chi", opt.chi, "Euler characteristic of the closed manifold M")->required();
    add_input(ext, opt);

    auto* mfunc = app.add_subcommand("mfunc", "Critical sequences of functions (k = 1)");
    mfunc->require_subcommand(1);
    for (const char* name : {"validate", "handles", "diffeotype"}) {
        auto* sub = mfunc->add_subcommand(name);
        add_input(sub, opt);
        if (std::string(name) == "diffeotype")
            sub->add_option("--ball-count-convention", opt.convention)
                ->check(CLI::IsMember({"handle_proof", "theorem_text"}));
    }

    auto* surface = app.add_subcommand("surface-gen", "Block decomposition of an m-function on a surface");
    surface->add_option("--g", opt.g, "Genus")->capture_default_str();
    surface->add_option("--s", opt.s, "Number of RP^2 summands")->capture_default_str();
    surface->add_option("--b", opt.b, "Boundary components")->capture_default_str();

    auto* arrange = app.add_subcommand("arrange", "Build target graphs from sphere arrangements");
    arrange->require_subcommand(1);
    auto* round = arrange->add_subcommand("round", "Concentric spheres");
    round->add_option("--n", opt.n)->required();
    round->add_option("--k", opt.k)->required();
    round->add_option("--labels", opt.labels, "Comma-separated labels, outermost first, e.g. min+,max+");
    auto* forest = arrange->add_subcommand("forest", "Nested spheres from a JSON forest");
    add_input(forest, opt);

    auto* plumb = app.add_subcommand("plumb", "Attaching matrices and plumbing graphs");
    plumb->require_subcommand(1);
    auto* factor = plumb->add_subcommand("factor", "Factor a det -1 matrix");
    factor->add_option("--matrix", opt.matrix, "Matrix as JSON [[a,b],[c,d]]");
    add_input(factor, opt);
    plumb->add_subcommand("compose", "Multiply out a factor list")
        ->add_option("--factors", opt.factors, "JSON integer array")
        ->capture_default_str();
    auto* pgraph = plumb->add_subcommand("graph", "Plumbing graph for identity monodromy");
    pgraph->add_option("--sign-convention", opt.sign_convention)
        ->check(CLI::IsMember({"negate", "raw"}))
        ->capture_default_str();
    add_input(pgraph, opt);

    auto* dot = app.add_subcommand("export-dot", "Graphviz output");
    dot->add_option("--kind", opt.kind)->check(CLI::IsMember({"target", "plumbing"}))->capture_default_str();
    dot->add_option("--sign-convention", opt.sign_convention)
        ->check(CLI::IsMember({"negate", "raw"}))
        ->capture_default_str();
    add_input(dot, opt);

    auto* certify = app.add_subcommand("certify", "Check the graph-manifold hypotheses");
    certify->add_flag("--periodic-monodromy", opt.periodic);
    certify->add_flag("--orientable-fiber", opt.orientable);
    certify->add_flag("--no-central-circles", opt.no_circles);

    std::vector<const char*> raw;
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    CLI::App* cmd = app.get_subcommands().front();
    std::string command = cmd->get_name();
    std::string action;
    if (!cmd->get_subcommands().empty()) action = cmd->get_subcommands().front()->get_name();

    Session session(opt, in);
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i] != opt.input) session.note(argv[i]);
    }
    Outcome o;
    try {
        if (command == "validate") o = cmd_validate(session);
        else if (command == "euler") o = cmd_euler(session);
        else if (command == "fiber") o = cmd_fiber(session, opt);
        else if (command == "mod2") o = cmd_mod2(session);
        else if (command == "sc-mod2") o = cmd_sc_mod2(session);
        else if (command == "extension-check") o = cmd_extension(session, opt);
        else if (command == "mfunc") o = cmd_mfunc(session, opt, action);
        else if (command == "surface-gen") o = cmd_surface(opt);
        else if (command == "arrange") o = cmd_arrange(session, opt, action);
        else if (command == "plumb") o = cmd_plumb(session, opt, action);
        else if (command == "export-dot") o = cmd_export_dot(session, opt);
        else if (command == "certify") o = cmd_certify(opt);
    } catch (const ParseError& e) {
        err << "foldchi: " << to_string(e.code()) << '\n';
        for (const auto& i : e.issues()) err << "  " << (i.pointer.empty() ? "/" : i.pointer) << ": " << i.message << '\n';
        return exit_input_error;
    } catch (const Error& e) {
        err << "foldchi: " << e.what() << '\n';
        return exit_input_error;
    }

    if (!action.empty()) command += " " + action;
    if (opt.format == "json") {
        json result = {{"command", command},
                       {"inputs_digest", session.digest()},
                       {"outputs", o.outputs},
                       {"warnings", o.warnings},
                       {"exit_code", o.code}};
        out << result.dump(2) << '\n';
    } else {
        out << o.text << '\n';
        for (const auto& w : o.warnings) err << "warning: " << w << '\n';
    }
    return o.code;
}

}  // namespace foldchi::cli
