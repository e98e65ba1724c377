#include "foldchi/dot.hpp"

#include <sstream>

namespace foldchi {

namespace {

std::string escaped(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + escaped(s) + "\""; }

}  // namespace

std::string emit_dot(const TargetGraph& g) {
    const RootedTree tree(g);
    const int top = g.codim.fiber_dim() - 1;
    std::ostringstream os;
    os << "digraph target_graph {\n";
    os << "  // n=" << g.codim.n << " k=" << g.codim.k << " root=" << quoted(g.root) << "\n";
    os << "  node [shape=ellipse];\n";
    for (const auto& [id, chi] : g.chi_region) {
        os << "  " << quoted(id) << " [label=\"" << escaped(id) << "\\ndepth=" << tree.depth(id)
           << " chiR=" << chi << '"';
        if (id == g.root) os << ", peripheries=2";
        os << "];\n";
    }
    for (const Edge& e : g.sorted_edges()) {
        os << "  " << quoted(e.tail) << " -> " << quoted(e.head)
           << " [label=" << quoted(display_label(e.label, top) + " chiS=" + std::to_string(e.chi_sing)) << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_dot(const PlumbingGraph& p) {
    std::ostringstream os;
    os << "digraph plumbing_graph {\n";
    os << "  // weights: " << to_string(p.convention) << "; central weight " << p.central_weight << "\n";
    os << "  node [shape=point];\n";
    os << "  center [shape=circle, label=\"[" << p.genus << "]\"];\n";
    for (std::size_t i = 0; i < p.chains.size(); ++i) {
        std::string prev = "center";
        const auto& weights = p.chains[i].weights;
        for (std::size_t j = 0; j < weights.size(); ++j) {
            const std::string name = "t" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            os << "  " << name << " [shape=circle, label=\"" << weights[j] << "\"];\n";
            os << "  " << prev << " -> " << name << " [dir=none];\n";
            prev = name;
        }
    }
    for (std::int64_t i = 0; i < p.boundary_arrows; ++i) {
        const std::string name = "boundary" + std::to_string(i + 1);
        os << "  " << name << " [style=invis];\n";
        os << "  center -> " << name << " [arrowhead=normal];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace foldchi
