#include "foldchi/foldcore.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "foldchi/error.hpp"

namespace foldchi {

std::string to_string(FoldLabel label) {
    std::string s = label.lambda == Lambda::min ? "min" : "max";
    s += label.sigma == Sigma::plus ? '+' : '-';
    return s;
}

FoldLabel parse_label(std::string_view tag) {
    for (FoldLabel l : all_labels)
        if (to_string(l) == tag) return l;
    throw Error(Errc::invalid_argument, "unknown fold label '" + std::string(tag) + "'");
}

std::string display_label(FoldLabel label, int top_index) {
    std::ostringstream os;
    os << '(' << (label.lambda == Lambda::min ? 0 : top_index) << ','
       << (label.sigma == Sigma::plus ? '+' : '-') << ')';
    return os.str();
}

std::vector<Edge> TargetGraph::sorted_edges() const {
    std::vector<Edge> out = edges;
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const TargetGraph& a, const TargetGraph& b) {
    return a.codim == b.codim && a.root == b.root && a.chi_region == b.chi_region &&
           a.sorted_edges() == b.sorted_edges();
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::not_a_tree: return "NotATree";
        case ViolationKind::bad_orientation: return "BadOrientation";
        case ViolationKind::multiple_parents: return "MultipleParents";
        case ViolationKind::codim_too_small: return "CodimTooSmall";
        case ViolationKind::bad_dims: return "BadDims";
        case ViolationKind::dangling_edge: return "DanglingEdge";
        case ViolationKind::unknown_root: return "UnknownRoot";
    }
    return "Unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << to_string(violations[i].kind) << ": " << violations[i].detail;
    }
    return os.str();
}

int DepthCounts::of(FoldLabel label) const {
    if (label == foldchi::min_plus) return min_plus;
    if (label == foldchi::min_minus) return min_minus;
    if (label == foldchi::max_plus) return max_plus;
    return max_minus;
}

void DepthCounts::bump(FoldLabel label) {
    if (label == foldchi::min_plus) ++min_plus;
    else if (label == foldchi::min_minus) ++min_minus;
    else if (label == foldchi::max_plus) ++max_plus;
    else ++max_minus;
}

namespace {

std::string edge_name(const Edge& e) { return e.tail + "->" + e.head; }

}  // namespace

ValidationReport validate_target_graph(const TargetGraph& g) {
    ValidationReport report;
    auto flag = [&](ViolationKind kind, std::string detail, std::optional<std::size_t> edge = std::nullopt) {
        report.violations.push_back({kind, std::move(detail), edge});
    };

    const Codim c = g.codim;
    if (c.k < 1 || c.n <= c.k) {
        flag(ViolationKind::bad_dims, "need n > k >= 1, got n=" + std::to_string(c.n) +
                                          " k=" + std::to_string(c.k));
    } else if (c.fiber_dim() < 2) {
        flag(ViolationKind::codim_too_small,
             "n - k = " + std::to_string(c.fiber_dim()) + " < 2 merges the min and max labels");
    }

    const bool root_known = g.chi_region.contains(g.root);
    if (!root_known) flag(ViolationKind::unknown_root, "root '" + g.root + "' is not a vertex");

    // Vertex ids are indexed by their position in chi_region (sorted).
    std::vector<const VertexId*> ids;
    ids.reserve(g.chi_region.size());
    for (const auto& entry : g.chi_region) ids.push_back(&entry.first);
    auto index_of = [&](const VertexId& v) {
        const auto it = std::lower_bound(ids.begin(), ids.end(), v, [](const VertexId* a, const VertexId& b) { return *a < b; });
        return it != ids.end() && **it == v ? static_cast<int>(it - ids.begin()) : -1;
    };

    std::vector<int> tail_of(g.edges.size(), -1), head_of(g.edges.size(), -1);
    bool dangling = false;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        for (auto [end, slot] : {std::pair{&e.tail, &tail_of[i]}, std::pair{&e.head, &head_of[i]}}) {
            *slot = index_of(*end);
            if (*slot < 0) {
                dangling = true;
                flag(ViolationKind::dangling_edge, edge_name(e) + " references unknown vertex '" + *end + "'", i);
            }
        }
    }

    std::map<VertexId, int> in_degree;
    for (const Edge& e : g.edges) ++in_degree[e.head];
    for (const auto& [v, count] : in_degree) {
        if (count > 1 && g.chi_region.contains(v))
            flag(ViolationKind::multiple_parents, "'" + v + "' has " + std::to_string(count) + " incoming edges");
    }

    std::set<std::size_t> misoriented;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (root_known && g.edges[i].head == g.root) misoriented.insert(i);
    }

    if (!dangling) {
        // |E| = |V| - 1 and connected is exactly an undirected tree; loops
        // and repeated pairs would leave a vertex unreached.
        const std::size_t nv = g.chi_region.size();
        bool tree = g.edges.size() + 1 == nv;
        std::vector<int> level(nv, -1);
        if (tree) {
            std::vector<std::vector<int>> adjacent(nv);
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                adjacent[tail_of[i]].push_back(head_of[i]);
                adjacent[head_of[i]].push_back(tail_of[i]);
            }
            const int start = root_known ? index_of(g.root) : 0;
            std::vector<int> todo{start};
            level[start] = 0;
            std::size_t reached = 1;
            while (!todo.empty()) {
                const int v = todo.back();
                todo.pop_back();
                for (int w : adjacent[v]) {
                    if (level[w] < 0) {
                        level[w] = level[v] + 1;
                        ++reached;
                        todo.push_back(w);
                    }
                }
            }
            tree = reached == nv;
        }
        if (!tree) {
            flag(ViolationKind::not_a_tree, "underlying graph on " + std::to_string(nv) + " vertices with " +
                                                std::to_string(g.edges.size()) + " edges is not a tree");
        } else if (root_known) {
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                if (level[head_of[i]] != level[tail_of[i]] + 1) misoriented.insert(i);
            }
        }
    }

    for (std::size_t i : misoriented)
        flag(ViolationKind::bad_orientation, edge_name(g.edges[i]) + " does not point away from the root", i);

    return report;
}

RootedTree::RootedTree(const TargetGraph& g) : root_(g.root) {
    ValidationReport report = validate_target_graph(g);
    if (!report.ok()) throw Error(Errc::invalid_graph, report.summary());

    std::map<VertexId, std::vector<const Edge*>> children;
    for (const Edge& e : g.edges) {
        incoming_.emplace(e.head, e);
        children[e.tail].push_back(&e);
    }
    std::vector<VertexId> stack{root_};
    depth_[root_] = 0;
    while (!stack.empty()) {
        VertexId v = std::move(stack.back());
        stack.pop_back();
        const int d = depth_[v];
        for (const Edge* e : children[v]) {
            depth_[e->head] = d + 1;
            stack.push_back(e->head);
        }
    }
}

void RootedTree::require(const VertexId& v) const {
    if (!depth_.contains(v)) throw Error(Errc::unknown_vertex, "no vertex '" + v + "'");
}

int RootedTree::depth(const VertexId& v) const {
    require(v);
    return depth_.at(v);
}

const Edge& RootedTree::incoming(const VertexId& v) const {
    require(v);
    auto it = incoming_.find(v);
    if (it == incoming_.end()) throw Error(Errc::invalid_argument, "the root has no incoming edge");
    return it->second;
}

std::vector<Edge> RootedTree::path_to(const VertexId& v) const {
    require(v);
    std::vector<Edge> path;
    for (VertexId cur = v; cur != root_;) {
        const Edge& e = incoming_.at(cur);
        path.push_back(e);
        cur = e.tail;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

int depth(const TargetGraph& g, const VertexId& v) { return RootedTree(g).depth(v); }

DepthCounts path_label_counts(const TargetGraph& g, const VertexId& v) {
    DepthCounts counts;
    for (const Edge& e : RootedTree(g).path_to(v)) counts.bump(e.label);
    return counts;
}

}  // namespace foldchi
