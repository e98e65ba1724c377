#include "foldchi/roundfold.hpp"

#include <map>
#include <set>

#include "foldchi/error.hpp"

namespace foldchi {

namespace {

void require_codim(Codim codim) {
    if (codim.k < 2 || codim.n <= codim.k)
        throw Error(Errc::wrong_codim, "arrangements need n > k >= 2, got n=" + std::to_string(codim.n) +
                                           " k=" + std::to_string(codim.k));
    if (codim.fiber_dim() < 2)
        throw Error(Errc::codim_too_small, "n - k = " + std::to_string(codim.fiber_dim()) + " < 2");
}

// chi(S^(k-1))
std::int64_t sphere_chi(int k) { return 1 + sign_pow(k - 1); }

}  // namespace

TargetGraph target_graph_from_round(Codim codim, std::span<const FoldLabel> labels_outer_to_inner) {
    require_codim(codim);
    const std::int64_t s = sphere_chi(codim.k);
    const std::size_t r = labels_outer_to_inner.size();

    TargetGraph g;
    g.codim = codim;
    g.root = std::string(outer_region_id);
    g.chi_region[g.root] = 0;
    for (std::size_t i = 1; i <= r; ++i) {
        const VertexId tail = "v" + std::to_string(i - 1);
        const VertexId head = "v" + std::to_string(i);
        g.chi_region[head] = (i == r) ? 1 : s;
        g.edges.push_back({tail, head, labels_outer_to_inner[i - 1], s});
    }
    return g;
}

TargetGraph target_graph_from_forest(Codim codim, const NestingForest& forest) {
    require_codim(codim);

    std::map<std::string, const NestingNode*> by_id;
    for (const NestingNode& node : forest.nodes) {
        if (node.id == outer_region_id)
            throw Error(Errc::not_a_forest, "node id '" + node.id + "' is reserved for the unbounded region");
        if (!by_id.emplace(node.id, &node).second)
            throw Error(Errc::not_a_forest, "duplicate node id '" + node.id + "'");
    }
    for (const NestingNode& node : forest.nodes) {
        if (node.parent && !by_id.contains(*node.parent))
            throw Error(Errc::not_a_forest, "node '" + node.id + "' has unknown parent '" + *node.parent + "'");
    }
    // Every chain of parents must end at a top-level node.
    for (const NestingNode& node : forest.nodes) {
        std::set<std::string> seen{node.id};
        for (const NestingNode* cur = &node; cur->parent;) {
            cur = by_id.at(*cur->parent);
            if (!seen.insert(cur->id).second)
                throw Error(Errc::not_a_forest, "parent cycle through '" + node.id + "'");
        }
    }

    const int wedge_sign = sign_pow(codim.k - 1);
    std::map<std::string, int> children;
    for (const NestingNode& node : forest.nodes) ++children[node.parent.value_or(std::string(outer_region_id))];

    TargetGraph g;
    g.codim = codim;
    g.root = std::string(outer_region_id);
    g.chi_region[g.root] = 0;
    for (const NestingNode& node : forest.nodes) {
        g.chi_region[node.id] = 1 + std::int64_t{children[node.id]} * wedge_sign;
        g.edges.push_back({node.parent.value_or(g.root), node.id, node.label, sphere_chi(codim.k)});
    }
    return g;
}

std::string_view to_string(CertificateFailure f) {
    switch (f) {
        case CertificateFailure::none: return "none";
        case CertificateFailure::monodromy: return "monodromy";
        case CertificateFailure::orientability: return "orientability";
        case CertificateFailure::central_fiber_circles: return "central_fiber_circles";
    }
    return "unknown";
}

std::string Certificate::describe() const {
    if (graph_manifold()) return "GraphManifold";
    return "NotCertified(" + std::string(to_string(failure)) + ")";
}

Certificate certify_graph_manifold(bool periodic_monodromy, bool fiber_orientable, bool central_fiber_no_circles) {
    if (!periodic_monodromy) return {CertificateFailure::monodromy};
    if (!fiber_orientable) return {CertificateFailure::orientability};
    if (!central_fiber_no_circles) return {CertificateFailure::central_fiber_circles};
    return {};
}

}  // namespace foldchi
