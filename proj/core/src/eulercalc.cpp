#include "foldchi/eulercalc.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "foldchi/checked.hpp"
#include "foldchi/error.hpp"

namespace foldchi {

namespace {

int mod2(std::int64_t x) { return static_cast<int>(((x % 2) + 2) % 2); }

std::int64_t closed_form_fiber(const DepthCounts& d, int fiber_dim) {
    const std::int64_t direct = std::int64_t{d.min_plus} - d.max_minus;
    const std::int64_t twisted = std::int64_t{d.min_minus} - d.max_plus;
    return direct + sign_pow(fiber_dim - 1) * twisted;
}

// Shared by total_euler and extension_obstruction: the fiber term
// sum_e (chi(R_e) - chi(S_e)) chi(F^-1(r_e)) over all edges.
std::int64_t fiber_term(const TargetGraph& g, const RootedTree& tree) {
    const int fiber_dim = g.codim.fiber_dim();
    // Parents come before children when edges are taken by head depth, so
    // each vertex's path counts extend its parent's.
    std::vector<const Edge*> order;
    for (const Edge& e : g.edges) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(),
                     [&](const Edge* a, const Edge* b) { return tree.depth(a->head) < tree.depth(b->head); });
    std::map<VertexId, DepthCounts> counts{{g.root, {}}};
    std::int64_t sum = 0;
    for (const Edge* e : order) {
        DepthCounts d = counts.at(e->tail);
        d.bump(e->label);
        const std::int64_t weight = checked::sub(g.chi_region.at(e->head), e->chi_sing);
        sum = checked::add(sum, checked::mul(weight, closed_form_fiber(d, fiber_dim)));
        counts.emplace(e->head, d);
    }
    return sum;
}

}  // namespace

void FiberWalkState::apply(FoldLabel label, int fiber_dim) {
    const std::int64_t s = sign_pow(fiber_dim);
    if (label.lambda == Lambda::min && label.sigma == Sigma::plus) chi += 1;
    else if (label.lambda == Lambda::max && label.sigma == Sigma::plus) chi += s;
    else if (label.lambda == Lambda::min && label.sigma == Sigma::minus) chi -= s;
    else chi -= 1;
    steps.push_back(label);
}

std::int64_t fiber_euler(const TargetGraph& g, const VertexId& v) {
    return closed_form_fiber(path_label_counts(g, v), g.codim.fiber_dim());
}

std::int64_t fiber_euler_by_walk(const TargetGraph& g, const VertexId& v) {
    // Deliberately avoids RootedTree: climbs parents by scanning the raw edge
    // list, then replays the crossings from the root outward.
    ValidationReport report = validate_target_graph(g);
    if (!report.ok()) throw Error(Errc::invalid_graph, report.summary());
    if (!g.chi_region.contains(v)) throw Error(Errc::unknown_vertex, "no vertex '" + v + "'");

    std::vector<FoldLabel> upward;
    VertexId cur = v;
    while (cur != g.root) {
        bool found = false;
        for (const Edge& e : g.edges) {
            if (e.head == cur) {
                upward.push_back(e.label);
                cur = e.tail;
                found = true;
                break;
            }
        }
        if (!found || upward.size() > g.edges.size())
            throw Error(Errc::invalid_graph, "no root path from '" + v + "'");
    }

    FiberWalkState state;
    for (auto it = upward.rbegin(); it != upward.rend(); ++it) state.apply(*it, g.codim.fiber_dim());
    return state.chi;
}

std::int64_t total_euler(const TargetGraph& g) {
    const RootedTree tree(g);
    const int sign_cap = sign_pow(g.codim.fiber_dim());
    std::int64_t sum = 0;
    for (const Edge& e : g.edges) {
        if (e.label == min_plus) sum = checked::add(sum, e.chi_sing);
        else if (e.label == max_plus) sum = checked::add(sum, checked::mul(sign_cap, e.chi_sing));
    }
    return checked::add(sum, fiber_term(g, tree));
}

int total_euler_mod2(const TargetGraph& g) {
    const RootedTree tree(g);
    int parity = 0;
    for (const Edge& e : g.edges) {
        const int region = mod2(g.chi_region.at(e.head)) ^ mod2(e.chi_sing);
        parity ^= region & (tree.depth(e.head) & 1);
        if (e.label.sigma == Sigma::plus) parity ^= mod2(e.chi_sing);
    }
    return parity;
}

int simply_connected_mod2(const TargetGraph& g) {
    const Codim c = g.codim;
    if (c.k != 3 || c.n < 5 || c.n % 2 == 0)
        throw Error(Errc::wrong_codim, "need k = 3 and n = 2l+1 with l >= 2, got n=" + std::to_string(c.n) +
                                           " k=" + std::to_string(c.k));
    const RootedTree tree(g);
    int parity = 0;
    for (const Edge& e : g.edges) {
        if (e.chi_sing != 2)
            throw Error(Errc::non_spherical_singular_value,
                        "edge " + e.tail + "->" + e.head + " has chiS = " + std::to_string(e.chi_sing));
        parity ^= mod2(g.chi_region.at(e.head)) & (tree.depth(e.head) & 1);
    }
    return parity;
}

std::string ExtensionVerdict::lhs_text() const {
    if (lhs_is_integer()) return std::to_string(chi_boundary / 2);
    return std::to_string(chi_boundary) + "/2";
}

std::string ExtensionVerdict::describe() const {
    if (consistent) return "Consistent";
    return "Obstructed(" + lhs_text() + ", " + std::to_string(rhs) + ")";
}

ExtensionVerdict extension_obstruction(std::int64_t chi_boundary, const TargetGraph& g) {
    const int m = g.codim.n - 1;
    if (m % 2 != 0)
        throw Error(Errc::odd_source_dimension, "boundary dimension " + std::to_string(m) + " is odd");
    const RootedTree tree(g);

    // Written in terms of m = dim M; the top fold index is m - k.
    const int sign_cap = sign_pow(m - g.codim.k + 1);
    std::int64_t rhs = 0;
    for (const Edge& e : g.edges) {
        if (e.label == min_plus) rhs = checked::add(rhs, e.chi_sing);
        else if (e.label == max_plus) rhs = checked::add(rhs, checked::mul(sign_cap, e.chi_sing));
    }
    rhs = checked::add(rhs, fiber_term(g, tree));

    ExtensionVerdict verdict;
    verdict.chi_boundary = chi_boundary;
    verdict.rhs = rhs;
    verdict.consistent = verdict.lhs_is_integer() && chi_boundary / 2 == rhs;
    return verdict;
}

std::vector<std::string> realizability_warnings(const TargetGraph& g) {
    const RootedTree tree(g);
    std::vector<std::string> warnings;
    for (const auto& [v, chi] : g.chi_region) {
        int components = 0;
        for (const Edge& e : tree.path_to(v)) {
            if (e.label == min_plus) ++components;
            else if (e.label == max_minus) --components;
            if (components < 0) {
                // Report only the first vertex on each path where this happens.
                if (e.head == v)
                    warnings.push_back("fiber over '" + v + "' would need a negative number of disk components after " +
                                       e.tail + "->" + e.head);
                break;
            }
        }
    }
    return warnings;
}

}  // namespace foldchi
