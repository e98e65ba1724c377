#pragma once

// Test-only graph generators and independent oracles. Nothing here calls
// into the formula code it is used to check.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "foldchi/foldcore.hpp"
#include "foldchi/plumbing.hpp"
#include "foldchi/roundfold.hpp"

namespace foldchi::testing {

/// Every rooted tree on edges+1 vertices, as parent arrays with
/// parent[i] < i (vertex 0 is the root, parent[0] = -1). Each unlabeled
/// rooted tree appears at least once.
std::vector<std::vector<int>> increasing_trees(int edges);

/// Calls fn(labels) for each of the 4^count label assignments.
void for_each_labeling(int count, const std::function<void(const std::vector<FoldLabel>&)>& fn);

/// Graph with vertex i named ids[i] (default "v<i>"), edge parent[i] -> i
/// carrying labels[i-1], chi_sing[i-1], and chi_region[i].
TargetGraph make_graph(Codim codim, const std::vector<int>& parent, const std::vector<FoldLabel>& labels,
                       const std::vector<std::int64_t>& chi_region, const std::vector<std::int64_t>& chi_sing,
                       const std::vector<std::string>& ids = {});

struct RandomGraphSpec {
    Codim codim{5, 2};
    int max_edges = 30;
    int chi_lo = -4, chi_hi = 4;
    bool spherical = false;  // every chiS = 2
};

/// Random tree with shuffled, random-looking vertex ids.
TargetGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);

/// Fiber chi by brute force over the tree: builds the parent map from
/// scratch and counts labels with the explicit geometric deltas.
std::int64_t brute_fiber_chi(const TargetGraph& g, const VertexId& v);

/// chi(B x D^(n-k)) = chi(B) for a compact domain B in R^k bounded by the
/// spheres of `forest`. B is the union of the closures of regions at odd
/// nesting depth; such a closure with j holes has chi = 1 + j(-1)^(k-1).
std::int64_t product_model_chi(int k, const NestingForest& forest);

/// Alternating labels for the product model: entering B is min+, leaving it max-.
NestingForest product_model_forest(std::mt19937_64& rng, int nodes);

/// Random det -1 matrix with entries bounded by `bound` in absolute value.
Mat2Z random_det_minus_one(std::mt19937_64& rng, std::int64_t bound);

/// Plain 2x2 product, overflow-checked with __int128, no library code.
Mat2Z naive_compose(const std::vector<std::int64_t>& es);

}  // namespace foldchi::testing
