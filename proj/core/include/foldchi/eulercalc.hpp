#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foldchi/foldcore.hpp"

namespace foldchi {

/// Running Euler characteristic of the regular fiber while crossing
/// singular-value components inward from the unbounded region, where the
/// fiber is empty.
struct FiberWalkState {
    std::int64_t chi = 0;
    std::vector<FoldLabel> steps;

    /// Crossing deltas for a fiber of dimension `fiber_dim`:
    ///   min+  adds a disk component               +1
    ///   max+  caps a sphere boundary with a disk  +(-1)^fiber_dim
    ///   min-  punctures the fiber                 -(-1)^fiber_dim
    ///   max-  deletes a disk component            -1
    void apply(FoldLabel label, int fiber_dim);
};

/// Closed-form fiber Euler characteristic at vertex v:
///   d(min+) - d(max-) + (-1)^(n-k-1) (d(min-) - d(max+)).
std::int64_t fiber_euler(const TargetGraph& g, const VertexId& v);

/// Same quantity obtained by walking the root path with FiberWalkState.
/// Independent implementation, used as an oracle for fiber_euler.
std::int64_t fiber_euler_by_walk(const TargetGraph& g, const VertexId& v);

/// Euler characteristic of the source manifold N.
std::int64_t total_euler(const TargetGraph& g);

/// Mod-2 reduction of chi(N) through depths: sum (chiR + chiS) d + sum over
/// plus-labelled edges of chiS. Result is 0 or 1.
int total_euler_mod2(const TargetGraph& g);

/// chi(N) mod 2 when the boundary is simply connected: k = 3, n odd >= 5,
/// every singular-value component a 2-sphere.
int simply_connected_mod2(const TargetGraph& g);

/// Result of testing a closed even-dimensional M = boundary of N against
/// half its Euler characteristic.
struct ExtensionVerdict {
    bool consistent = false;
    std::int64_t chi_boundary = 0;  // chi(M); the left side is chi_boundary / 2
    std::int64_t rhs = 0;

    bool lhs_is_integer() const { return chi_boundary % 2 == 0; }
    /// "3" or "3/2".
    std::string lhs_text() const;
    /// "Consistent" or "Obstructed(lhs, rhs)".
    std::string describe() const;
};

/// Necessary condition for a definite fold map on M^(n-1) with the given
/// target graph to extend to a submersion on N^n. Requires n - 1 even.
ExtensionVerdict extension_obstruction(std::int64_t chi_boundary, const TargetGraph& g);

/// Heuristic warnings about fibers that cannot exist geometrically
/// (a component count that drops below zero along some root path).
/// Never affects the computed numbers.
std::vector<std::string> realizability_warnings(const TargetGraph& g);

}  // namespace foldchi
