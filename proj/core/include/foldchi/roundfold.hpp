#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldchi/foldcore.hpp"

namespace foldchi {

/// Id of the unbounded region in graphs built here.
inline constexpr std::string_view outer_region_id = "v0";

/// Target graph of a round fold boundary map: concentric (k-1)-spheres of
/// radii 1..r, labels listed from the outermost sphere inward. Vertices are
/// v0 (outside) through vr (innermost ball).
TargetGraph target_graph_from_round(Codim codim, std::span<const FoldLabel> labels_outer_to_inner);

/// One embedded (k-1)-sphere of the singular value set. The region just
/// inside the sphere takes the node id as its vertex id.
struct NestingNode {
    std::string id;
    std::optional<std::string> parent;  // enclosing sphere; empty for top level
    FoldLabel label;                    // crossing label, moving inward
};

struct NestingForest {
    std::vector<NestingNode> nodes;
};

/// Target graph of an arbitrary arrangement of disjoint nested spheres. A
/// bounded region with j spheres directly inside it is homotopy equivalent
/// to a wedge of j copies of S^(k-1).
TargetGraph target_graph_from_forest(Codim codim, const NestingForest& forest);

enum class CertificateFailure { none, monodromy, orientability, central_fiber_circles };

std::string_view to_string(CertificateFailure f);

struct Certificate {
    CertificateFailure failure = CertificateFailure::none;

    bool graph_manifold() const { return failure == CertificateFailure::none; }
    /// "GraphManifold" or "NotCertified(<reason>)".
    std::string describe() const;
};

/// Checks the hypotheses under which a 3-manifold carrying a round-fold
/// submersion to the plane is a graph manifold. The first failing flag is
/// reported.
Certificate certify_graph_manifold(bool periodic_monodromy, bool fiber_orientable, bool central_fiber_no_circles);

}  // namespace foldchi
