#pragma once

#include <string>

#include "foldchi/foldcore.hpp"
#include "foldchi/plumbing.hpp"

namespace foldchi {

/// Graphviz rendering of a valid target graph. Vertices show depth and chiR,
/// edges show the (lambda, sigma) label and chiS. Output depends only on the
/// graph contents, never on edge insertion order.
std::string emit_dot(const TargetGraph& g);

/// Star-shaped plumbing graph: "[g]" at the centre, one path of weighted
/// vertices per solid torus, and an arrow per unfilled boundary circle.
std::string emit_dot(const PlumbingGraph& p);

}  // namespace foldchi
