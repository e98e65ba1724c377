#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace foldchi {

/// Dimensions of a submersion N^n -> R^k.
struct Codim {
    int n = 0;
    int k = 0;

    /// Dimension n - k of a regular fiber.
    int fiber_dim() const { return n - k; }

    friend bool operator==(const Codim&, const Codim&) = default;
};

enum class Lambda { min, max };
enum class Sigma { plus, minus };

/// Type (lambda, sigma) of a definite fold component of the boundary map.
/// `Lambda::min` is index 0; `Lambda::max` is the top index, whose numeric
/// value depends on the codimension and is only needed for display.
struct FoldLabel {
    Lambda lambda = Lambda::min;
    Sigma sigma = Sigma::plus;

    friend auto operator<=>(const FoldLabel&, const FoldLabel&) = default;
};

inline constexpr FoldLabel min_plus{Lambda::min, Sigma::plus};
inline constexpr FoldLabel min_minus{Lambda::min, Sigma::minus};
inline constexpr FoldLabel max_plus{Lambda::max, Sigma::plus};
inline constexpr FoldLabel max_minus{Lambda::max, Sigma::minus};
inline constexpr FoldLabel all_labels[] = {min_plus, min_minus, max_plus, max_minus};

/// Short tag: "min+", "min-", "max+", "max-".
std::string to_string(FoldLabel label);
/// Inverse of to_string; throws Error(invalid_argument) on anything else.
FoldLabel parse_label(std::string_view tag);
/// "(0,+)" style, with the top index written out as a number.
std::string display_label(FoldLabel label, int top_index);

/// (-1)^e for any integer e.
constexpr int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

using VertexId = std::string;

struct Edge {
    VertexId tail;
    VertexId head;
    FoldLabel label;
    std::int64_t chi_sing = 0;  // chi of the singular-value component crossed by the edge

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Candidate target graph. Any data can be stored; the operations that
/// need a rooted tree check validity first.
///
/// Vertices are kept in a map keyed by id, so iteration order is the
/// lexicographic order of ids. chi of the root region is carried along but
/// never read by the Euler formulas.
struct TargetGraph {
    Codim codim;
    std::map<VertexId, std::int64_t> chi_region;
    VertexId root;
    std::vector<Edge> edges;

    /// Edges sorted by (tail, head, label, chi_sing).
    std::vector<Edge> sorted_edges() const;

    /// Compares edges as multisets.
    friend bool operator==(const TargetGraph& a, const TargetGraph& b);
};

enum class ViolationKind {
    not_a_tree,
    bad_orientation,
    multiple_parents,
    codim_too_small,
    bad_dims,
    dangling_edge,
    unknown_root,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
    std::optional<std::size_t> edge_index;  // offending entry of TargetGraph::edges, if any
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string summary() const;
};

/// Label counts along the path from the root to one vertex.
struct DepthCounts {
    int min_plus = 0;
    int min_minus = 0;
    int max_plus = 0;
    int max_minus = 0;

    int total() const { return min_plus + min_minus + max_plus + max_minus; }
    int of(FoldLabel label) const;
    void bump(FoldLabel label);

    friend bool operator==(const DepthCounts&, const DepthCounts&) = default;
};

/// Structural check. Never throws; all problems land in the report.
ValidationReport validate_target_graph(const TargetGraph& g);

/// Indexed view of a valid target graph. The constructor validates and
/// throws Error(invalid_graph) with the report summary on failure.
class RootedTree {
public:
    explicit RootedTree(const TargetGraph& g);

    const VertexId& root() const { return root_; }
    int depth(const VertexId& v) const;
    /// Edges on the path from the root to v, root side first.
    std::vector<Edge> path_to(const VertexId& v) const;
    /// The unique edge ending at v; v must not be the root.
    const Edge& incoming(const VertexId& v) const;
    bool contains(const VertexId& v) const { return depth_.contains(v); }

private:
    void require(const VertexId& v) const;

    VertexId root_;
    std::map<VertexId, Edge> incoming_;
    std::map<VertexId, int> depth_;
};

/// Number of edges between the root and v. Throws invalid_graph or unknown_vertex.
int depth(const TargetGraph& g, const VertexId& v);

/// Per-label edge counts on the root path to v; the counts sum to depth(g, v).
DepthCounts path_label_counts(const TargetGraph& g, const VertexId& v);

}  // namespace foldchi
