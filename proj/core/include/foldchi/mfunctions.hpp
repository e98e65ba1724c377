#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldchi/foldcore.hpp"

namespace foldchi {

/// Boundary critical points of F: N^n -> R in increasing order of critical
/// value. Here Lambda::max stands for index n - 1.
struct CriticalSequence {
    int n = 2;
    std::vector<FoldLabel> events;

    friend bool operator==(const CriticalSequence&, const CriticalSequence&) = default;
};

enum class SequenceViolation { empty_sequence, negative_components, bad_dimension };

std::string_view to_string(SequenceViolation v);

struct SequenceReport {
    std::vector<SequenceViolation> violations;
    std::vector<std::string> details;

    bool ok() const { return violations.empty(); }
    bool has(SequenceViolation v) const;
    std::string summary() const;
};

/// Necessary conditions only: non-empty, n >= 2, and the running count of
/// fiber components (+1 for min+, -1 for max-) never negative and ending at 0.
SequenceReport validate_sequence(const CriticalSequence& seq);

struct HandleList {
    int n = 0;
    std::vector<int> handles;  // handle indices, sorted ascending

    friend bool operator==(const HandleList&, const HandleList&) = default;
};

/// One 0-handle plus an (n-1)-handle for every max+ event strictly between
/// the first and the last event. Throws Error(invalid_sequence).
HandleList handle_decomposition(const CriticalSequence& seq);

/// Alternating sum over handles of (-1)^index.
int euler_from_handles(const HandleList& h);

/// How many balls are removed from S^n when n >= 3, with p (n-1)-handles:
/// handle_proof gives p + 1 boundary spheres, theorem_text gives p - 1.
enum class BallCountConvention { handle_proof, theorem_text };

std::string_view to_string(BallCountConvention c);
BallCountConvention parse_ball_count_convention(std::string_view s);

struct DiffeoType {
    enum class Kind { sphere_minus_balls, planar_surface, unknown };

    Kind kind = Kind::unknown;
    int n = 0;
    int count = 0;  // balls q removed from S^n, or boundary circles b
    std::string convention_note;

    /// "S^3 minus 2 open balls", "Sigma_{0,3}".
    std::string describe() const;
    /// Euler characteristic of the described manifold.
    int euler() const;
};

/// Diffeomorphism type of N from its boundary critical sequence. For n = 2
/// the fibers are assumed to be circles or arcs; the convention only
/// matters for n >= 3.
DiffeoType diffeotype(const CriticalSequence& seq,
                      BallCountConvention convention = BallCountConvention::handle_proof);

enum class BlockKind { base, genus_handle, cross_cap, boundary_puncture, cap };

std::string_view to_string(BlockKind k);

struct Block {
    BlockKind kind;
    int euler;  // contribution to chi of the surface
};

struct BlockDecomposition {
    int genus = 0;
    int cross_caps = 0;
    int boundary = 1;
    std::vector<Block> blocks;

    int total_euler() const;
};

/// Stacks the basic pieces of an m-function on the surface obtained from
/// Sigma_g # s RP^2 by removing b >= 1 open disks, in interval order:
/// base, g genus handles, s cross caps, b - 1 punctures, cap.
BlockDecomposition generate_surface_mfunction(int g, int s, int b);

enum class SphereComponent { standard_sphere, other };

/// A definite fold map into R extends to a submersion iff every component
/// of the source is a standard sphere. The list must be non-empty.
bool sphere_extension_exists(std::span<const SphereComponent> components);

}  // namespace foldchi
