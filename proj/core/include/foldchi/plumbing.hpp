#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foldchi {

/// Exact 2x2 integer matrix, row-major: [[a, b], [c, d]]. Products and
/// determinants are overflow-checked.
///
/// For attaching matrices the first basis vector is the base (S^1)
/// direction and the second the fiber direction, on both tori.
struct Mat2Z {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static Mat2Z identity() { return {1, 0, 0, 1}; }
    /// The swap [[0, 1], [1, 0]].
    static Mat2Z swap() { return {0, 1, 1, 0}; }
    /// [[-1, 0], [-e, 1]]
    static Mat2Z shear(std::int64_t e);

    std::int64_t det() const;
    Mat2Z operator*(const Mat2Z& rhs) const;

    std::string to_string() const;

    friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
};

/// Gluing matrix of a solid torus onto a boundary torus. Always det = -1;
/// construction throws Error(bad_determinant) otherwise.
class AttachingMatrix {
public:
    explicit AttachingMatrix(const Mat2Z& m);

    const Mat2Z& matrix() const { return m_; }

private:
    Mat2Z m_;
};

/// Integers e_1..e_l with swap * shear(e_l) * swap * ... * shear(e_1) * swap == A.
/// Deterministic, not necessarily the shortest such list.
std::vector<std::int64_t> factor_attaching(const AttachingMatrix& A);

/// swap * shear(e_l) * swap * ... * swap * shear(e_1) * swap; the empty list gives swap.
Mat2Z compose_factors(std::span<const std::int64_t> es);

/// Sign applied to the raw continued-fraction entries when they become chain weights.
enum class WeightConvention { negate, raw };

std::string_view to_string(WeightConvention c);
WeightConvention parse_weight_convention(std::string_view s);

struct PlumbingChain {
    std::vector<std::int64_t> raw;      // e_1..e_l, centre outward
    std::vector<std::int64_t> weights;  // raw with the convention applied
};

/// Star-shaped plumbing graph: a central genus-g vertex, one chain per solid
/// torus and an arrow for each boundary circle of the fiber left unfilled.
struct PlumbingGraph {
    std::int64_t genus = 0;
    std::int64_t central_weight = 0;
    std::vector<PlumbingChain> chains;
    std::int64_t boundary_arrows = 0;
    WeightConvention convention = WeightConvention::negate;
};

/// Builds the plumbing graph for identity monodromy from the fiber genus g,
/// its boundary count b and the attaching matrices of t <= b solid tori.
PlumbingGraph build_plumbing_graph(std::int64_t g, std::int64_t b, std::span<const AttachingMatrix> attachings,
                                   WeightConvention convention = WeightConvention::negate);

}  // namespace foldchi
