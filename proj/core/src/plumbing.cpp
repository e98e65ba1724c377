#include "foldchi/plumbing.hpp"

#include <sstream>

#include "foldchi/checked.hpp"
#include "foldchi/error.hpp"

namespace foldchi {

Mat2Z Mat2Z::shear(std::int64_t e) { return {-1, 0, checked::neg(e), 1}; }

std::int64_t Mat2Z::det() const { return checked::sub(checked::mul(a, d), checked::mul(b, c)); }

Mat2Z Mat2Z::operator*(const Mat2Z& r) const {
    using checked::add, checked::mul;
    return {add(mul(a, r.a), mul(b, r.c)), add(mul(a, r.b), mul(b, r.d)),
            add(mul(c, r.a), mul(d, r.c)), add(mul(c, r.b), mul(d, r.d))};
}

std::string Mat2Z::to_string() const {
    std::ostringstream os;
    os << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
    return os.str();
}

AttachingMatrix::AttachingMatrix(const Mat2Z& m) : m_(m) {
    if (m.det() != -1) throw Error(Errc::bad_determinant, m.to_string() + " has determinant " + std::to_string(m.det()));
}

namespace {

// floor(x / y) for y != 0.
std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    if (y == -1) return checked::neg(x);
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

// B * step(e)^-1 where step(e) = shear(e) * swap = [[0, -1], [1, -e]];
// step(e)^-1 = [[-e, 1], [-1, 0]].
Mat2Z peel_right(const Mat2Z& m, std::int64_t e) {
    using checked::mul, checked::sub;
    return {sub(mul(checked::neg(e), m.a), m.b), m.a, sub(mul(checked::neg(e), m.c), m.d), m.c};
}

}  // namespace

std::vector<std::int64_t> factor_attaching(const AttachingMatrix& A) {
    // swap * A = step(e_l) ... step(e_1) lies in SL(2, Z). Peel steps off the
    // right, choosing each e by floor division so that |top-left| shrinks
    // strictly, until the top-left entry vanishes.
    Mat2Z rest = Mat2Z::swap() * A.matrix();
    std::vector<std::int64_t> es;
    const Mat2Z minus_identity{-1, 0, 0, -1};
    while (true) {
        if (rest == Mat2Z::identity()) break;
        if (rest == minus_identity) {
            // step(0)^2 = -I
            es.insert(es.end(), {0, 0});
            break;
        }
        if (rest.a == 0) {
            // det 1 forces rest = [[0, -1], [1, s]] = step(-s) or its negative.
            if (rest.b == -1) {
                es.push_back(checked::neg(rest.d));
            } else {
                es.insert(es.end(), {rest.d, 0, 0});
            }
            break;
        }
        const std::int64_t e = checked::neg(floor_div(rest.b, rest.a));
        rest = peel_right(rest, e);
        es.push_back(e);
    }
    return es;
}

Mat2Z compose_factors(std::span<const std::int64_t> es) {
    Mat2Z m = Mat2Z::swap();
    for (std::int64_t e : es) m = Mat2Z::swap() * Mat2Z::shear(e) * m;
    return m;
}

std::string_view to_string(WeightConvention c) { return c == WeightConvention::negate ? "negate" : "raw"; }

WeightConvention parse_weight_convention(std::string_view s) {
    if (s == "negate") return WeightConvention::negate;
    if (s == "raw") return WeightConvention::raw;
    throw Error(Errc::invalid_argument, "unknown weight convention '" + std::string(s) + "'");
}

PlumbingGraph build_plumbing_graph(std::int64_t g, std::int64_t b, std::span<const AttachingMatrix> attachings,
                                   WeightConvention convention) {
    if (g < 0) throw Error(Errc::invalid_argument, "genus must be >= 0");
    if (b < 1) throw Error(Errc::invalid_argument, "the fiber needs b >= 1 boundary circles");
    const auto t = static_cast<std::int64_t>(attachings.size());
    if (t > b)
        throw Error(Errc::too_many_tori,
                    std::to_string(t) + " solid tori but only " + std::to_string(b) + " boundary tori");

    PlumbingGraph out;
    out.genus = g;
    out.convention = convention;
    out.boundary_arrows = b - t;
    for (const AttachingMatrix& A : attachings) {
        PlumbingChain chain;
        chain.raw = factor_attaching(A);
        for (std::int64_t e : chain.raw)
            chain.weights.push_back(convention == WeightConvention::negate ? checked::neg(e) : e);
        out.chains.push_back(std::move(chain));
    }
    return out;
}

}  // namespace foldchi
