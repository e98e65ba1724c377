#include "foldchi/mfunctions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "foldchi/error.hpp"

namespace foldchi {

std::string_view to_string(SequenceViolation v) {
    switch (v) {
        case SequenceViolation::empty_sequence: return "EmptySequence";
        case SequenceViolation::negative_components: return "NegativeComponents";
        case SequenceViolation::bad_dimension: return "BadDimension";
    }
    return "Unknown";
}

bool SequenceReport::has(SequenceViolation v) const {
    return std::find(violations.begin(), violations.end(), v) != violations.end();
}

std::string SequenceReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << to_string(violations[i]) << ": " << details[i];
    }
    return os.str();
}

SequenceReport validate_sequence(const CriticalSequence& seq) {
    SequenceReport report;
    auto flag = [&](SequenceViolation v, std::string detail) {
        report.violations.push_back(v);
        report.details.push_back(std::move(detail));
    };
    if (seq.n < 2) flag(SequenceViolation::bad_dimension, "n = " + std::to_string(seq.n) + " < 2");
    if (seq.events.empty()) {
        flag(SequenceViolation::empty_sequence, "no critical points");
        return report;
    }
    int components = 0;
    for (std::size_t i = 0; i < seq.events.size(); ++i) {
        if (seq.events[i] == min_plus) ++components;
        else if (seq.events[i] == max_minus) --components;
        if (components < 0) {
            flag(SequenceViolation::negative_components,
                 "component count drops below zero at event " + std::to_string(i));
            return report;
        }
    }
    if (components != 0)
        flag(SequenceViolation::negative_components,
             "component count ends at " + std::to_string(components) + " instead of 0");
    return report;
}

namespace {

void require_valid(const CriticalSequence& seq) {
    SequenceReport report = validate_sequence(seq);
    if (!report.ok()) throw Error(Errc::invalid_sequence, report.summary());
}

int top_handle_count(const CriticalSequence& seq) {
    const auto& ev = seq.events;
    if (ev.size() < 3) return 0;
    return static_cast<int>(std::count(ev.begin() + 1, ev.end() - 1, max_plus));
}

}  // namespace

HandleList handle_decomposition(const CriticalSequence& seq) {
    require_valid(seq);
    HandleList h;
    h.n = seq.n;
    h.handles.push_back(0);
    h.handles.insert(h.handles.end(), top_handle_count(seq), seq.n - 1);
    return h;
}

int euler_from_handles(const HandleList& h) {
    return std::accumulate(h.handles.begin(), h.handles.end(), 0,
                           [](int acc, int index) { return acc + sign_pow(index); });
}

std::string_view to_string(BallCountConvention c) {
    return c == BallCountConvention::handle_proof ? "handle_proof" : "theorem_text";
}

BallCountConvention parse_ball_count_convention(std::string_view s) {
    if (s == "handle_proof") return BallCountConvention::handle_proof;
    if (s == "theorem_text") return BallCountConvention::theorem_text;
    throw Error(Errc::invalid_argument, "unknown ball-count convention '" + std::string(s) + "'");
}

std::string DiffeoType::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::sphere_minus_balls:
            os << "S^" << n << " minus " << count << " open ball" << (count == 1 ? "" : "s");
            break;
        case Kind::planar_surface: os << "Sigma_{0," << count << "}"; break;
        case Kind::unknown: os << "unknown"; break;
    }
    return os.str();
}

int DiffeoType::euler() const {
    switch (kind) {
        case Kind::sphere_minus_balls: return 1 + sign_pow(n) - count * sign_pow(n);
        case Kind::planar_surface: return 2 - count;
        case Kind::unknown: break;
    }
    throw Error(Errc::invalid_argument, "Euler characteristic of an unknown type");
}

DiffeoType diffeotype(const CriticalSequence& seq, BallCountConvention convention) {
    require_valid(seq);
    const int p = top_handle_count(seq);
    DiffeoType t;
    t.n = seq.n;
    if (seq.n == 2) {
        t.kind = DiffeoType::Kind::planar_surface;
        t.count = p + 1;
        t.convention_note = "planar surface with one boundary circle per 1-handle plus one";
        return t;
    }
    t.kind = DiffeoType::Kind::sphere_minus_balls;
    if (convention == BallCountConvention::handle_proof) {
        t.count = p + 1;
        t.convention_note =
            "handle_proof: a 0-handle with p trivially attached (n-1)-handles has p+1 boundary spheres";
    } else {
        t.count = p - 1;
        t.convention_note = "theorem_text: p-1 balls as literally stated; differs from the handle count p+1";
        if (t.count <= 0)
            throw Error(Errc::theorem_text_convention_underflow,
                        "p = " + std::to_string(p) + " gives " + std::to_string(t.count) + " balls");
    }
    return t;
}

std::string_view to_string(BlockKind k) {
    switch (k) {
        case BlockKind::base: return "Base";
        case BlockKind::genus_handle: return "GenusHandle";
        case BlockKind::cross_cap: return "CrossCap";
        case BlockKind::boundary_puncture: return "BoundaryPuncture";
        case BlockKind::cap: return "Cap";
    }
    return "Unknown";
}

int BlockDecomposition::total_euler() const {
    return std::accumulate(blocks.begin(), blocks.end(), 0,
                           [](int acc, const Block& b) { return acc + b.euler; });
}

BlockDecomposition generate_surface_mfunction(int g, int s, int b) {
    if (g < 0 || s < 0) throw Error(Errc::invalid_argument, "genus and cross-cap counts must be >= 0");
    if (b < 1) throw Error(Errc::invalid_argument, "a surface with boundary needs b >= 1");

    // Base is a disk (one 0-handle). A genus handle adds two 1-handles, a
    // cross cap or an extra boundary circle one 1-handle. The cap closes the
    // last fiber arc without changing chi.
    BlockDecomposition out{g, s, b, {}};
    out.blocks.push_back({BlockKind::base, 1});
    out.blocks.insert(out.blocks.end(), g, Block{BlockKind::genus_handle, -2});
    out.blocks.insert(out.blocks.end(), s, Block{BlockKind::cross_cap, -1});
    out.blocks.insert(out.blocks.end(), b - 1, Block{BlockKind::boundary_puncture, -1});
    out.blocks.push_back({BlockKind::cap, 0});
    return out;
}

bool sphere_extension_exists(std::span<const SphereComponent> components) {
    if (components.empty()) throw Error(Errc::invalid_argument, "a closed manifold has at least one component");
    return std::all_of(components.begin(), components.end(),
                       [](SphereComponent c) { return c == SphereComponent::standard_sphere; });
}

}  // namespace foldchi
