#pragma once

// Generalized spheres (spheres and hyperplanes) in R^n and the inversion
// calculus on them. Everything here is templated on the scalar type and
// header-only; the rest of the library instantiates it with double.

#include "hexlet/common.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

namespace hexlet {

template <typename Scalar>
struct Sphere {
    VectorX<Scalar> center;
    Scalar radius{};
};

/// The hyperplane {x : <normal, x> = offset}; `normal` has unit length.
template <typename Scalar>
struct Hyperplane {
    VectorX<Scalar> normal;
    Scalar offset{};
};

template <typename Scalar>
using BasicGenSphere = std::variant<Sphere<Scalar>, Hyperplane<Scalar>>;

template <typename Scalar>
struct Inversion {
    VectorX<Scalar> center;
    Scalar radius_sq = Scalar(1);
};

/// x -> scale * rotation * x + translation, rotation orthogonal.
template <typename Scalar>
struct Similarity {
    Scalar scale = Scalar(1);
    MatrixX<Scalar> rotation;
    VectorX<Scalar> translation;

    static Similarity identity(Eigen::Index n) {
        return {Scalar(1), MatrixX<Scalar>::Identity(n, n), VectorX<Scalar>::Zero(n)};
    }
};

template <typename Scalar>
using TransformStep = std::variant<Inversion<Scalar>, Similarity<Scalar>>;

/// Ordered composition; steps[0] is applied first.
template <typename Scalar>
struct BasicTransformChain {
    std::vector<TransformStep<Scalar>> steps;
};

using GenSphere = BasicGenSphere<double>;
using SphereD = Sphere<double>;
using HyperplaneD = Hyperplane<double>;
using InversionD = Inversion<double>;
using SimilarityD = Similarity<double>;
using TransformChain = BasicTransformChain<double>;

// ---------------------------------------------------------------------------
// construction

template <typename Scalar>
BasicGenSphere<Scalar> make_sphere(VectorX<Scalar> center, Scalar radius) {
    if (!(radius > Scalar(0)) || !center.allFinite())
        throw Error(ErrorCode::BadParams, "sphere radius must be positive and center finite");
    return Sphere<Scalar>{std::move(center), radius};
}

/// Normalizes `normal`; the plane is {x : <normal, x> = offset} before normalization.
template <typename Scalar>
BasicGenSphere<Scalar> make_hyperplane(VectorX<Scalar> normal, Scalar offset) {
    using std::sqrt;
    const Scalar len = normal.norm();
    if (!(len > Scalar(0)) || !normal.allFinite())
        throw Error(ErrorCode::BadParams, "hyperplane normal must be nonzero and finite");
    return Hyperplane<Scalar>{normal / len, offset / len};
}

template <typename Scalar>
bool is_sphere(const BasicGenSphere<Scalar>& s) {
    return std::holds_alternative<Sphere<Scalar>>(s);
}

template <typename Scalar>
Eigen::Index ambient_dim(const BasicGenSphere<Scalar>& s) {
    return std::visit([](const auto& g) -> Eigen::Index {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Sphere<Scalar>>)
            return g.center.size();
        else
            return g.normal.size();
    }, s);
}

// ---------------------------------------------------------------------------
// inversion

template <typename Scalar>
VectorX<Scalar> invert_point(const Inversion<Scalar>& inv, const VectorX<Scalar>& p,
                             const BasicTolerance<Scalar>& tol = {}) {
    const VectorX<Scalar> w = p - inv.center;
    const Scalar dist_sq = w.squaredNorm();
    if (dist_sq <= tol.abs * tol.abs)
        throw Error(ErrorCode::CenterSingularity, "point coincides with the inversion center");
    return inv.center + (inv.radius_sq / dist_sq) * w;
}

namespace detail {

// Image of a sphere known to pass through the inversion center.
template <typename Scalar>
Hyperplane<Scalar> plane_image_of_sphere(const Inversion<Scalar>& inv, const Sphere<Scalar>& s) {
    const VectorX<Scalar> w = s.center - inv.center;
    const VectorX<Scalar> n = w / w.norm();
    return {n, n.dot(inv.center) + inv.radius_sq / (Scalar(2) * s.radius)};
}

}  // namespace detail

template <typename Scalar>
BasicGenSphere<Scalar> invert_gensphere(const Inversion<Scalar>& inv, const BasicGenSphere<Scalar>& s,
                                        const BasicTolerance<Scalar>& tol = {}) {
    using std::abs;
    if (const auto* sp = std::get_if<Sphere<Scalar>>(&s)) {
        const VectorX<Scalar> w = sp->center - inv.center;
        const Scalar dist = w.norm();
        if (abs(dist - sp->radius) <= tol.abs * std::max(Scalar(1), sp->radius))
            return detail::plane_image_of_sphere(inv, *sp);
        const Scalar power = (dist - sp->radius) * (dist + sp->radius);
        return Sphere<Scalar>{inv.center + (inv.radius_sq / power) * w,
                              inv.radius_sq * sp->radius / abs(power)};
    }
    const auto& h = std::get<Hyperplane<Scalar>>(s);
    const Scalar signed_dist = h.offset - h.normal.dot(inv.center);
    const Scalar scale = std::max({Scalar(1), abs(h.offset), abs(h.normal.dot(inv.center))});
    if (abs(signed_dist) <= tol.abs * scale)
        return h;
    return Sphere<Scalar>{inv.center + (inv.radius_sq / (Scalar(2) * signed_dist)) * h.normal,
                          inv.radius_sq / (Scalar(2) * abs(signed_dist))};
}

// ---------------------------------------------------------------------------
// similarities and chains

template <typename Scalar>
VectorX<Scalar> apply(const Similarity<Scalar>& sim, const VectorX<Scalar>& p) {
    return sim.scale * (sim.rotation * p) + sim.translation;
}

template <typename Scalar>
BasicGenSphere<Scalar> apply(const Similarity<Scalar>& sim, const BasicGenSphere<Scalar>& s) {
    if (const auto* sp = std::get_if<Sphere<Scalar>>(&s))
        return Sphere<Scalar>{hexlet::apply(sim, sp->center), sim.scale * sp->radius};
    const auto& h = std::get<Hyperplane<Scalar>>(s);
    VectorX<Scalar> n = sim.rotation * h.normal;
    const Scalar offset = sim.scale * h.offset + n.dot(sim.translation);
    return Hyperplane<Scalar>{std::move(n), offset};
}

template <typename Scalar>
Similarity<Scalar> inverse(const Similarity<Scalar>& sim) {
    MatrixX<Scalar> rt = sim.rotation.transpose();
    VectorX<Scalar> t = -(rt * sim.translation) / sim.scale;
    return {Scalar(1) / sim.scale, std::move(rt), std::move(t)};
}

/// b after a.
template <typename Scalar>
Similarity<Scalar> compose(const Similarity<Scalar>& b, const Similarity<Scalar>& a) {
    return {b.scale * a.scale, b.rotation * a.rotation,
            b.scale * (b.rotation * a.translation) + b.translation};
}

template <typename Scalar>
BasicTransformChain<Scalar> inverse(const BasicTransformChain<Scalar>& chain) {
    BasicTransformChain<Scalar> out;
    out.steps.reserve(chain.steps.size());
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
        if (const auto* sim = std::get_if<Similarity<Scalar>>(&*it))
            out.steps.emplace_back(inverse(*sim));
        else
            out.steps.push_back(*it);
    }
    return out;
}

/// `second` after `first`.
template <typename Scalar>
BasicTransformChain<Scalar> concat(const BasicTransformChain<Scalar>& first,
                                   const BasicTransformChain<Scalar>& second) {
    BasicTransformChain<Scalar> out = first;
    out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
    return out;
}

template <typename Scalar>
VectorX<Scalar> apply_chain(const BasicTransformChain<Scalar>& chain, VectorX<Scalar> p,
                            const BasicTolerance<Scalar>& tol = {}) {
    for (const auto& step : chain.steps) {
        if (const auto* inv = std::get_if<Inversion<Scalar>>(&step))
            p = invert_point(*inv, p, tol);
        else
            p = hexlet::apply(std::get<Similarity<Scalar>>(step), p);
    }
    return p;
}

template <typename Scalar>
BasicGenSphere<Scalar> apply_chain(const BasicTransformChain<Scalar>& chain, BasicGenSphere<Scalar> s,
                                   const BasicTolerance<Scalar>& tol = {}) {
    for (const auto& step : chain.steps) {
        if (const auto* inv = std::get_if<Inversion<Scalar>>(&step))
            s = invert_gensphere(*inv, s, tol);
        else
            s = hexlet::apply(std::get<Similarity<Scalar>>(step), s);
    }
    return s;
}

// ---------------------------------------------------------------------------
// pair predicates

/// (d^2 - r1^2 - r2^2) / (2 r1 r2) for spheres: +1 external tangency, -1
/// internal tangency, |delta| > 1 disjoint or nested. A sphere and a plane
/// give |signed distance| / r; two planes give |<n1, n2>|. The absolute
/// value is invariant under inversions and similarities.
template <typename Scalar>
Scalar inversive_distance(const BasicGenSphere<Scalar>& a, const BasicGenSphere<Scalar>& b) {
    using std::abs;
    const auto* sa = std::get_if<Sphere<Scalar>>(&a);
    const auto* sb = std::get_if<Sphere<Scalar>>(&b);
    if (sa && sb) {
        const Scalar d_sq = (sa->center - sb->center).squaredNorm();
        return (d_sq - sa->radius * sa->radius - sb->radius * sb->radius) /
               (Scalar(2) * sa->radius * sb->radius);
    }
    if (sa || sb) {
        const auto& s = sa ? *sa : *sb;
        const auto& h = std::get<Hyperplane<Scalar>>(sa ? b : a);
        return abs(h.normal.dot(s.center) - h.offset) / s.radius;
    }
    return abs(std::get<Hyperplane<Scalar>>(a).normal.dot(std::get<Hyperplane<Scalar>>(b).normal));
}

enum class PairKind { ExternallyTangent, InternallyTangent, Disjoint, Nested, Intersecting };

constexpr std::string_view to_string(PairKind k) {
    switch (k) {
        case PairKind::ExternallyTangent: return "externally_tangent";
        case PairKind::InternallyTangent: return "internally_tangent";
        case PairKind::Disjoint: return "disjoint";
        case PairKind::Nested: return "nested";
        case PairKind::Intersecting: return "intersecting";
    }
    return "unknown";
}

template <typename Scalar>
struct PairRelation {
    PairKind kind{};
    std::optional<VectorX<Scalar>> tangency_point;

    bool tangent() const {
        return kind == PairKind::ExternallyTangent || kind == PairKind::InternallyTangent;
    }
    bool non_intersecting() const { return kind != PairKind::Intersecting; }
};

/// Parallel planes are reported Disjoint (their tangency is at infinity).
template <typename Scalar>
PairRelation<Scalar> classify_pair(const BasicGenSphere<Scalar>& a, const BasicGenSphere<Scalar>& b,
                                   const BasicTolerance<Scalar>& tol = {}) {
    using std::abs;
    const auto* sa = std::get_if<Sphere<Scalar>>(&a);
    const auto* sb = std::get_if<Sphere<Scalar>>(&b);
    if (sa && sb) {
        const VectorX<Scalar> diff = sb->center - sa->center;
        const Scalar d = diff.norm();
        const Scalar eps = tol.bound(sa->radius + sb->radius);
        const Scalar gap = abs(sa->radius - sb->radius);
        if (d <= eps && gap <= eps)
            throw Error(ErrorCode::IdenticalSpheres, "spheres coincide within tolerance");
        if (abs(d - (sa->radius + sb->radius)) <= eps)
            return {PairKind::ExternallyTangent, sa->center + (sa->radius / d) * diff};
        if (d > eps && abs(d - gap) <= eps) {
            if (sa->radius >= sb->radius)
                return {PairKind::InternallyTangent, sa->center + (sa->radius / d) * diff};
            return {PairKind::InternallyTangent, sb->center - (sb->radius / d) * diff};
        }
        if (d > sa->radius + sb->radius) return {PairKind::Disjoint, std::nullopt};
        if (d < gap) return {PairKind::Nested, std::nullopt};
        return {PairKind::Intersecting, std::nullopt};
    }
    if (sa || sb) {
        const auto& s = sa ? *sa : *sb;
        const auto& h = std::get<Hyperplane<Scalar>>(sa ? b : a);
        const Scalar signed_dist = h.normal.dot(s.center) - h.offset;
        const Scalar eps = tol.bound(s.radius);
        if (abs(abs(signed_dist) - s.radius) <= eps)
            return {PairKind::ExternallyTangent, VectorX<Scalar>(s.center - signed_dist * h.normal)};
        if (abs(signed_dist) > s.radius) return {PairKind::Disjoint, std::nullopt};
        return {PairKind::Intersecting, std::nullopt};
    }
    const auto& ha = std::get<Hyperplane<Scalar>>(a);
    const auto& hb = std::get<Hyperplane<Scalar>>(b);
    const Scalar dot = ha.normal.dot(hb.normal);
    if (Scalar(1) - abs(dot) > tol.bound(Scalar(1))) return {PairKind::Intersecting, std::nullopt};
    const Scalar offset_b = dot > 0 ? hb.offset : -hb.offset;
    if (abs(ha.offset - offset_b) <= tol.bound(std::max({Scalar(1), abs(ha.offset), abs(hb.offset)})))
        throw Error(ErrorCode::IdenticalSpheres, "hyperplanes coincide within tolerance");
    return {PairKind::Disjoint, std::nullopt};
}

/// Scale-free distance from exact tangency (either orientation). Zero for
/// parallel planes.
template <typename Scalar>
Scalar tangency_residual(const BasicGenSphere<Scalar>& a, const BasicGenSphere<Scalar>& b) {
    using std::abs;
    const auto* sa = std::get_if<Sphere<Scalar>>(&a);
    const auto* sb = std::get_if<Sphere<Scalar>>(&b);
    if (sa && sb) {
        const Scalar d = (sa->center - sb->center).norm();
        const Scalar sum = sa->radius + sb->radius;
        return std::min(abs(d - sum), abs(d - abs(sa->radius - sb->radius))) / sum;
    }
    if (sa || sb) {
        const auto& s = sa ? *sa : *sb;
        const auto& h = std::get<Hyperplane<Scalar>>(sa ? b : a);
        return abs(abs(h.normal.dot(s.center) - h.offset) - s.radius) / s.radius;
    }
    const Scalar dot = std::get<Hyperplane<Scalar>>(a).normal.dot(std::get<Hyperplane<Scalar>>(b).normal);
    return Scalar(1) - abs(dot);
}

}  // namespace hexlet
