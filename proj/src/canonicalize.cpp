#include "hexlet/canonicalize.hpp"

#include "hexlet/locus.hpp"

#include <algorithm>
#include <cmath>

namespace hexlet {

namespace {

bool lexicographically_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

// Points on a hyperplane are not interior to it; anything else is.
bool exterior_to(const GenSphere& s, const Vec& p, const Tolerance& tol) {
    if (const auto* sp = std::get_if<SphereD>(&s))
        return (p - sp->center).norm() > sp->radius + tol.bound(sp->radius);
    const auto& h = std::get<HyperplaneD>(s);
    return std::abs(h.normal.dot(p) - h.offset) > tol.bound(1.0);
}

struct PlanePair {
    HyperplaneD first;
    HyperplaneD second;
};

CanonicalForm canonical_tangent(const Family& family, const PairRelation<double>& rel, const Tolerance& tol) {
    const Eigen::Index n = family.ambient_dim;
    const GenSphere& s1 = family.members[0];
    const GenSphere& s2 = family.members[1];

    TransformChain chain;
    PlanePair planes;
    if (!is_sphere(s1) && !is_sphere(s2)) {
        planes = {std::get<HyperplaneD>(s1), std::get<HyperplaneD>(s2)};
    } else {
        const InversionD inv{*rel.tangency_point, 1.0};
        auto to_plane = [&](const GenSphere& s) {
            if (const auto* sp = std::get_if<SphereD>(&s))
                return detail::plane_image_of_sphere(inv, *sp);
            return std::get<HyperplaneD>(s);
        };
        planes = {to_plane(s1), to_plane(s2)};
        chain.steps.emplace_back(inv);
    }

    const Vec& n1 = planes.first.normal;
    const double h1 = planes.first.offset;
    double h2 = planes.second.offset;
    if (n1.dot(planes.second.normal) < 0) h2 = -h2;
    const double gap = std::abs(h1 - h2);
    const double mid = 0.5 * (h1 + h2);

    SimilarityD sim;
    sim.scale = 2.0 / gap;
    sim.rotation = rotation_to_last_axis(n1);
    sim.translation = Vec::Zero(n);
    sim.translation(n - 1) = -sim.scale * mid;
    chain.steps.emplace_back(sim);

    CanonicalForm cf;
    cf.family_case = FamilyCase::Tangent;
    cf.members.reserve(family.members.size());
    const Vec e_n = Vec::Unit(n, n - 1);
    cf.members.emplace_back(HyperplaneD{e_n, h1 > h2 ? 1.0 : -1.0});
    cf.members.emplace_back(HyperplaneD{e_n, h1 > h2 ? -1.0 : 1.0});
    for (std::size_t i = 2; i < family.members.size(); ++i)
        cf.members.push_back(apply_chain(chain, family.members[i], tol));
    cf.chain = std::move(chain);
    return cf;
}

CanonicalForm canonical_non_tangent(const Family& family, const Tolerance& tol) {
    const Eigen::Index n = family.ambient_dim;
    const GenSphere& s1 = family.members[0];
    const GenSphere& s2 = family.members[1];

    TransformChain chain;
    const auto* sp1 = std::get_if<SphereD>(&s1);
    const auto* sp2 = std::get_if<SphereD>(&s2);
    const bool concentric =
        sp1 && sp2 && (sp1->center - sp2->center).norm() <= tol.bound(sp1->radius + sp2->radius);

    SphereD img1, img2;
    if (concentric) {
        img1 = *sp1;
        img2 = *sp2;
    } else {
        auto [p, q] = limiting_points(s1, s2, tol);
        if (lexicographically_less(q, p)) std::swap(p, q);
        Vec chosen = p;
        if (!(exterior_to(s1, p, tol) && exterior_to(s2, p, tol)) && exterior_to(s1, q, tol) &&
            exterior_to(s2, q, tol))
            chosen = q;
        const InversionD inv{chosen, 1.0};
        chain.steps.emplace_back(inv);
        img1 = std::get<SphereD>(invert_gensphere(inv, s1, tol));
        img2 = std::get<SphereD>(invert_gensphere(inv, s2, tol));
    }

    SimilarityD sim;
    sim.scale = 2.0 / std::abs(img2.radius - img1.radius);
    sim.rotation = Mat::Identity(n, n);
    sim.translation = -sim.scale * (0.5 * (img1.center + img2.center));
    chain.steps.emplace_back(sim);

    CanonicalForm cf;
    cf.family_case = FamilyCase::NonTangent;
    cf.members.emplace_back(SphereD{Vec::Zero(n), sim.scale * img1.radius});
    cf.members.emplace_back(SphereD{Vec::Zero(n), sim.scale * img2.radius});
    for (std::size_t i = 2; i < family.members.size(); ++i)
        cf.members.push_back(apply_chain(chain, family.members[i], tol));
    cf.chain = std::move(chain);
    return cf;
}

void check_dimensions(const Family& family) {
    for (const auto& m : family.members)
        if (ambient_dim(m) != family.ambient_dim)
            throw Error(ErrorCode::DimensionMismatch, "family members live in different dimensions");
}

// Conditions (1) and (2); appends violations and returns the relation of the first pair.
std::optional<PairRelation<double>> check_pair_conditions(const Family& family, const Tolerance& tol,
                                                          std::vector<Violation>& out) {
    std::optional<PairRelation<double>> first;
    try {
        first = classify_pair(family.members[0], family.members[1], tol);
        if (first->kind == PairKind::Intersecting) {
            out.push_back({1, {0, 1}, "S1 and S2 intersect"});
            first.reset();
        }
    } catch (const Error& e) {
        out.push_back({1, {0, 1}, "S1 and S2 coincide"});
    }
    for (std::size_t i = 2; i < family.members.size(); ++i) {
        try {
            const auto a = classify_pair(family.members[i], family.members[0], tol);
            const auto b = classify_pair(family.members[i], family.members[1], tol);
            if (a.kind == PairKind::Intersecting && b.kind == PairKind::Intersecting)
                out.push_back({2, {0, 1, static_cast<int>(i)}, "member intersects both S1 and S2"});
        } catch (const Error&) {
            out.push_back({2, {static_cast<int>(i)}, "member coincides with S1 or S2"});
        }
    }
    return first;
}

}  // namespace

std::string_view to_string(FamilyCase c) {
    switch (c) {
        case FamilyCase::Tangent: return "tangent";
        case FamilyCase::NonTangent: return "non_tangent";
        case FamilyCase::Invalid: return "invalid";
    }
    return "invalid";
}

Family make_family(std::vector<GenSphere> members) {
    Family f;
    if (!members.empty()) f.ambient_dim = ambient_dim(members.front());
    f.members = std::move(members);
    check_dimensions(f);
    return f;
}

Mat rotation_to_last_axis(const Vec& normal) {
    const Eigen::Index n = normal.size();
    const Vec e_n = Vec::Unit(n, n - 1);
    const Vec v = normal - e_n;
    if (v.norm() <= 1e-15) return Mat::Identity(n, n);
    Mat h = Mat::Identity(n, n) - 2.0 * v * v.transpose() / v.squaredNorm();
    // The Householder reflection has det -1; flip the first axis to make it proper.
    h.row(0) *= -1.0;
    return h;
}

SFamilyReport validate_s_family(const Family& family, const Tolerance& tol) {
    if (family.members.size() < 2)
        throw Error(ErrorCode::BadParams, "a family needs at least two members");
    check_dimensions(family);

    SFamilyReport report;
    const auto first = check_pair_conditions(family, tol, report.violations);
    if (first) report.family_case = (first->tangent() || (!is_sphere(family.members[0]) && !is_sphere(family.members[1])))
                                        ? FamilyCase::Tangent
                                        : FamilyCase::NonTangent;

    if (report.violations.empty()) {
        try {
            const CanonicalForm cf = canonical_transform(family, tol);
            const LocusResult locus = locus_sphere(cf, tol);
            if (std::holds_alternative<UnboundedLocus>(locus))
                report.violations.push_back({3, {}, "locus of admissible centers is unbounded"});
            else if (const auto* e = std::get_if<EmptyLocus>(&locus))
                report.violations.push_back({3, {}, "no admissible spheres: " + e->reason});
            else if (std::holds_alternative<PointLocus>(locus))
                report.violations.push_back({3, {}, "locus of admissible centers degenerates to a point"});
        } catch (const Error& e) {
            report.violations.push_back({3, {}, e.what()});
        }
    }
    report.is_s_family = report.violations.empty();
    return report;
}

std::pair<Vec, Vec> limiting_points(const GenSphere& s1, const GenSphere& s2, const Tolerance& tol) {
    const auto rel = classify_pair(s1, s2, tol);
    if (rel.kind == PairKind::Intersecting)
        throw Error(ErrorCode::IntersectingPair, "intersecting pair has no real limiting points");
    if (rel.tangent())
        throw Error(ErrorCode::TangentPair, "limiting points of a tangent pair collapse to the tangency point");

    const auto* a = std::get_if<SphereD>(&s1);
    const auto* b = std::get_if<SphereD>(&s2);
    if (!a && !b) throw Error(ErrorCode::TangentPair, "parallel hyperplanes meet at infinity");

    if (a && b) {
        const Vec diff = b->center - a->center;
        const double d = diff.norm();
        if (d <= tol.bound(a->radius + b->radius)) return {a->center, a->center};
        const Vec u = diff / d;
        const double t = (d * d + a->radius * a->radius - b->radius * b->radius) / (2 * d);
        const Vec foot = a->center + t * u;
        const double power = t * t - a->radius * a->radius;
        const double root = std::sqrt(std::max(power, 0.0));
        return {foot - root * u, foot + root * u};
    }

    // Sphere and hyperplane: the radical hyperplane is the plane itself.
    const SphereD& s = a ? *a : *b;
    const HyperplaneD& h = std::get<HyperplaneD>(a ? s2 : s1);
    const double signed_dist = h.normal.dot(s.center) - h.offset;
    const Vec foot = s.center - signed_dist * h.normal;
    const double root = std::sqrt(std::max(signed_dist * signed_dist - s.radius * s.radius, 0.0));
    Vec u = a ? Vec(-h.normal) : Vec(h.normal);
    if (signed_dist < 0) u = -u;  // u points from S1 toward S2
    return {foot - root * u, foot + root * u};
}

CanonicalForm canonical_transform(const Family& family, const Tolerance& tol) {
    if (family.members.size() < 2)
        throw Error(ErrorCode::NotSFamily, "a family needs at least two members");
    check_dimensions(family);
    std::vector<Violation> violations;
    const auto first = check_pair_conditions(family, tol, violations);
    if (!violations.empty()) throw Error(ErrorCode::NotSFamily, violations.front().message);

    if (first->tangent() || (!is_sphere(family.members[0]) && !is_sphere(family.members[1])))
        return canonical_tangent(family, *first, tol);
    return canonical_non_tangent(family, tol);
}

}  // namespace hexlet
