#include "hexlet/locus.hpp"

#include <algorithm>
#include <cmath>

namespace hexlet {

namespace {

// Orthonormal basis (k x (k-1)) of the complement of unit vector u in R^k,
// built from the coordinate axes so axis-aligned cuts keep axis-aligned bases.
Mat complement_basis(const Vec& u) {
    const Eigen::Index k = u.size();
    Eigen::Index skip = 0;
    u.cwiseAbs().maxCoeff(&skip);
    Mat out(k, k - 1);
    Eigen::Index col = 0;
    for (Eigen::Index j = 0; j < k; ++j) {
        if (j == skip) continue;
        Vec v = Vec::Unit(k, j);
        v -= u.dot(v) * u;
        for (Eigen::Index c = 0; c < col; ++c) v -= out.col(c).dot(v) * out.col(c);
        out.col(col++) = v.normalized();
    }
    return out;
}

// Running intersection: either a flat (point + span basis) or a sphere
// inside that flat.
struct Running {
    Vec center;
    Mat basis;
    std::optional<double> radius;
};

struct Cut {
    enum { Ok, Empty, Point, Degenerate } status = Ok;
    std::string reason;
};

// Intersect the running sphere with a sphere of the same flat centered at
// center + basis * y, radius `other`.
Cut slice_sphere(Running& st, const Vec& y, double other, const Tolerance& tol) {
    const double rho = *st.radius;
    const double dist = y.norm();
    const double eps = tol.bound(std::max({rho, other, dist}));
    if (dist <= eps) {
        if (std::abs(rho - other) <= eps) return {Cut::Degenerate, "constraint repeats the current locus"};
        return {Cut::Empty, "concentric constraint with a different radius"};
    }
    const Vec u = y / dist;
    const double t = (dist * dist + rho * rho - other * other) / (2 * dist);
    const double r_sq = rho * rho - t * t;
    if (r_sq < -eps * std::max(1.0, rho)) return {Cut::Empty, "constraint misses the current locus"};
    st.center += t * (st.basis * u);
    st.basis = st.basis * complement_basis(u);
    st.radius = std::sqrt(std::max(r_sq, 0.0));
    if (*st.radius <= eps) return {Cut::Point, ""};
    return {};
}

// Same for a hyperplane cutting the flat along unit direction u at signed
// flat-coordinate t.
Cut slice_plane(Running& st, const Vec& u, double t, const Tolerance& tol) {
    const double rho = *st.radius;
    const double eps = tol.bound(std::max(rho, std::abs(t)));
    const double r_sq = rho * rho - t * t;
    if (r_sq < -eps * std::max(1.0, rho)) return {Cut::Empty, "hyperplane misses the current locus"};
    st.center += t * (st.basis * u);
    st.basis = st.basis * complement_basis(u);
    st.radius = std::sqrt(std::max(r_sq, 0.0));
    if (*st.radius <= eps) return {Cut::Point, ""};
    return {};
}

Cut intersect(Running& st, const GenSphere& z, const Tolerance& tol) {
    if (const auto* s = std::get_if<SphereD>(&z)) {
        const Vec y = st.basis.transpose() * (s->center - st.center);
        const Vec perp = s->center - st.center - st.basis * y;
        const double in_flat_sq = s->radius * s->radius - perp.squaredNorm();
        const double eps = tol.bound(s->radius);
        if (in_flat_sq < -eps * std::max(1.0, s->radius)) return {Cut::Empty, "sphere constraint misses the flat"};
        const double in_flat = std::sqrt(std::max(in_flat_sq, 0.0));
        if (!st.radius) {
            st.center += st.basis * y;
            st.radius = in_flat;
            if (in_flat <= eps) return {Cut::Point, ""};
            return {};
        }
        return slice_sphere(st, y, in_flat, tol);
    }
    const auto& h = std::get<HyperplaneD>(z);
    const Vec v = st.basis.transpose() * h.normal;
    const double v_norm = v.norm();
    const double signed_gap = h.offset - h.normal.dot(st.center);
    if (v_norm <= tol.bound(1.0)) {
        const double scale = std::max({1.0, std::abs(h.offset), st.center.norm()});
        if (std::abs(signed_gap) <= tol.bound(scale))
            return {Cut::Degenerate, "hyperplane constraint contains the current locus"};
        return {Cut::Empty, "hyperplane constraint is parallel to the locus flat"};
    }
    const Vec u = v / v_norm;
    const double t = signed_gap / v_norm;
    if (!st.radius) {
        st.center += t * (st.basis * u);
        st.basis = st.basis * complement_basis(u);
        return {};
    }
    return slice_plane(st, u, t, tol);
}

}  // namespace

double ContactAngle::psi() const {
    if (!finite_) throw Error(ErrorCode::BadParams, "solitary contact angle has no finite value");
    return psi_;
}

std::vector<GenSphere> constraint_surfaces(const CanonicalForm& cf, Orientation orientation) {
    std::vector<GenSphere> out;
    const auto n = ambient_dim(cf.members.front());
    if (cf.family_case == FamilyCase::Tangent) {
        out.emplace_back(HyperplaneD{Vec::Unit(n, n - 1), 0.0});
    } else {
        const auto& a = std::get<SphereD>(cf.members[0]);
        const auto& b = std::get<SphereD>(cf.members[1]);
        out.emplace_back(SphereD{Vec::Zero(n), 0.5 * (a.radius + b.radius)});
    }
    for (std::size_t i = 2; i < cf.members.size(); ++i) {
        if (const auto* s = std::get_if<SphereD>(&cf.members[i])) {
            const double r = orientation == Orientation::External ? s->radius + 1.0 : std::abs(s->radius - 1.0);
            out.emplace_back(SphereD{s->center, r});
        } else {
            // Unit spheres touching a plane member: take the parallel plane on
            // the side of the origin.
            const auto& h = std::get<HyperplaneD>(cf.members[i]);
            const double shift = h.offset >= 0 ? -1.0 : 1.0;
            out.emplace_back(HyperplaneD{h.normal, h.offset + shift});
        }
    }
    return out;
}

LocusResult locus_sphere(const CanonicalForm& cf, const Tolerance& tol, Orientation orientation) {
    const auto surfaces = constraint_surfaces(cf, orientation);
    const auto n = ambient_dim(cf.members.front());

    Running st{Vec::Zero(n), Mat::Identity(n, n), std::nullopt};
    for (const auto& z : surfaces) {
        const Cut cut = intersect(st, z, tol);
        switch (cut.status) {
            case Cut::Ok: break;
            case Cut::Empty: return EmptyLocus{cut.reason};
            case Cut::Point: return PointLocus{st.center};
            case Cut::Degenerate: throw Error(ErrorCode::DegenerateConstraint, cut.reason);
        }
    }
    if (!st.radius) return UnboundedLocus{st.center, st.basis};
    return LocusSphere{st.center, *st.radius, st.basis};
}

LocusSphere require_locus_sphere(const CanonicalForm& cf, const Tolerance& tol) {
    const LocusResult result = locus_sphere(cf, tol);
    if (const auto* l = std::get_if<LocusSphere>(&result)) return *l;
    if (std::holds_alternative<UnboundedLocus>(result))
        throw Error(ErrorCode::NotSFamily, "locus of admissible centers is unbounded");
    if (std::holds_alternative<PointLocus>(result))
        throw Error(ErrorCode::NotSFamily, "locus of admissible centers is a single point");
    throw Error(ErrorCode::NotSFamily, "no admissible spheres: " + std::get<EmptyLocus>(result).reason);
}

ContactAngle contact_angle(const LocusSphere& locus) {
    if (!(locus.radius > 0)) throw Error(ErrorCode::BadParams, "locus radius must be positive");
    if (locus.radius < 1.0) return ContactAngle::solitary();
    const double c = 1.0 - 2.0 / (locus.radius * locus.radius);
    return ContactAngle::finite(std::acos(std::clamp(c, -1.0, 1.0)));
}

Vec project_to_unit(const LocusSphere& locus, const Vec& p, const Tolerance& tol) {
    const Vec rel = p - locus.center;
    const Vec y = locus.basis.transpose() * rel;
    const double off_flat = (rel - locus.basis * y).norm();
    const double y_norm = y.norm();
    const double eps = tol.bound(std::max(1.0, locus.radius));
    if (off_flat > eps || std::abs(y_norm - locus.radius) > eps)
        throw Error(ErrorCode::OffLocus, "point does not lie on the locus sphere");
    return y / y_norm;
}

Vec lift_from_unit(const LocusSphere& locus, const Vec& x) {
    if (x.size() != locus.flat_dim())
        throw Error(ErrorCode::DimensionMismatch, "unit vector dimension differs from the locus flat");
    if (std::abs(x.norm() - 1.0) > 1e-9) throw Error(ErrorCode::BadParams, "lift expects a unit vector");
    return locus.center + locus.radius * (locus.basis * x);
}

}  // namespace hexlet
