#include "hexlet/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hexlet {

namespace {

std::string describe(const char* what, int i, int j, double value) {
    std::ostringstream os;
    os << what << " (" << i << ", " << j << "): " << value;
    return os.str();
}

Family require_s_family(const Family& family, const Tolerance& tol) {
    const SFamilyReport report = validate_s_family(family, tol);
    if (!report.is_s_family) throw Error(ErrorCode::NotSFamily, report.violations.front().message);
    return family;
}

double scale_free_bound(const Tolerance& tol) { return tol.rel + tol.abs; }

}  // namespace

void check_rotation(const Mat& rotation, Eigen::Index d) {
    if (rotation.rows() != d || rotation.cols() != d)
        throw Error(ErrorCode::DimensionMismatch, "rotation must be " + std::to_string(d) + " x " + std::to_string(d));
    const double ortho = (rotation.transpose() * rotation - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
    if (ortho > 1e-9 || rotation.determinant() <= 0)
        throw Error(ErrorCode::BadParams, "rotation parameter must lie in SO(d)");
}

std::vector<std::pair<int, int>> tangency_graph(const std::vector<GenSphere>& spheres, const Tolerance& tol) {
    std::vector<std::pair<int, int>> edges;
    const int count = static_cast<int>(spheres.size());
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            try {
                if (classify_pair(spheres[i], spheres[j], tol).tangent()) edges.emplace_back(i, j);
            } catch (const Error&) {
                // coincident spheres carry no tangency
            }
        }
    return edges;
}

Arrangement arrangement_from_code(const Family& family, const SphericalCode& code, const Mat& rotation,
                                  const Tolerance& tol, bool allow_isolated) {
    require_s_family(family, tol);
    const CanonicalForm cf = canonical_transform(family, tol);
    const LocusSphere locus = require_locus_sphere(cf, tol);
    const Eigen::Index d = locus.flat_dim();
    if (code.dim() != d)
        throw Error(ErrorCode::DimensionMismatch,
                    "code lives on S^" + std::to_string(code.dim() - 1) + " but the locus is S^" + std::to_string(d - 1));

    const Mat rot = rotation.size() == 0 ? Mat::Identity(d, d) : rotation;
    check_rotation(rot, d);

    const ContactAngle angle = contact_angle(locus);
    if (code.size() >= 2) {
        if (angle.is_solitary())
            throw Error(ErrorCode::CodeAngleMismatch, "locus radius below 1 admits a single sphere");
        const double psi = angle.psi();
        if (min_angle(code) < psi - tol.angle)
            throw Error(ErrorCode::CodeAngleMismatch, "code minimum angle is below the contact angle");
        if (!allow_isolated) {
            for (Eigen::Index i = 0; i < code.size(); ++i) {
                bool touches = false;
                for (Eigen::Index j = 0; j < code.size() && !touches; ++j)
                    touches = j != i && std::abs(angle_between(code.point(i), code.point(j)) - psi) <= tol.angle;
                if (!touches)
                    throw Error(ErrorCode::IsolatedSphere, "code point " + std::to_string(i) + " has no neighbor at the contact angle");
            }
        }
    }

    const TransformChain back = inverse(cf.chain);
    Arrangement out;
    out.family = family;
    out.spheres.reserve(static_cast<std::size_t>(code.size()));
    for (Eigen::Index i = 0; i < code.size(); ++i) {
        const Vec center = lift_from_unit(locus, rot * code.point(i));
        out.spheres.push_back(apply_chain(back, GenSphere{SphereD{center, 1.0}}, tol));
    }
    out.tangency_graph = tangency_graph(out.spheres, tol);
    return out;
}

ExtractedCode code_from_arrangement(const Family& family, const std::vector<GenSphere>& spheres,
                                    const Tolerance& tol) {
    for (std::size_t j = 0; j < spheres.size(); ++j)
        for (std::size_t i = 0; i < family.members.size(); ++i) {
            const double r = tangency_residual(spheres[j], family.members[i]);
            if (r > scale_free_bound(tol))
                throw Error(ErrorCode::NotTangentToFamily,
                            describe("sphere / family member residual", int(j), int(i), r));
        }

    require_s_family(family, tol);
    const CanonicalForm cf = canonical_transform(family, tol);
    const LocusSphere locus = require_locus_sphere(cf, tol);
    Tolerance on_locus = tol;
    on_locus.rel = std::max(tol.rel, 1e-8);

    Mat points(locus.flat_dim(), static_cast<Eigen::Index>(spheres.size()));
    for (std::size_t j = 0; j < spheres.size(); ++j) {
        const GenSphere img = apply_chain(cf.chain, spheres[j], tol);
        const auto* s = std::get_if<SphereD>(&img);
        if (!s || std::abs(s->radius - 1.0) > 1e-8)
            throw Error(ErrorCode::NonCongruentImages,
                        "sphere " + std::to_string(j) + " does not map to a unit sphere in the canonical frame");
        points.col(static_cast<Eigen::Index>(j)) = project_to_unit(locus, s->center, on_locus);
    }
    const ContactAngle angle = contact_angle(locus);
    std::optional<double> psi;
    if (angle.is_finite()) psi = angle.psi();
    return {SphericalCode{std::move(points), psi}, angle};
}

Equivalence equivalence_map(const Family& family, const SphericalCode& x, const SphericalCode& y, const Mat& a,
                            const Mat& b, const Tolerance& tol) {
    const auto iso = codes_isometric(x, y, 1e-8);
    if (!iso) throw Error(ErrorCode::NotIsometric, "codes are not isometric");

    const CanonicalForm cf = canonical_transform(family, tol);
    const LocusSphere locus = require_locus_sphere(cf, tol);
    const Eigen::Index d = locus.flat_dim();
    check_rotation(a, d);
    check_rotation(b, d);

    // Rotate about the locus center inside its flat; the orthogonal
    // complement (which holds every constraint center) stays fixed.
    const Mat in_flat = b * iso->map * a.transpose();
    const Eigen::Index n = locus.ambient_dim();
    const Mat q = Mat::Identity(n, n) + locus.basis * (in_flat - Mat::Identity(d, d)) * locus.basis.transpose();
    const SimilarityD sim{1.0, q, locus.center - q * locus.center};

    TransformChain middle;
    middle.steps.emplace_back(sim);
    return {concat(concat(cf.chain, middle), inverse(cf.chain)), iso->matching, iso->map};
}

SlabPacking tangent_pair_correspondence(const GenSphere& s1, const GenSphere& s2,
                                        const std::vector<GenSphere>& packing, const Tolerance& tol) {
    bool tangent = false;
    try {
        tangent = classify_pair(s1, s2, tol).tangent();
    } catch (const Error&) {
    }
    if (!tangent) throw Error(ErrorCode::NotTangentPair, "the two spheres do not touch");
    for (std::size_t j = 0; j < packing.size(); ++j)
        for (const GenSphere* s : {&s1, &s2})
            if (tangency_residual(packing[j], *s) > scale_free_bound(tol))
                throw Error(ErrorCode::NotTangentToPair, "packing sphere " + std::to_string(j) + " misses the pair");

    const CanonicalForm cf = canonical_transform(make_family({s1, s2}), tol);
    const Eigen::Index n = ambient_dim(s1);
    SlabPacking out;
    out.chain = cf.chain;
    out.centers.resize(n - 1, static_cast<Eigen::Index>(packing.size()));
    for (std::size_t j = 0; j < packing.size(); ++j) {
        const GenSphere img = apply_chain(cf.chain, packing[j], tol);
        const auto* s = std::get_if<SphereD>(&img);
        if (!s) throw Error(ErrorCode::NotTangentToPair, "packing sphere maps to a hyperplane");
        out.max_radius_residual = std::max(out.max_radius_residual, std::abs(s->radius - 1.0));
        out.max_midplane_offset = std::max(out.max_midplane_offset, std::abs(s->center(n - 1)));
        out.centers.col(static_cast<Eigen::Index>(j)) = s->center.head(n - 1);
    }
    return out;
}

std::vector<GenSphere> packing_from_slab(const GenSphere& s1, const GenSphere& s2, const Mat& centers,
                                         const Tolerance& tol) {
    const CanonicalForm cf = canonical_transform(make_family({s1, s2}), tol);
    const Eigen::Index n = ambient_dim(s1);
    if (centers.rows() != n - 1) throw Error(ErrorCode::DimensionMismatch, "slab centers must have n-1 coordinates");
    const TransformChain back = inverse(cf.chain);
    std::vector<GenSphere> out;
    for (Eigen::Index j = 0; j < centers.cols(); ++j) {
        Vec c = Vec::Zero(n);
        c.head(n - 1) = centers.col(j);
        out.push_back(apply_chain(back, GenSphere{SphereD{c, 1.0}}, tol));
    }
    return out;
}

VerificationReport verify_arrangement(const Family& family, const std::vector<GenSphere>& spheres,
                                      const Tolerance& tol) {
    VerificationReport report;
    const int count = static_cast<int>(spheres.size());
    const int m = static_cast<int>(family.members.size());
    report.family_residuals.resize(count, m);
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < m; ++i) {
            const double r = tangency_residual(spheres[j], family.members[i]);
            report.family_residuals(j, i) = r;
            report.max_residual = std::max(report.max_residual, r);
            if (r > scale_free_bound(tol))
                report.failures.push_back(describe("not tangent to family member: sphere/member", j, i, r));
        }

    std::vector<int> degree(static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            try {
                const auto rel = classify_pair(spheres[i], spheres[j], tol);
                report.pairs.push_back({i, j, rel.kind});
                if (rel.kind == PairKind::Intersecting)
                    report.failures.push_back(describe("intersecting pair", i, j, inversive_distance(spheres[i], spheres[j])));
                if (rel.tangent()) {
                    ++degree[i];
                    ++degree[j];
                    report.max_residual = std::max(report.max_residual, tangency_residual(spheres[i], spheres[j]));
                }
            } catch (const Error&) {
                report.failures.push_back(describe("coincident pair", i, j, 0.0));
            }
        }
    if (count >= 2)
        for (int i = 0; i < count; ++i)
            if (degree[i] == 0) report.failures.push_back("isolated sphere " + std::to_string(i));

    report.pass = report.failures.empty();
    return report;
}

}  // namespace hexlet
