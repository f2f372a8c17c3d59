#include "hexlet/steiner.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace hexlet {

namespace {

constexpr double kPi = std::numbers::pi;

void extend_cliques(const std::vector<std::vector<bool>>& adj, Clique& current, int start, int size,
                    std::vector<Clique>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    const int count = static_cast<int>(adj.size());
    for (int v = start; v < count; ++v) {
        if (!std::all_of(current.begin(), current.end(), [&](int u) { return adj[u][v]; })) continue;
        current.push_back(v);
        extend_cliques(adj, current, v + 1, size, out);
        current.pop_back();
    }
}

bool lexicographically_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

Mat gather(const std::vector<Vec>& pts, const Clique& idx) {
    Mat out(pts.front().size(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = pts[idx[i]];
    return out;
}

Mat gather(const SphericalCode& code, const Clique& idx) {
    Mat out(code.dim(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = code.point(idx[i]);
    return out;
}

SphericalCode as_code(const std::vector<Vec>& pts, Eigen::Index dim, std::optional<double> psi) {
    Mat m(dim, static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = pts[i];
    return {std::move(m), psi};
}

// k points in R^{k-1} centered at the origin with all mutual distances 2.
Mat simplex_edge_two(int k) {
    Mat out = Mat::Zero(std::max(k - 1, 0), k);
    for (int j = 1; j < k; ++j) {
        const double s = std::sqrt(2.0 / (double(j) * (j + 1)));
        for (int i = 0; i < j; ++i) out(j - 1, i) = s;
        out(j - 1, j) = -j * s;
    }
    return out;
}

void check_mutually_tangent(const Family& family, const Tolerance& tol) {
    for (std::size_t i = 0; i < family.members.size(); ++i)
        for (std::size_t j = i + 1; j < family.members.size(); ++j)
            if (!classify_pair(family.members[i], family.members[j], tol).tangent())
                throw Error(ErrorCode::BadParams, "family members " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " are not tangent");
}

}  // namespace

std::vector<Clique> find_cliques(const SphericalCode& code, double psi, int size, double angle_tol) {
    if (size < 1) throw Error(ErrorCode::BadParams, "clique size must be at least 1");
    const auto count = static_cast<std::size_t>(code.size());
    std::vector<std::vector<bool>> adj(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            adj[i][j] = adj[j][i] =
                std::abs(angle_between(code.point(Eigen::Index(i)), code.point(Eigen::Index(j))) - psi) <= angle_tol;
    std::vector<Clique> out;
    Clique current;
    extend_cliques(adj, current, 0, size, out);
    return out;
}

std::pair<Vec, Vec> adjacent_points(const Mat& verts, double psi, double angle_tol) {
    const Eigen::Index d = verts.rows();
    if (d < 2 || verts.cols() != d - 1)
        throw Error(ErrorCode::DegenerateSimplex, "expected d-1 vertices in R^d");
    for (Eigen::Index i = 0; i < verts.cols(); ++i) {
        if (std::abs(verts.col(i).norm() - 1.0) > 1e-9)
            throw Error(ErrorCode::DegenerateSimplex, "vertices must be unit vectors");
        for (Eigen::Index j = i + 1; j < verts.cols(); ++j)
            if (std::abs(angle_between(verts.col(i), verts.col(j)) - psi) > angle_tol)
                throw Error(ErrorCode::DegenerateSimplex, "vertices are not pairwise at angle psi");
    }

    const Mat gram = verts.transpose() * verts;
    const Eigen::FullPivLU<Mat> lu(gram);
    if (lu.rank() < gram.rows()) throw Error(ErrorCode::DegenerateSimplex, "vertices are linearly dependent");
    const Vec coeffs = lu.solve(Vec::Constant(gram.rows(), std::cos(psi)));
    const Vec foot = verts * coeffs;
    const double slack = 1.0 - foot.squaredNorm();
    if (slack < -1e-12) throw Error(ErrorCode::NoRealSolution, "psi too large to complete the simplex");

    const Eigen::HouseholderQR<Mat> qr(verts);
    Vec normal = qr.householderQ() * Vec::Unit(d, d - 1);
    Eigen::Index lead = 0;
    normal.cwiseAbs().maxCoeff(&lead);
    if (normal(lead) < 0) normal = -normal;

    const double t = std::sqrt(std::max(slack, 0.0));
    return {foot + t * normal, foot - t * normal};
}

Mat regular_simplex_seed(int d, double psi) {
    if (d < 2) throw Error(ErrorCode::BadParams, "seed dimension must be at least 2");
    const int k = d - 1;
    const double c = std::cos(psi);
    const Mat gram = (1.0 - c) * Mat::Identity(k, k) + c * Mat::Ones(k, k);
    const Eigen::LLT<Mat> llt(gram);
    if (llt.info() != Eigen::Success) throw Error(ErrorCode::InfeasiblePsi, "no regular simplex with this side");
    const Mat lower = llt.matrixL();
    Mat seed = Mat::Zero(d, k);
    seed.topRows(k) = lower.transpose();
    return seed;
}

SphericalCode tight_code(int d, double psi, const std::optional<Mat>& seed, double angle_tol) {
    if (d < 2) throw Error(ErrorCode::BadParams, "tight closure needs d >= 2");
    if (!(psi > 0)) throw Error(ErrorCode::BadParams, "psi must be positive");
    if (psi > std::acos(-1.0 / d) + angle_tol)
        throw Error(ErrorCode::InfeasiblePsi, "psi exceeds arccos(-1/d)");

    const Mat start = seed ? *seed : regular_simplex_seed(d, psi);
    if (start.rows() != d || start.cols() != d - 1)
        throw Error(ErrorCode::BadParams, "seed must hold d-1 points of R^d");

    std::vector<Vec> pts;
    for (Eigen::Index i = 0; i < start.cols(); ++i) pts.push_back(start.col(i));
    std::set<Clique> processed;

    auto admissible = [&](const Vec& cand) {
        return std::all_of(pts.begin(), pts.end(),
                           [&](const Vec& p) { return angle_between(cand, p) >= psi - angle_tol; });
    };

    bool changed = true;
    while (changed) {
        changed = false;
        const auto cliques = find_cliques(as_code(pts, d, psi), psi, d - 1, angle_tol);
        for (const auto& clique : cliques) {
            if (!processed.insert(clique).second) continue;
            auto [a, b] = adjacent_points(gather(pts, clique), psi, angle_tol);
            if (lexicographically_less(b, a)) std::swap(a, b);
            for (const Vec* cand : {&a, &b})
                if (admissible(*cand)) {
                    pts.push_back(*cand);
                    changed = true;
                }
        }
    }
    return as_code(pts, d, psi);
}

bool is_steiner(const SphericalCode& code, double psi, double angle_tol) {
    const auto d = static_cast<int>(code.dim());
    if (d < 2 || code.size() == 0) return false;
    const auto cliques = find_cliques(code, psi, d - 1, angle_tol);
    if (cliques.empty()) return false;

    auto present = [&](const Vec& v) {
        for (Eigen::Index i = 0; i < code.size(); ++i)
            if (angle_between(v, code.point(i)) <= angle_tol) return true;
        return false;
    };
    for (const auto& clique : cliques) {
        try {
            const auto [a, b] = adjacent_points(gather(code, clique), psi, angle_tol);
            if (!present(a) || !present(b)) return false;
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

std::string to_string(const SteinerClass& c) {
    using K = SteinerClass::Kind;
    switch (c.kind) {
        case K::Polygon: return "polygon(" + std::to_string(c.param) + ")";
        case K::Simplex: return "simplex(" + std::to_string(c.param) + ")";
        case K::Crosspolytope: return "crosspolytope(" + std::to_string(c.param) + ")";
        case K::Icosahedron: return "icosahedron";
        case K::Cell600: return "cell600";
        case K::NotSteiner: return "not_steiner";
    }
    return "not_steiner";
}

SteinerClass classify_steiner(const SphericalCode& code, double psi, double angle_tol) {
    using K = SteinerClass::Kind;
    if (!is_steiner(code, psi, angle_tol)) return {K::NotSteiner, 0};

    const auto d = static_cast<int>(code.dim());
    const auto size = static_cast<int>(code.size());
    auto near = [&](double target) { return std::abs(psi - target) <= angle_tol; };

    std::optional<std::pair<SteinerClass, SphericalCode>> match;
    if (d == 2 && near(2 * kPi / size))
        match.emplace(SteinerClass{K::Polygon, size}, make_code("polygon", {size, 0}));
    else if (size == d + 1 && near(std::acos(-1.0 / d)))
        match.emplace(SteinerClass{K::Simplex, d}, make_code("simplex", {0, d}));
    else if (size == 2 * d && near(kPi / 2))
        match.emplace(SteinerClass{K::Crosspolytope, d}, make_code("crosspolytope", {0, d}));
    else if (d == 3 && size == 12 && near(std::acos(1 / std::sqrt(5.0))))
        match.emplace(SteinerClass{K::Icosahedron, 0}, make_code("icosahedron"));
    else if (d == 4 && size == 120 && near(kPi / 5))
        match.emplace(SteinerClass{K::Cell600, 0}, make_code("cell600"));

    if (!match)
        throw Error(ErrorCode::UnclassifiableSteiner, "closed under adjacency but matches no regular simplicial polytope");
    if (!codes_isometric(code, match->second, 1e-8))
        throw Error(ErrorCode::UnclassifiableSteiner, "signature matches " + to_string(match->first) +
                                                          " but the code is not isometric to it");
    return match->first;
}

SoddyParams soddy_params(int m) {
    if (m < 2) throw Error(ErrorCode::BadM, "m must be at least 2");
    SoddyParams p;
    p.m = m;
    p.psi = std::acos(1.0 / (m - 1));
    if (m >= 3) p.r = std::sqrt((2.0 * m - 2.0) / (m - 2.0));
    return p;
}

Family mutually_tangent_family(int n, int m) {
    if (n < 2 || m < 3 || m >= n + 2) throw Error(ErrorCode::BadDims, "need n >= 2 and 3 <= m < n + 2");

    // Canonical picture: planes x_n = -1, +1 and m-2 unit spheres centered on
    // a regular simplex of edge 2 in the midplane. Inverting about a midplane
    // point O at distance >= sqrt(2) from every center (radius^2 = 2) turns the
    // planes into unit spheres touching at O.
    const int k = m - 2;
    const Mat simplex = simplex_edge_two(k);
    double circumradius = 0;
    std::vector<Vec> centers;
    for (int i = 0; i < k; ++i) {
        Vec c = Vec::Zero(n);
        c.head(simplex.rows()) = simplex.col(i);
        circumradius = std::max(circumradius, c.norm());
        centers.push_back(c);
    }
    Vec o = Vec::Zero(n);
    o(0) = -(circumradius + std::sqrt(2.0));

    const InversionD inv{o, 2.0};
    const Vec e_n = Vec::Unit(n, n - 1);
    std::vector<GenSphere> members{invert_gensphere(inv, GenSphere{HyperplaneD{e_n, -1.0}}),
                                   invert_gensphere(inv, GenSphere{HyperplaneD{e_n, 1.0}})};
    for (const auto& c : centers) members.push_back(invert_gensphere(inv, GenSphere{SphereD{c, 1.0}}));

    // Move the tangency point to 2 e_n.
    SimilarityD shift = SimilarityD::identity(n);
    shift.translation = 2.0 * e_n - o;
    for (auto& s : members) s = hexlet::apply(shift, s);
    return make_family(std::move(members));
}

Arrangement soddy_arrangement(const Family& family, const SphericalCode& code, const Tolerance& tol,
                              bool allow_isolated) {
    const auto m = static_cast<int>(family.members.size());
    const auto n = static_cast<int>(family.ambient_dim);
    if (m < 3 || m >= n + 2) throw Error(ErrorCode::BadDims, "need 3 <= m < n + 2");
    check_mutually_tangent(family, tol);

    const SoddyParams params = soddy_params(m);
    const LocusSphere locus = require_locus_sphere(canonical_transform(family, tol), tol);
    const ContactAngle angle = contact_angle(locus);
    if (!angle.is_finite() || std::abs(angle.psi() - params.psi) > 1e-9)
        throw Error(ErrorCode::CodeAngleMismatch, "contact angle differs from arccos(1/(m-1))");
    return arrangement_from_code(family, code, {}, tol, allow_isolated);
}

std::optional<long long> cardinality_hint(int n, int m) {
    if (m < 3 || m >= n + 2) return std::nullopt;
    if (m == n + 1) return 2;
    if (m == 3) return kissing_number(n - 1);
    return std::nullopt;
}

SphericalCode default_soddy_code(int n, int m) {
    if (n < 2 || m < 3 || m >= n + 2) throw Error(ErrorCode::BadDims, "need n >= 2 and 3 <= m < n + 2");
    const int d = n + 2 - m;
    if (d == 1) {
        Mat pair(1, 2);
        pair << 1.0, -1.0;
        return {pair, kPi};
    }
    if (m == 3 && d == 2) return make_code("hexagon");
    if (m == 3 && d == 3) return make_code("cuboctahedron");
    if (m == 3 && d == 4) return make_code("cell24");
    return tight_code(d, soddy_params(m).psi);
}

}  // namespace hexlet
