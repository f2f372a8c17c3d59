#include "hexlet/codes.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

namespace hexlet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhi = std::numbers::phi;

Mat columns(const std::vector<Vec>& pts) {
    Mat out(pts.front().size(), static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = pts[i];
    return out;
}

SphericalCode polygon(int k) {
    if (k < 3) throw Error(ErrorCode::BadParams, "polygon needs k >= 3");
    Mat pts(2, k);
    for (int i = 0; i < k; ++i) {
        const double t = 2 * kPi * i / k;
        pts.col(i) << std::cos(t), std::sin(t);
    }
    return {pts, 2 * kPi / k};
}

// Vertices e_i - centroid of the standard simplex in R^{d+1}, written in the
// Helmert basis of the sum-zero hyperplane.
SphericalCode simplex(int d) {
    if (d < 2) throw Error(ErrorCode::BadParams, "simplex needs d >= 2");
    Mat helmert = Mat::Zero(d + 1, d);
    for (int j = 1; j <= d; ++j) {
        const double s = 1.0 / std::sqrt(double(j) * (j + 1));
        for (int i = 0; i < j; ++i) helmert(i, j - 1) = s;
        helmert(j, j - 1) = -j * s;
    }
    Mat pts(d, d + 1);
    for (int i = 0; i <= d; ++i) {
        Vec e = Vec::Constant(d + 1, -1.0 / (d + 1));
        e(i) += 1.0;
        pts.col(i) = (helmert.transpose() * e).normalized();
    }
    return {pts, std::acos(-1.0 / d)};
}

SphericalCode crosspolytope(int d) {
    if (d < 2) throw Error(ErrorCode::BadParams, "crosspolytope needs d >= 2");
    Mat pts = Mat::Zero(d, 2 * d);
    for (int i = 0; i < d; ++i) {
        pts(i, 2 * i) = 1.0;
        pts(i, 2 * i + 1) = -1.0;
    }
    return {pts, kPi / 2};
}

SphericalCode icosahedron() {
    std::vector<Vec> pts;
    const double s = 1.0 / std::sqrt(1 + kPhi * kPhi);
    for (int shift = 0; shift < 3; ++shift)
        for (double a : {1.0, -1.0})
            for (double b : {kPhi, -kPhi}) {
                Vec v = Vec::Zero(3);
                v((shift + 1) % 3) = a * s;
                v((shift + 2) % 3) = b * s;
                pts.push_back(v);
            }
    return {columns(pts), std::acos(1 / std::sqrt(5.0))};
}

// All vectors with two entries +-1/sqrt(2) and the rest zero.
Mat two_hot(int dim) {
    std::vector<Vec> pts;
    const double s = 1 / std::sqrt(2.0);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (double a : {s, -s})
                for (double b : {s, -s}) {
                    Vec v = Vec::Zero(dim);
                    v(i) = a;
                    v(j) = b;
                    pts.push_back(v);
                }
    return columns(pts);
}

SphericalCode cell600() {
    std::vector<Vec> pts;
    for (int i = 0; i < 4; ++i)
        for (double s : {1.0, -1.0}) pts.push_back(s * Vec::Unit(4, i));
    for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v(i) = (mask >> i & 1) ? -0.5 : 0.5;
        pts.push_back(v);
    }
    // Even permutations of (phi, 1, 1/phi, 0) / 2 with all sign changes.
    const std::array<double, 4> base{kPhi / 2, 0.5, 0.5 / kPhi, 0.0};
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
        if (inversions % 2) continue;
        for (int mask = 0; mask < 8; ++mask) {
            Vec v(4);
            for (int i = 0; i < 4; ++i) {
                const int src = perm[i];
                const double sign = (src < 3 && (mask >> src & 1)) ? -1.0 : 1.0;
                v(i) = sign * base[src];
            }
            pts.push_back(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {columns(pts), kPi / 5};
}

int parse_int(std::string_view s) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::BadParams, "expected an integer parameter, got '" + std::string(s) + "'");
    return value;
}

}  // namespace

SphericalCode make_code_from_points(Mat points, std::optional<double> nominal_psi, double norm_tol) {
    for (Eigen::Index i = 0; i < points.cols(); ++i)
        if (std::abs(points.col(i).norm() - 1.0) > norm_tol)
            throw Error(ErrorCode::BadParams, "code point " + std::to_string(i) + " is not a unit vector");
    for (Eigen::Index i = 0; i < points.cols(); ++i)
        for (Eigen::Index j = i + 1; j < points.cols(); ++j)
            if ((points.col(i) - points.col(j)).norm() <= 1e-12)
                throw Error(ErrorCode::BadParams, "code points " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " coincide");
    return {std::move(points), nominal_psi};
}

SphericalCode make_code(std::string_view name, const CodeParams& params) {
    if (name == "polygon") return polygon(params.k);
    if (name == "hexagon") return polygon(6);
    if (name == "simplex") return simplex(params.d);
    if (name == "crosspolytope") return crosspolytope(params.d);
    if (name == "icosahedron") return icosahedron();
    if (name == "cuboctahedron") return {two_hot(3), kPi / 3};
    if (name == "cell24") return {two_hot(4), kPi / 3};
    if (name == "cell600") return cell600();
    throw Error(ErrorCode::UnknownCode, "unknown code '" + std::string(name) + "'");
}

SphericalCode make_code_by_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) return make_code(spec);
    const auto name = spec.substr(0, colon);
    const int value = parse_int(spec.substr(colon + 1));
    if (name == "polygon") return make_code(name, {value, 0});
    if (name == "simplex" || name == "crosspolytope") return make_code(name, {0, value});
    throw Error(ErrorCode::UnknownCode, "code '" + std::string(name) + "' takes no parameter");
}

double angle_between(const Vec& a, const Vec& b) {
    return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
}

double min_angle(const SphericalCode& code) {
    if (code.size() < 2) throw Error(ErrorCode::TooFewPoints, "minimum angle needs at least two points");
    double best = kPi;
    for (Eigen::Index i = 0; i < code.size(); ++i)
        for (Eigen::Index j = i + 1; j < code.size(); ++j)
            best = std::min(best, angle_between(code.points.col(i), code.points.col(j)));
    return best;
}

bool is_psi_code(const SphericalCode& code, double psi, double tol) {
    if (code.size() < 2) return true;
    return min_angle(code) >= psi - tol;
}

namespace {

class IsometrySearch {
public:
    IsometrySearch(const SphericalCode& x, const SphericalCode& y, double tol)
        : x_(x.points), y_(y.points), tol_(tol), gx_(x_.transpose() * x_), gy_(y_.transpose() * y_),
          used_(static_cast<std::size_t>(y_.cols()), false) {
        sorted_x_ = sorted_rows(gx_);
        sorted_y_ = sorted_rows(gy_);
        pick_frame();
        assignment_.resize(frame_.size());
    }

    std::optional<Isometry> run() { return extend(0); }

private:
    static std::vector<std::vector<double>> sorted_rows(const Mat& g) {
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(g.rows()));
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            rows[i].reserve(static_cast<std::size_t>(g.cols()));
            for (Eigen::Index j = 0; j < g.cols(); ++j) rows[i].push_back(g(i, j));
            std::sort(rows[i].begin(), rows[i].end());
        }
        return rows;
    }

    // Greedy maximal linearly independent subset of X.
    void pick_frame() {
        Mat ortho(x_.rows(), 0);
        for (Eigen::Index i = 0; i < x_.cols() && ortho.cols() < x_.rows(); ++i) {
            Vec v = x_.col(i);
            if (ortho.cols() > 0) v -= ortho * (ortho.transpose() * v);
            if (v.norm() > 1e-6) {
                ortho.conservativeResize(Eigen::NoChange, ortho.cols() + 1);
                ortho.col(ortho.cols() - 1) = v.normalized();
                frame_.push_back(i);
            }
        }
    }

    bool signatures_match(Eigen::Index i, Eigen::Index j) const {
        const auto& a = sorted_x_[i];
        const auto& b = sorted_y_[j];
        for (std::size_t k = 0; k < a.size(); ++k)
            if (std::abs(a[k] - b[k]) > tol_) return false;
        return true;
    }

    std::optional<Isometry> extend(std::size_t level) {
        if (level == frame_.size()) return complete();
        const Eigen::Index xi = frame_[level];
        for (Eigen::Index j = 0; j < y_.cols(); ++j) {
            if (used_[j] || !signatures_match(xi, j)) continue;
            bool consistent = true;
            for (std::size_t k = 0; k < level && consistent; ++k)
                consistent = std::abs(gx_(frame_[k], xi) - gy_(assignment_[k], j)) <= tol_;
            if (!consistent) continue;
            used_[j] = true;
            assignment_[level] = j;
            if (auto found = extend(level + 1)) return found;
            used_[j] = false;
        }
        return std::nullopt;
    }

    std::optional<Isometry> complete() const {
        const auto r = static_cast<Eigen::Index>(frame_.size());
        Mat xf(x_.rows(), r), yf(y_.rows(), r);
        for (Eigen::Index k = 0; k < r; ++k) {
            xf.col(k) = x_.col(frame_[k]);
            yf.col(k) = y_.col(assignment_[k]);
        }
        const Eigen::JacobiSVD<Mat> svd(yf * xf.transpose(), Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Mat a = svd.matrixU() * svd.matrixV().transpose();

        const Mat mapped = a * x_;
        const double match_radius = std::sqrt(tol_);
        std::vector<int> matching(static_cast<std::size_t>(x_.cols()), -1);
        std::vector<bool> taken(static_cast<std::size_t>(y_.cols()), false);
        double residual = 0;
        for (Eigen::Index i = 0; i < x_.cols(); ++i) {
            Eigen::Index best = -1;
            double best_dist = match_radius;
            for (Eigen::Index j = 0; j < y_.cols(); ++j) {
                if (taken[j]) continue;
                const double dist = (mapped.col(i) - y_.col(j)).norm();
                if (dist <= best_dist) {
                    best = j;
                    best_dist = dist;
                }
            }
            if (best < 0) return std::nullopt;
            taken[best] = true;
            matching[i] = static_cast<int>(best);
            residual = std::max(residual, best_dist);
        }
        for (Eigen::Index i = 0; i < x_.cols(); ++i)
            for (Eigen::Index j = i + 1; j < x_.cols(); ++j)
                if (std::abs(gx_(i, j) - gy_(matching[i], matching[j])) > tol_) return std::nullopt;
        return Isometry{a, std::move(matching), a.determinant(), residual};
    }

    const Mat& x_;
    const Mat& y_;
    double tol_;
    Mat gx_, gy_;
    std::vector<std::vector<double>> sorted_x_, sorted_y_;
    std::vector<Eigen::Index> frame_;
    std::vector<Eigen::Index> assignment_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<Isometry> codes_isometric(const SphericalCode& x, const SphericalCode& y, double tol,
                                        Eigen::Index max_points) {
    if (x.dim() != y.dim() || x.size() != y.size()) return std::nullopt;
    if (x.size() > max_points)
        throw Error(ErrorCode::SizeGuard, "isometry search limited to " + std::to_string(max_points) + " points");
    if (x.size() == 0) return Isometry{Mat::Identity(x.dim(), x.dim()), {}, 1.0, 0.0};
    return IsometrySearch(x, y, tol).run();
}

const std::vector<KnownCode>& known_codes() {
    static const std::vector<KnownCode> table{
        {"hexagon", 2, 6, kPi / 3},
        {"icosahedron", 3, 12, std::acos(1 / std::sqrt(5.0))},
        {"cuboctahedron", 3, 12, kPi / 3},
        {"cell24", 4, 24, kPi / 3},
        {"cell600", 4, 120, kPi / 5},
    };
    return table;
}

std::optional<long long> kissing_number(int d) {
    switch (d) {
        case 1: return 2;
        case 2: return 6;
        case 3: return 12;
        case 4: return 24;
        case 8: return 240;
        case 24: return 196560;
        default: return std::nullopt;
    }
}

std::vector<std::string> catalog_names() {
    return {"polygon:<k>", "simplex:<d>", "crosspolytope:<d>", "hexagon",
            "icosahedron", "cuboctahedron", "cell24",           "cell600"};
}

}  // namespace hexlet
