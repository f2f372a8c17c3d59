#pragma once

#include "hexlet/steiner.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace hexlet::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline Vec gaussian(Rng& rng, Eigen::Index n) {
    std::normal_distribution<double> g;
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = g(rng);
    return v;
}

inline Vec random_unit(Rng& rng, Eigen::Index n) { return gaussian(rng, n).normalized(); }

/// Haar-ish rotation in SO(n) via QR of a Gaussian matrix.
inline Mat random_rotation(Rng& rng, Eigen::Index n) {
    Mat g(n, n);
    for (Eigen::Index c = 0; c < n; ++c) g.col(c) = gaussian(rng, n);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ() * Mat::Identity(n, n);
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i)
        if (r(i, i) < 0) q.col(i) *= -1;
    if (q.determinant() < 0) q.col(0) *= -1;
    return q;
}

inline Mat planar_rotation(double theta) {
    Mat r(2, 2);
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

inline SphereD as_sphere(const GenSphere& g) { return std::get<SphereD>(g); }

inline Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

/// Random rigid motion plus uniform scaling applied to a family.
inline Family random_pose(Rng& rng, const Family& f, double scale) {
    const Eigen::Index n = f.ambient_dim;
    const SimilarityD sim{scale, random_rotation(rng, n), gaussian(rng, n)};
    std::vector<GenSphere> members;
    for (const auto& m : f.members) members.push_back(hexlet::apply(sim, m));
    return make_family(std::move(members));
}

inline Family concentric_annulus(double r1 = 1, double r2 = 3) {
    return make_family({make_sphere(vec({0, 0}), r1), make_sphere(vec({0, 0}), r2)});
}

inline constexpr double pi = std::numbers::pi;

}  // namespace hexlet::testing
