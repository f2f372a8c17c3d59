#include "support.hpp"

#include <doctest.h>

using namespace hexlet;
using namespace hexlet::testing;

namespace {

// Least-squares circle through sample points (algebraic fit).
std::pair<Vec, double> fit_circle(const std::vector<Vec>& pts) {
    Mat a(static_cast<Eigen::Index>(pts.size()), 3);
    Vec b(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const Vec& p = pts[static_cast<std::size_t>(i)];
        a.row(i) << 2 * p(0), 2 * p(1), 1;
        b(i) = p.squaredNorm();
    }
    const Vec sol = a.colPivHouseholderQr().solve(b);
    const Vec c = sol.head(2);
    return {c, std::sqrt(sol(2) + c.squaredNorm())};
}

double gensphere_gap(const GenSphere& a, const GenSphere& b) {
    if (a.index() != b.index()) return 1e300;
    if (const auto* sa = std::get_if<SphereD>(&a)) {
        const auto& sb = std::get<SphereD>(b);
        return std::max((sa->center - sb.center).norm(), std::abs(sa->radius - sb.radius));
    }
    const auto& ha = std::get<HyperplaneD>(a);
    const auto& hb = std::get<HyperplaneD>(b);
    // unoriented: (n, c) and (-n, -c) are the same plane
    const double sign = ha.normal.dot(hb.normal) < 0 ? -1 : 1;
    return std::max((ha.normal - sign * hb.normal).norm(), std::abs(ha.offset - sign * hb.offset));
}

GenSphere random_sphere(Rng& rng, Eigen::Index n) {
    return make_sphere(Vec(3 * gaussian(rng, n)), uniform(rng, 0.2, 4));
}

}  // namespace

TEST_CASE("invert_point fixed examples") {
    const InversionD inv{vec({0, 0}), 1};
    CHECK((invert_point(inv, vec({1, 0})) - vec({1, 0})).norm() < 1e-15);
    const Vec q = invert_point(inv, vec({2, 0}));
    CHECK((q - vec({0.5, 0})).norm() < 1e-15);
    CHECK(q.norm() * 2.0 == doctest::Approx(1.0));
    CHECK_THROWS_AS(invert_point(inv, vec({0, 0})), Error);
}

TEST_CASE("invert_point is an involution") {
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 2 + trial % 4;
        const InversionD inv{gaussian(rng, n), uniform(rng, 0.1, 5)};
        const Vec p = gaussian(rng, n) * 2;
        const Vec back = invert_point(inv, invert_point(inv, p));
        CHECK((back - p).norm() <= 1e-9 * std::max(1.0, p.norm()));
    }
}

TEST_CASE("invert_gensphere matches sampled images") {
    const InversionD inv{vec({0, 0}), 1};
    const auto img = invert_gensphere(inv, make_sphere(vec({2, 0}), 1.0));
    const auto& s = as_sphere(img);
    CHECK((s.center - vec({2.0 / 3, 0})).norm() < 1e-14);
    CHECK(s.radius == doctest::Approx(1.0 / 3).epsilon(1e-14));

    std::vector<Vec> samples;
    for (int i = 0; i < 100; ++i) {
        const double t = 2 * pi * i / 100.0;
        samples.push_back(invert_point(inv, Vec(vec({2 + std::cos(t), std::sin(t)}))));
    }
    const auto [c, r] = fit_circle(samples);
    CHECK((c - s.center).norm() < 1e-10);
    CHECK(std::abs(r - s.radius) < 1e-10);
}

TEST_CASE("sphere through the center maps to a hyperplane") {
    const InversionD inv{vec({0, 0}), 1};
    const auto img = invert_gensphere(inv, make_sphere(vec({1, 0}), 1.0));
    REQUIRE(std::holds_alternative<HyperplaneD>(img));
    const auto& h = std::get<HyperplaneD>(img);
    CHECK((h.normal - vec({1, 0})).norm() < 1e-15);
    CHECK(h.offset == doctest::Approx(0.5));
    for (int i = 1; i < 100; ++i) {
        if (i == 50) continue;  // the inversion center itself
        const double t = 2 * pi * i / 100.0;
        const Vec p = invert_point(inv, Vec(vec({1 + std::cos(t), std::sin(t)})));
        CHECK(std::abs(p(0) - 0.5) < 1e-12);
    }
    // and back
    CHECK(gensphere_gap(invert_gensphere(inv, img), make_sphere(vec({1, 0}), 1.0)) < 1e-14);
}

TEST_CASE("through-center boundary: near spheres approach the plane image") {
    const InversionD inv{vec({0, 0}), 1};
    for (double eps : {1e-3, 1e-5, 1e-7}) {
        const auto img = invert_gensphere(inv, make_sphere(vec({1 + eps, 0}), 1.0));
        const auto& s = as_sphere(img);
        // The near point of the image tends to the plane x = 1/2.
        const double near = s.center(0) - s.radius;
        CHECK(std::abs(near - 0.5) < 2 * eps);
    }
    const auto exact = invert_gensphere(inv, make_sphere(vec({1 + 1e-14, 0}), 1.0));
    CHECK(std::holds_alternative<HyperplaneD>(exact));
}

TEST_CASE("invert_gensphere twice returns the input") {
    Rng rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 2 + trial % 3;
        const InversionD inv{gaussian(rng, n), uniform(rng, 0.5, 3)};
        const GenSphere s = trial % 5 == 0 ? make_hyperplane(random_unit(rng, n), uniform(rng, -2, 2))
                                           : random_sphere(rng, n);
        const auto back = invert_gensphere(inv, invert_gensphere(inv, s));
        CHECK(gensphere_gap(back, s) < 1e-8);
    }
}

TEST_CASE("chains") {
    Rng rng(3);
    const InversionD t{vec({0.3, -0.2, 0.1}), 2.0};
    const TransformChain empty;
    const GenSphere s = make_sphere(vec({1, 2, 3}), 0.7);
    CHECK(gensphere_gap(apply_chain(empty, s), s) == 0);

    TransformChain twice;
    twice.steps = {t, t};
    for (int i = 0; i < 50; ++i) {
        const GenSphere r = random_sphere(rng, 3);
        CHECK(gensphere_gap(apply_chain(twice, r), r) < 1e-8);
    }

    TransformChain mixed;
    mixed.steps = {t, SimilarityD{1.7, random_rotation(rng, 3), vec({1, 0, -1})}, InversionD{vec({2, 2, 2}), 0.5}};
    const TransformChain inv = inverse(mixed);
    for (int i = 0; i < 50; ++i) {
        const GenSphere r = random_sphere(rng, 3);
        CHECK(gensphere_gap(apply_chain(inv, apply_chain(mixed, r)), r) < 1e-8);
        const Vec p = gaussian(rng, 3);
        CHECK((apply_chain(inv, apply_chain(mixed, p)) - p).norm() < 1e-9);
    }
}

TEST_CASE("chain [T, A, T] keeps a hexlet tangent") {
    const Family f = mutually_tangent_family(3, 3);
    const Arrangement a = soddy_arrangement(f, make_code("hexagon"));
    Rng rng(4);
    const InversionD t{vec({5, -1, 2}), 3.0};
    TransformChain chain;
    chain.steps = {t, SimilarityD{0.5, random_rotation(rng, 3), vec({1, 1, 1})}, t};
    std::vector<GenSphere> all = a.spheres;
    all.insert(all.end(), f.members.begin(), f.members.end());
    std::vector<GenSphere> moved;
    for (const auto& s : all) moved.push_back(apply_chain(chain, s));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const bool before = classify_pair(all[i], all[j]).tangent();
            const bool after = classify_pair(moved[i], moved[j], Tolerance{1e-8, 1e-10, 1e-7}).tangent();
            CHECK(before == after);
            if (before) CHECK(tangency_residual(moved[i], moved[j]) < 1e-9);
        }
}

TEST_CASE("inversive distance") {
    CHECK(inversive_distance(make_sphere(vec({0, 0}), 1.0), make_sphere(vec({2, 0}), 1.0)) ==
          doctest::Approx(1.0));
    CHECK(inversive_distance(make_sphere(vec({0, 0}), 3.0), make_sphere(vec({0, 0}), 1.0)) ==
          doctest::Approx(-5.0 / 3));

    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Eigen::Index n = 2 + trial % 3;
        const GenSphere a = random_sphere(rng, n);
        const GenSphere b = random_sphere(rng, n);
        const InversionD t{Vec(4 * gaussian(rng, n)), uniform(rng, 0.5, 4)};
        const double before = inversive_distance(a, b);
        const double after = inversive_distance(invert_gensphere(t, a), invert_gensphere(t, b));
        CHECK(std::abs(std::abs(before) - std::abs(after)) <= 1e-9 * std::max(1.0, std::abs(before)));
    }
}

TEST_CASE("classify_pair") {
    const auto ext = classify_pair(make_sphere(vec({0, 0, 1}), 1.0), make_sphere(vec({0, 0, 3}), 1.0));
    CHECK(ext.kind == PairKind::ExternallyTangent);
    REQUIRE(ext.tangency_point);
    CHECK((*ext.tangency_point - vec({0, 0, 2})).norm() < 1e-15);

    CHECK(classify_pair(make_sphere(vec({0, 0}), 3.0), make_sphere(vec({0, 0}), 1.0)).kind == PairKind::Nested);
    CHECK(classify_pair(make_sphere(vec({0, 0}), 1.0), make_sphere(vec({1.5, 0}), 1.0)).kind ==
          PairKind::Intersecting);
    CHECK(classify_pair(make_sphere(vec({0, 0}), 2.0), make_sphere(vec({1, 0}), 1.0)).kind ==
          PairKind::InternallyTangent);
    CHECK(classify_pair(make_sphere(vec({0, 0}), 1.0), make_sphere(vec({3, 0}), 1.0)).kind == PairKind::Disjoint);
    CHECK(classify_pair(make_hyperplane(vec({0, 1}), 1.0), make_sphere(vec({0, 0}), 1.0)).tangent());
    CHECK_THROWS_AS(classify_pair(make_sphere(vec({0, 0}), 1.0), make_sphere(vec({0, 0}), 1.0)), Error);
}

TEST_CASE("tangency is preserved and the contact point follows") {
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index n = 2 + trial % 3;
        const Vec c = gaussian(rng, n);
        const double r1 = uniform(rng, 0.3, 2), r2 = uniform(rng, 0.3, 2);
        const Vec u = random_unit(rng, n);
        const GenSphere a = make_sphere(c, r1);
        const GenSphere b = make_sphere(Vec(c + (r1 + r2) * u), r2);
        const auto rel = classify_pair(a, b);
        REQUIRE(rel.tangent());
        const InversionD t{Vec(5 * gaussian(rng, n)), uniform(rng, 0.5, 3)};
        const auto moved = classify_pair(invert_gensphere(t, a), invert_gensphere(t, b), Tolerance{1e-8, 1e-10, 1e-7});
        CHECK(moved.tangent());
        if (moved.tangency_point)
            CHECK((*moved.tangency_point - invert_point(t, *rel.tangency_point)).norm() < 1e-6);
    }
}

TEST_CASE("templated on the scalar type") {
    using S = long double;
    const Inversion<S> inv{VectorX<S>::Zero(2), 1};
    const BasicGenSphere<S> s = make_sphere<S>(VectorX<S>::Constant(2, 2), S(1));
    const auto back = invert_gensphere(inv, invert_gensphere(inv, s));
    CHECK(std::abs(std::get<Sphere<S>>(back).radius - 1) < 1e-15L);
}
