#include <cmath>
#include <numbers>

#include "doctest.h"

#include "asakit/body_io.hpp"
#include "asakit/verify.hpp"

using namespace asakit;

namespace {

Vec vec3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

std::vector<Vec> unit_cube_vertices() {
    std::vector<Vec> v;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) v.push_back(vec3(0.5 * sx, 0.5 * sy, 0.5 * sz));
    return v;
}

std::vector<BodyPtr> smooth_grid() {
    return {std::make_shared<Ball>(Vec::Zero(3), 1.0),
            std::make_shared<Ball>(Vec::Zero(3), 2.0),
            std::make_shared<Ellipsoid>(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3)),
            std::make_shared<Ellipsoid>(vec3(1.0, 1.0, 4.0), Mat::Identity(3, 3), Vec::Zero(3))};
}

}  // namespace

TEST_CASE("check result bookkeeping") {
    const auto eq = check_equal("a", 1.0, 1.005, 0.01);
    CHECK(eq.pass);
    CHECK(eq.relation == Relation::Eq);
    CHECK_FALSE(check_equal("b", 1.0, 1.05, 0.01).pass);
    CHECK(check_at_most("c", 1.0, 1.0, 0.0).pass);
    CHECK(check_at_most("d", 1.009, 1.0, 0.01).pass);
    CHECK_FALSE(check_at_most("e", 1.02, 1.0, 0.01).pass);
    CHECK(check_at_most("f", -5.0, 0.0, 0.0).pass);
}

TEST_CASE("centroid quadrature") {
    const Ball shifted(vec3(0.3, -0.2, 0.1), 1.0);
    const Vec c = centroid(shifted, 5, 0);
    CHECK((c - vec3(0.3, -0.2, 0.1)).norm() < 1e-3);

    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3));
    CHECK(centroid(e, 5, 0).norm() < 1e-3);
}

TEST_CASE("scaling homogeneity across the body grid") {
    for (const auto& body : smooth_grid())
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
            CHECK(check_homogeneity(body, p, 0.5, 4, 0).pass);
            CHECK(check_homogeneity(body, p, 2.0, 4, 0).pass);
        }
    // p = n: the exponent vanishes and scaling leaves the value unchanged
    const auto ball = std::make_shared<Ball>(Vec::Zero(3), 1.0);
    const auto r = check_homogeneity(ball, 3.0, 2.0, 4, 0);
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-6));
}

TEST_CASE("covariance under linear maps") {
    Mat diag = Mat::Zero(3, 3);
    diag(0, 0) = 1.0;
    diag(1, 1) = 1.5;
    diag(2, 2) = 2.0;
    Mat shear = Mat::Identity(3, 3);
    shear(0, 1) = 1.0;
    for (const auto& body : smooth_grid())
        for (double p : {0.5, 1.0, 2.0}) {
            CHECK(check_gl_covariance(body, p, diag, 4, 0).pass);
            CHECK(check_gl_covariance(body, p, shear, 4, 0).pass);
        }
}

TEST_CASE("translation invariance at p = 1") {
    const auto e = std::make_shared<Ellipsoid>(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3),
                                               Vec::Zero(3));
    CHECK(check_translation_invariance(e, vec3(0.2, -0.1, 0.3), 4, 0).pass);
    const auto ball = std::make_shared<Ball>(Vec::Zero(3), 1.5);
    CHECK(check_translation_invariance(ball, vec3(0.0, 0.5, 0.0), 4, 0).pass);
}

TEST_CASE("isoperimetric bound, tight exactly on ellipsoids") {
    for (const auto& body : smooth_grid())
        for (double p : {1.0, 2.0}) {
            const auto r = check_isoperimetric(body, p, 5, 0);
            CHECK(r.pass);
            CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-3));  // equality case
        }
    // a non-ellipsoid keeps strict slack (widest at larger p)
    const auto quartic = quartic_body(3, 0.3);
    const auto r = check_isoperimetric(quartic, 2.0, 5, 0);
    CHECK(r.pass);
    CHECK(r.lhs < r.rhs * 0.95);
}

TEST_CASE("mixed volume bounds") {
    const Ball unit(Vec::Zero(3), 1.0);
    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3));
    const Polytope cube(unit_cube_vertices());
    for (double p : {1.0, 2.0}) {
        for (const auto r : check_mixed_volume_inequality(e, unit, p, 4, 0)) CHECK(r.pass);
        for (const auto r : check_mixed_volume_inequality(cube, unit, p, 3, 0)) CHECK(r.pass);
    }
}

TEST_CASE("polytopes sit at zero") {
    const Polytope cube(unit_cube_vertices());
    for (double p : {0.5, 1.0, 2.0, 3.0}) CHECK(check_polytope_zero(cube, p, 3, 0).pass);

    const Polytope simplex(
        {vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1), vec3(-0.3, -0.4, -0.5)});
    CHECK(check_polytope_zero(simplex, 1.0, 3, 0).pass);
}

TEST_CASE("planar cases") {
    const auto circle = std::make_shared<Ball>(Vec::Zero(2), 1.0);
    Vec axes(2);
    axes << 1.0, 2.0;
    const auto ellipse =
        std::make_shared<Ellipsoid>(axes, Mat::Identity(2, 2), Vec::Zero(2));
    for (double p : {0.5, 1.0, 2.0}) {
        CHECK(check_homogeneity(circle, p, 2.0, 512, 0).pass);
        CHECK(check_homogeneity(ellipse, p, 2.0, 512, 0).pass);
        CHECK(check_isoperimetric(ellipse, p, 1024, 0).pass);
    }
    Mat rot(2, 2);
    const double c = std::cos(0.7), s = std::sin(0.7);
    rot << c, -s, s, c;
    CHECK(check_gl_covariance(ellipse, 1.0, rot, 1024, 0).pass);
}

TEST_CASE("inscribed polytope ladder keeps the gap open") {
    const Ball ball(Vec::Zero(3), 1.0);
    const auto rows = demo_upper_semicontinuity(ball, 1.0, {0, 1, 2}, 4, 0);
    CHECK(rows.size() == 3);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].asa_polytope == 0.0);
        CHECK(rows[k].asa_body > 4 * std::numbers::pi * 0.99);
        CHECK(rows[k].hausdorff_proxy > 0.0);
        if (k > 0) {
            CHECK(rows[k].vertex_count > rows[k - 1].vertex_count);
            CHECK(rows[k].hausdorff_proxy < rows[k - 1].hausdorff_proxy);
        }
    }
}
