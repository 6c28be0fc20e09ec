#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "asakit/body.hpp"
#include "asakit/errors.hpp"
#include "asakit/sampling.hpp"

using namespace asakit;

namespace {

// Independent oracle: support of an axis-aligned ellipsoid by maximizing
// <x, u> over a dense parametric point cloud of the surface.
double ellipsoid_support_oracle(const Vec& axes, const Vec& u) {
    double best = -1e300;
    const int steps = 400;
    for (int i = 0; i <= steps; ++i) {
        const double theta = std::numbers::pi * i / steps;
        for (int j = 0; j < 2 * steps; ++j) {
            const double phi = std::numbers::pi * j / steps;
            Vec x(3);
            x << axes(0) * std::sin(theta) * std::cos(phi),
                axes(1) * std::sin(theta) * std::sin(phi), axes(2) * std::cos(theta);
            best = std::max(best, x.dot(u));
        }
    }
    return best;
}

// Independent oracle: surface area of an axis-aligned ellipsoid by dense
// parametric triangulation.
double ellipsoid_area_oracle(const Vec& axes) {
    const int nt = 800, np = 1600;
    auto point = [&](int i, int j) {
        const double theta = std::numbers::pi * i / nt;
        const double phi = 2.0 * std::numbers::pi * j / np;
        Eigen::Vector3d x(axes(0) * std::sin(theta) * std::cos(phi),
                          axes(1) * std::sin(theta) * std::sin(phi), axes(2) * std::cos(theta));
        return x;
    };
    double area = 0.0;
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < np; ++j) {
            const auto a = point(i, j), b = point(i + 1, j), c = point(i + 1, j + 1),
                       d = point(i, j + 1);
            area += 0.5 * ((b - a).cross(c - a)).norm();
            area += 0.5 * ((c - a).cross(d - a)).norm();
        }
    return area;
}

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

}  // namespace

TEST_CASE("ball support and derivatives") {
    const Ball ball(vec3(0.5, -0.25, 0.0), 2.0);
    Vec u = vec3(0.6, 0.8, 0.0);
    CHECK(ball.support_raw(u) == doctest::Approx(0.5 * 0.6 - 0.25 * 0.8 + 2.0));
    const Vec g = ball.support_gradient_raw(u);
    CHECK((g - (ball.center() + 2.0 * u)).norm() < 1e-12);
    const Mat h = ball.support_hessian_raw(u);
    CHECK((h * u).norm() < 1e-12);
}

TEST_CASE("ellipsoid support matches dense surface oracle") {
    const Vec axes = vec3(1.0, 2.0, 3.0);
    const Ellipsoid e(axes, Mat::Identity(3, 3), Vec::Zero(3));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 20; ++k) {
        Vec u = vec3(gauss(rng), gauss(rng), gauss(rng));
        u = normalized(u);
        const double oracle = ellipsoid_support_oracle(axes, u);
        CHECK(e.support_raw(u) == doctest::Approx(oracle).epsilon(1e-3));
        CHECK(e.support_raw(u) >= oracle - 1e-12);  // oracle is an inner bound
    }
}

TEST_CASE("support sublinearity") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), vec3(0.1, 0.0, -0.2));
    const Polytope cube(unit_cube_vertices());
    for (int k = 0; k < 1000; ++k) {
        const Vec u = vec3(gauss(rng), gauss(rng), gauss(rng));
        const Vec v = vec3(gauss(rng), gauss(rng), gauss(rng));
        if (u.norm() < 1e-9 || v.norm() < 1e-9 || (u + v).norm() < 1e-9) continue;
        CHECK(e.support_raw(u + v) <= e.support_raw(u) + e.support_raw(v) + 1e-9);
        CHECK(cube.support_raw(u + v) <= cube.support_raw(u) + cube.support_raw(v) + 1e-9);
    }
}

TEST_CASE("gauss and inverse gauss are mutually inverse on smooth bodies") {
    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), vec3(0.2, -0.1, 0.3));
    for (const auto& s : sample_sphere(3, 2, 0)) {
        const Direction u(normalized(s.u));
        const Vec x = inverse_gauss(e, u);
        CHECK((gauss(e, x).coords() - u.coords()).norm() < 1e-8);
    }
    const Ball b(Vec::Zero(2), 1.5);
    for (const auto& s : sample_sphere(2, 64, 0)) {
        const Direction u(normalized(s.u));
        CHECK((inverse_gauss(b, u) - 1.5 * u.coords()).norm() < 1e-10);
    }
}

TEST_CASE("boundary sample weights total the surface area") {
    const Ball b(Vec::Zero(3), 1.0);
    CHECK(boundary_weight_total(sample_boundary(b, 5, 0)) ==
          doctest::Approx(4 * std::numbers::pi).epsilon(1e-3));

    const Polytope cube(unit_cube_vertices());
    CHECK(boundary_weight_total(sample_boundary(cube, 3, 0)) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(cube.surface_area() == doctest::Approx(6.0).epsilon(1e-12));

    const Vec axes = vec3(1.0, 2.0, 3.0);
    const Ellipsoid e(axes, Mat::Identity(3, 3), Vec::Zero(3));
    CHECK(boundary_weight_total(sample_boundary(e, 5, 0)) ==
          doctest::Approx(ellipsoid_area_oracle(axes)).epsilon(2e-3));
}

TEST_CASE("gift wrapping reconstructs hulls from vertex lists") {
    const Polytope cube(unit_cube_vertices());
    CHECK(cube.facets().size() >= 6);
    double offset_sum = 0.0;
    for (const auto& f : cube.facets()) {
        CHECK(f.offset == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(f.normal.norm() == doctest::Approx(1.0).epsilon(1e-12));
        offset_sum += f.area * f.offset;
    }
    CHECK(offset_sum / 3.0 == doctest::Approx(1.0).epsilon(1e-12));  // volume

    // convex-position cloud on a sphere: hull surface area approaches 4 pi
    std::vector<Vec> points;
    for (const Vec& u : icosphere_vertices(3)) points.push_back(u);
    const Polytope hull(points);
    CHECK(hull.surface_area() == doctest::Approx(4 * std::numbers::pi).epsilon(0.02));
    for (const auto& s : sample_sphere(3, 2, 0))
        CHECK(hull.support_raw(s.u) <= 1.0 + 1e-9);
}

TEST_CASE("exposed vertex and non-regular normals") {
    const Polytope cube(unit_cube_vertices());
    const Vec diag = normalized(vec3(1.0, 1.0, 1.0));
    const int id = cube.exposed_vertex(diag);
    CHECK((cube.vertices()[id] - vec3(0.5, 0.5, 0.5)).norm() < 1e-12);
    CHECK_THROWS_AS((void)cube.exposed_vertex(vec3(1.0, 0.0, 0.0)), NonRegularNormal);
    CHECK_THROWS_AS((void)gauss(cube, vec3(0.5, 0.5, 0.5)), NonRegularPoint);
}

TEST_CASE("linear images") {
    const auto ball = std::make_shared<Ball>(Vec::Zero(3), 1.0);
    Mat phi = Mat::Zero(3, 3);
    phi(0, 0) = 1.0;
    phi(1, 1) = 2.0;
    phi(2, 2) = 3.0;
    const auto image = apply_linear(ball, phi, Vec::Zero(3));
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 1000; ++k) {
        const Vec u = vec3(gauss(rng), gauss(rng), gauss(rng));
        if (u.norm() < 1e-9) continue;
        CHECK(image->support_raw(u) == doctest::Approx(ball->support_raw(phi.transpose() * u)));
    }
    CHECK(image->support_raw(vec3(1.0, 0.0, 0.0)) == doctest::Approx(1.0));

    const auto cube = std::make_shared<Polytope>(unit_cube_vertices());
    Mat rot = Mat::Identity(3, 3);
    const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
    rot(0, 0) = c;
    rot(0, 1) = -s;
    rot(1, 0) = s;
    rot(1, 1) = c;
    const auto turned = apply_linear(cube, rot, Vec::Zero(3));
    CHECK(turned->kind() == BodyKind::Polytope);
    CHECK(turned->support_raw(vec3(1.0, 0.0, 0.0)) ==
          doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));

    Mat singular = Mat::Zero(3, 3);
    CHECK_THROWS_AS((void)apply_linear(ball, singular, Vec::Zero(3)), SingularMatrix);
}

TEST_CASE("body spec guards") {
    CHECK_THROWS_AS(Polytope({vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0)}),
                    std::invalid_argument);  // degenerate: no interior
    CHECK_THROWS_AS(Direction(vec3(1.0, 1.0, 0.0)), std::invalid_argument);
    CHECK(Direction::of(vec3(2.0, 0.0, 0.0)).coords()(0) == doctest::Approx(1.0));
}
