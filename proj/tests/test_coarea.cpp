#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "asakit/body_io.hpp"
#include "asakit/coarea.hpp"

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

// Independent oracle: curvature function of an origin-centered ellipsoid.
double ellipsoid_curvature_oracle(const Mat& m, const Vec& u) {
    const double h = std::sqrt(u.dot(m * u));
    return m.determinant() / std::pow(h, u.size() + 1.0);
}

std::vector<ScalarField> seeded_fields(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> uniform(0.0, 2 * std::numbers::pi);
    std::vector<ScalarField> fields;
    for (int k = 0; k < count; ++k) {
        Vec b = vec3(gauss(rng), gauss(rng), gauss(rng));
        const double c = uniform(rng);
        fields.push_back(
            [b, c](const Vec& x) { return std::exp(0.5 * std::sin(b.dot(x) + c)); });
    }
    return fields;
}

}  // namespace

TEST_CASE("rolling ball membership") {
    const Ball ball(Vec::Zero(3), 1.0);
    const Vec x = vec3(1.0, 0.0, 0.0);
    CHECK(in_rolling_ball_set(ball, x, 0.5, 4, 0));
    CHECK(in_rolling_ball_set(ball, x, 1.0, 4, 0));
    CHECK_FALSE(in_rolling_ball_set(ball, x, 1.3, 4, 0));
    CHECK(rolling_ball_threshold(ball, x, 0.01, 2.0, 5, 0) == doctest::Approx(1.0).epsilon(1e-6));

    const Polytope cube(unit_cube_vertices());
    const Vec face_center = vec3(0.5, 0.0, 0.0);
    CHECK(in_rolling_ball_set(cube, face_center, 0.25, 5, 0));
    CHECK_FALSE(in_rolling_ball_set(cube, face_center, 0.7, 5, 0));
    CHECK(rolling_ball_threshold(cube, face_center, 0.01, 2.0, 5, 0) ==
          doctest::Approx(0.5).epsilon(0.02));
    // vertices are non-regular boundary points and never covered
    CHECK_FALSE(in_rolling_ball_set(cube, vec3(0.5, 0.5, 0.5), 0.01, 5, 0));

    // smooth body: the bisection finds a strictly positive radius, here the
    // smaller principal curvature radius 1/3 at the tip of the long axis
    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3));
    const double r = rolling_ball_threshold(e, vec3(0.0, 0.0, 3.0), 0.01, 5.0, 5, 0);
    CHECK(r == doctest::Approx(1.0 / 3).epsilon(0.02));
}

TEST_CASE("enclosing ball membership") {
    const Ball ball(Vec::Zero(3), 1.0);
    const Direction u = Direction::of(vec3(0.3, -0.2, 0.9));
    CHECK(in_enclosing_ball_set(ball, u, 1.0, 4, 0));
    CHECK(in_enclosing_ball_set(ball, u, 3.0, 4, 0));
    CHECK_FALSE(in_enclosing_ball_set(ball, u, 0.8, 4, 0));
    CHECK(enclosing_ball_threshold(ball, u, 0.1, 10.0, 4, 0) ==
          doctest::Approx(1.0).epsilon(1e-6));

    const Polytope cube(unit_cube_vertices());
    const Direction diag = Direction::of(vec3(1.0, 1.0, 1.0));
    const double root3 = std::sqrt(3.0);
    CHECK(in_enclosing_ball_set(cube, diag, root3 / 2 + 1e-6, 3, 0));
    CHECK_FALSE(in_enclosing_ball_set(cube, diag, root3 / 2 - 1e-3, 3, 0));
    CHECK(enclosing_ball_threshold(cube, diag, 0.1, 10.0, 3, 0) ==
          doctest::Approx(root3 / 2).epsilon(1e-6));
    // facet normals expose a facet, not a vertex, so they are never covered
    for (double i : {0.5, 1.0, 10.0, 1000.0})
        CHECK_FALSE(in_enclosing_ball_set(cube, Direction::of(vec3(1.0, 0.0, 0.0)), i, 3, 0));

    // smooth body: finite threshold approaching the largest curvature radius
    // 9 at the tip of the short axis from below as the sampling refines
    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3));
    const double i = enclosing_ball_threshold(e, Direction::of(vec3(1.0, 0.0, 0.0)), 1.0, 20.0, 5, 0);
    CHECK(i > 8.0);
    CHECK(i < 9.0 + 1e-6);
}

TEST_CASE("coverage fractions are monotone in the parameter") {
    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3));

    double prev = 2.0;
    for (double r : {0.2, 0.5, 1.0, 2.0}) {
        const auto report = rolling_ball_report(e, r, 3, 0);
        CHECK(report.fraction_covered <= prev + 1e-12);
        prev = report.fraction_covered;
    }
    CHECK(rolling_ball_report(e, 0.05, 3, 0).fraction_covered == doctest::Approx(1.0));
    CHECK(rolling_ball_report(e, 50.0, 3, 0).fraction_covered == 0.0);

    prev = -1.0;
    for (double i : {0.5, 2.0, 6.0, 20.0}) {
        const auto report = enclosing_ball_report(e, i, 3, 0);
        CHECK(report.fraction_covered >= prev - 1e-12);
        prev = report.fraction_covered;
    }
    CHECK(enclosing_ball_report(e, 20.0, 3, 0).fraction_covered == doctest::Approx(1.0));
    CHECK(enclosing_ball_report(e, 0.2, 3, 0).fraction_covered == 0.0);
}

TEST_CASE("area distortion of the inverse Gauss map") {
    const Ball ball(Vec::Zero(3), 1.0);
    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3));
    for (const auto& s : sample_sphere(3, 1, 0)) {
        const Direction u(normalized(s.u));
        CHECK(tau_jacobian_estimate(ball, u) == doctest::Approx(1.0).epsilon(1e-4));
        const double oracle = ellipsoid_curvature_oracle(e.shape_matrix(), u.coords());
        CHECK(tau_jacobian_estimate(e, u) == doctest::Approx(oracle).epsilon(0.02));
    }
}

TEST_CASE("substitution identities hold on independent meshes") {
    std::vector<BodyPtr> bodies = {
        std::make_shared<Ball>(Vec::Zero(3), 1.5),
        std::make_shared<Ellipsoid>(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3)),
        quartic_body(3, 0.3)};
    const auto fields = seeded_fields(5, 99);
    for (const auto& body : bodies)
        for (double p : {1.0, 2.0}) {
            const auto report = verify_change_of_variable(*body, p, 5, 0, fields);
            CHECK(report.rows.size() == 20);
            CHECK(report.max_rel_gap < 0.01);
        }
}

TEST_CASE("restricted sphere integrals fill in as the radius grows") {
    const Ball ball(Vec::Zero(3), 1.0);
    const auto br = verify_section7_equality(ball, 1.0, 4, 0);
    CHECK(br.monotone);
    CHECK(br.rel_gap < 0.01);
    for (const auto& [i, sum] : br.partial_sums) {
        if (i < 1.0)
            CHECK(sum == 0.0);  // no enclosing ball smaller than the body itself
        else
            CHECK(sum == doctest::Approx(br.sphere_value).epsilon(1e-12));
    }

    const Ellipsoid e(vec3(1.0, 2.0, 3.0), Mat::Identity(3, 3), Vec::Zero(3));
    const auto er = verify_section7_equality(e, 2.0, 4, 0);
    CHECK(er.monotone);
    CHECK(er.rel_gap < 0.01);
    CHECK(er.partial_sums.front().second == 0.0);
    CHECK(er.partial_sums.back().second == doctest::Approx(er.sphere_value).epsilon(1e-9));
    // every threshold is below the largest curvature radius bound of 9
    for (const auto& [i, sum] : er.partial_sums)
        if (i >= 16.0) CHECK(sum == doctest::Approx(er.sphere_value).epsilon(1e-9));
}
