#include "asakit/coarea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "asakit/errors.hpp"

namespace asakit {

namespace {

constexpr double kContainTol = 1e-9;
constexpr int kBisectionIterations = 40;

std::vector<Vec> hull_points(const ConvexBody& body, int resolution, std::uint64_t seed) {
    if (body.kind() == BodyKind::Polytope)
        return static_cast<const Polytope&>(body).vertices();
    std::vector<Vec> points;
    const auto sphere = sample_sphere(body.dim(), resolution, seed);
    points.reserve(sphere.size());
    for (const auto& s : sphere) points.push_back(inverse_gauss(body, Direction(normalized(s.u))));
    return points;
}

bool enclosed_by(const std::vector<Vec>& points, const Vec& center, double radius) {
    for (const auto& y : points)
        if ((y - center).norm() > radius + kContainTol) return false;
    return true;
}

}  // namespace

bool in_rolling_ball_set(const ConvexBody& body, const Vec& x, double r, int resolution,
                         std::uint64_t seed) {
    Vec a;
    try {
        a = gauss(body, x).coords();
    } catch (const NonRegularPoint&) {
        return false;
    }
    const Vec center = x - r * a;
    const auto sphere = sample_sphere(body.dim(), resolution, seed);
    for (const auto& s : sphere)
        if (center.dot(s.u) + r > body.support_raw(s.u) + kContainTol) return false;
    return true;
}

bool in_enclosing_ball_set(const ConvexBody& body, const Direction& u, double i, int resolution,
                           std::uint64_t seed) {
    Vec x;
    try {
        if (body.kind() == BodyKind::Polytope) {
            const auto& poly = static_cast<const Polytope&>(body);
            x = poly.vertices()[poly.exposed_vertex(u.coords())];
        } else {
            x = inverse_gauss(body, u);
        }
    } catch (const NonRegularNormal&) {
        return false;
    }
    const Vec center = x - i * u.coords();
    return enclosed_by(hull_points(body, resolution, seed), center, i);
}

RestrictionSetReport rolling_ball_report(const ConvexBody& body, double r, int resolution,
                                         std::uint64_t seed) {
    RestrictionSetReport report;
    report.parameter = r;
    const auto samples = sample_boundary(body, resolution, seed);
    std::vector<double> covered;
    report.membership.reserve(samples.size());
    for (const auto& s : samples) {
        const bool in = in_rolling_ball_set(body, s.x, r, resolution, seed);
        report.membership.push_back(in);
        if (in) covered.push_back(s.weight);
    }
    report.fraction_covered = pairwise_sum(covered) / boundary_weight_total(samples);
    return report;
}

RestrictionSetReport enclosing_ball_report(const ConvexBody& body, double i, int resolution,
                                           std::uint64_t seed) {
    RestrictionSetReport report;
    report.parameter = i;
    const auto sphere = sample_sphere(body.dim(), resolution, seed);
    const auto points = hull_points(body, resolution, seed);
    std::vector<double> covered;
    report.membership.reserve(sphere.size());
    for (const auto& s : sphere) {
        const Direction u(normalized(s.u));
        bool in = false;
        try {
            Vec x;
            if (body.kind() == BodyKind::Polytope) {
                const auto& poly = static_cast<const Polytope&>(body);
                x = poly.vertices()[poly.exposed_vertex(u.coords())];
            } else {
                x = inverse_gauss(body, u);
            }
            in = enclosed_by(points, x - i * u.coords(), i);
        } catch (const NonRegularNormal&) {
        }
        report.membership.push_back(in);
        if (in) covered.push_back(s.weight);
    }
    report.fraction_covered = pairwise_sum(covered) / sphere_weight_total(sphere);
    return report;
}

double rolling_ball_threshold(const ConvexBody& body, const Vec& x, double r_lo, double r_hi,
                              int resolution, std::uint64_t seed) {
    double lo = r_lo, hi = r_hi;
    for (int k = 0; k < kBisectionIterations; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (in_rolling_ball_set(body, x, mid, resolution, seed))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double enclosing_ball_threshold(const ConvexBody& body, const Direction& u, double i_lo,
                                double i_hi, int resolution, std::uint64_t seed) {
    double lo = i_lo, hi = i_hi;
    for (int k = 0; k < kBisectionIterations; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (in_enclosing_ball_set(body, u, mid, resolution, seed))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double rel_gap(double l, double r) {
    const double d = std::abs(l - r);
    if (d == 0.0) return 0.0;
    return d / std::max(std::abs(l), std::abs(r));
}

}  // namespace

ChangeOfVariableReport verify_change_of_variable(const ConvexBody& body, double p, int resolution,
                                                 std::uint64_t seed,
                                                 const std::vector<ScalarField>& fields) {
    const int n = body.dim();
    const auto boundary = sample_boundary(body, resolution, seed, kSaltBoundary);
    auto sphere = sample_sphere(n, resolution, seed);
    annotate_sphere(body, sphere);
    std::vector<Vec> tau;
    tau.reserve(sphere.size());
    for (const auto& s : sphere) tau.push_back(inverse_gauss(body, Direction(normalized(s.u))));

    ChangeOfVariableReport report;
    auto add = [&](std::string name, double lhs, double rhs) {
        IdentityGap row{std::move(name), lhs, rhs, rel_gap(lhs, rhs)};
        report.max_rel_gap = std::max(report.max_rel_gap, row.rel_gap);
        report.rows.push_back(std::move(row));
    };

    for (std::size_t f = 0; f < fields.size(); ++f) {
        const auto& field = fields[f];
        const std::string tag = "[" + std::to_string(f) + "]";
        std::vector<double> t1l, t1r, t2l, t2r, t3l, t3r, t4l, t4r;
        for (const auto& s : boundary) {
            const double g = field(s.x);
            const double h = field(s.nu);
            const double hp = std::pow(s.h_at_nu, 1.0 - p);
            if (s.in_H_plus) {
                t1l.push_back(std::pow(g, -n) * s.H * s.weight);
                t4r.push_back(std::pow(h, n) * s.H * s.weight);
            }
            t2l.push_back(std::pow(g, p) * hp * s.weight);
            t3r.push_back(std::pow(h, -p) * hp * s.weight);
        }
        for (std::size_t j = 0; j < sphere.size(); ++j) {
            const auto& s = sphere[j];
            const double g = field(tau[j]);
            const double h = field(s.u);
            const double hp = std::pow(s.h, 1.0 - p);
            if (s.in_F_plus) {
                t1r.push_back(std::pow(g, -n) * s.weight);
                t4l.push_back(std::pow(h, n) * s.weight);
            }
            t2r.push_back(std::pow(g, p) * hp * s.F * s.weight);
            t3l.push_back(std::pow(h, -p) * hp * s.F * s.weight);
        }
        add("g_curvature" + tag, pairwise_sum(t1l), pairwise_sum(t1r));
        add("g_area" + tag, pairwise_sum(t2l), pairwise_sum(t2r));
        add("h_surface_area_measure" + tag, pairwise_sum(t3l), pairwise_sum(t3r));
        add("h_volume" + tag, pairwise_sum(t4l), pairwise_sum(t4r));
    }
    return report;
}

Section7Report verify_section7_equality(const ConvexBody& body, double p, int resolution,
                                        std::uint64_t seed) {
    const int n = body.dim();
    Section7Report report;
    report.sphere_value = asa_sphere(body, p, resolution, seed);
    report.boundary_value = asa_boundary(body, p, resolution, seed);
    report.rel_gap = rel_gap(report.sphere_value, report.boundary_value);

    auto sphere = sample_sphere(n, resolution, seed);
    annotate_sphere(body, sphere);
    const auto points = hull_points(body, resolution, seed);

    // Smallest admissible radius per node: the enclosing condition
    // |y - (x - i u)| <= i reduces to i >= |y - x|^2 / (2 <x - y, u>).
    std::vector<double> threshold(sphere.size(), std::numeric_limits<double>::infinity());
    std::vector<double> integrand(sphere.size(), 0.0);
    for (std::size_t j = 0; j < sphere.size(); ++j) {
        const auto& s = sphere[j];
        if (!s.in_F_plus) continue;
        integrand[j] = std::pow(s.F * std::pow(s.h, 1.0 - p), double(n) / (n + p)) * s.weight;
        const Vec x = inverse_gauss(body, Direction(normalized(s.u)));
        double worst = 0.0;
        bool regular = true;
        for (const auto& y : points) {
            const double num = (y - x).squaredNorm();
            if (num == 0.0) continue;
            const double den = 2.0 * (x - y).dot(s.u);
            if (den <= 0.0) {
                regular = false;
                break;
            }
            worst = std::max(worst, num / den);
        }
        if (regular) threshold[j] = worst;
    }

    const double ladder[] = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
    report.monotone = true;
    double prev = -1.0;
    for (double i : ladder) {
        std::vector<double> terms;
        for (std::size_t j = 0; j < sphere.size(); ++j)
            if (threshold[j] <= i + kContainTol) terms.push_back(integrand[j]);
        const double sum = pairwise_sum(terms);
        if (sum < prev - 1e-12) report.monotone = false;
        prev = sum;
        report.partial_sums.emplace_back(i, sum);
    }
    return report;
}

double tau_jacobian_estimate(const ConvexBody& body, const Direction& u, double cap_radius) {
    const int n = body.dim();
    const Mat frame = orthonormal_complement(u.coords());
    Mat jac(n - 1, n - 1);
    for (int k = 0; k < n - 1; ++k) {
        const Vec up = normalized(u.coords() + cap_radius * frame.col(k));
        const Vec um = normalized(u.coords() - cap_radius * frame.col(k));
        const Vec diff = inverse_gauss(body, Direction(up)) - inverse_gauss(body, Direction(um));
        jac.col(k) = frame.transpose() * diff / (2.0 * std::atan(cap_radius));
    }
    return std::abs(jac.determinant());
}

}  // namespace asakit
