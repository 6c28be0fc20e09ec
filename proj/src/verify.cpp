#include "asakit/verify.hpp"

#include <algorithm>
#include <cmath>

#include "asakit/errors.hpp"

namespace asakit {

PropertyResult check_equal(std::string name, double lhs, double rhs, double tolerance) {
    PropertyResult r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = Relation::Eq;
    r.tolerance = tolerance;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    r.rel_gap_or_slack = std::abs(lhs - rhs) / scale;
    r.pass = r.rel_gap_or_slack <= tolerance;
    return r;
}

PropertyResult check_at_most(std::string name, double lhs, double rhs, double tolerance) {
    PropertyResult r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = Relation::Le;
    r.tolerance = tolerance;
    r.rel_gap_or_slack = (rhs - lhs) / std::max(std::abs(rhs), 1.0);
    r.pass = lhs <= rhs * (1.0 + tolerance);
    return r;
}

Vec centroid(const ConvexBody& body, int resolution, std::uint64_t seed) {
    const int n = body.dim();
    const auto samples = sample_boundary(body, resolution, seed);
    const double v = volume(body, resolution, seed);
    Vec c = Vec::Zero(n);
    for (int i = 0; i < n; ++i) {
        std::vector<double> terms;
        terms.reserve(samples.size());
        for (const auto& s : samples) terms.push_back(s.x(i) * s.x.dot(s.nu) * s.weight);
        c(i) = pairwise_sum(terms) / ((n + 1.0) * v);
    }
    return c;
}

PropertyResult check_homogeneity(const BodyPtr& body, double p, double lambda, int resolution,
                                 std::uint64_t seed) {
    const int n = body->dim();
    const auto scaled = scale_body(body, lambda);
    const double lhs = asa_boundary(*scaled, p, resolution, seed);
    const double rhs =
        std::pow(lambda, n * (n - p) / (n + p)) * asa_boundary(*body, p, resolution, seed);
    return check_equal("homogeneity", lhs, rhs, kQuadratureTol);
}

PropertyResult check_gl_covariance(const BodyPtr& body, double p, const Mat& phi, int resolution,
                                   std::uint64_t seed) {
    const int n = body->dim();
    const auto mapped = apply_linear(body, phi, Vec::Zero(n));
    const double lhs = asa_boundary(*mapped, p, resolution, seed);
    const double rhs = std::pow(std::abs(phi.determinant()), (n - p) / (n + p)) *
                       asa_boundary(*body, p, resolution, seed);
    return check_equal("gl_covariance", lhs, rhs, kQuadratureTol);
}

std::vector<PropertyResult> check_mixed_volume_inequality(const ConvexBody& K, const ConvexBody& L,
                                                          double p, int resolution,
                                                          std::uint64_t seed) {
    const int n = K.dim();

    // V_p(K, L) = (1/n) int h_L^p h_K^{1-p} dS_K
    double vp = 0.0;
    {
        const auto sk = surface_area_measure(K, resolution, seed);
        std::vector<double> terms;
        for (std::size_t j = 0; j < sk.samples.size(); ++j) {
            const auto& s = sk.samples[j];
            terms.push_back(std::pow(L.support_raw(s.u), p) * std::pow(s.h, 1.0 - p) *
                            sk.density[j] * s.weight);
        }
        for (const auto& a : sk.atoms)
            terms.push_back(std::pow(L.support_raw(a.location), p) *
                            std::pow(K.support_raw(a.location), 1.0 - p) * a.mass);
        vp = pairwise_sum(terms) / n;
    }

    // W(K, g) = (1/n) int g^{-n} H dH^{n-1} with g = h_L o nu_K
    double w = 0.0;
    {
        const auto samples = sample_boundary(K, resolution, seed);
        std::vector<double> terms;
        for (const auto& s : samples) {
            if (!s.in_H_plus) continue;
            terms.push_back(std::pow(L.support_raw(s.nu), -n) * s.H * s.weight);
        }
        w = pairwise_sum(terms) / n;
    }

    const double omega = asa_boundary(K, p, resolution, seed);
    std::vector<PropertyResult> results;
    results.push_back(check_at_most(
        "mixed_volume_inequality", omega / n,
        std::pow(w, p / (n + p)) * std::pow(vp, double(n) / (n + p)), kQuadratureTol));
    results.push_back(check_at_most("w_polar_volume_bound", w,
                                    polar_volume(L, resolution, seed), kQuadratureTol));
    return results;
}

PropertyResult check_isoperimetric(const BodyPtr& body, double p, int resolution,
                                   std::uint64_t seed) {
    const int n = body->dim();
    const Vec c = centroid(*body, resolution, seed);
    const auto centered = translate_body(body, Vec(-c));
    const double lhs = asa_boundary(*centered, p, resolution, seed);
    const double v = volume(*centered, resolution, seed);
    const double rhs = n * std::pow(unit_ball_volume(n), 2.0 * p / (n + p)) *
                       std::pow(v, (n - p) / (n + p));
    return check_at_most("isoperimetric", lhs, rhs, kQuadratureTol);
}

PropertyResult check_translation_invariance(const BodyPtr& body, const Vec& t, int resolution,
                                            std::uint64_t seed) {
    const auto moved = translate_body(body, t);
    const double lhs = asa_boundary(*moved, 1.0, resolution, seed);
    const double rhs = asa_boundary(*body, 1.0, resolution, seed);
    return check_equal("translation_invariance", lhs, rhs, kQuadratureTol);
}

PropertyResult check_polytope_zero(const Polytope& body, double p, int resolution,
                                   std::uint64_t seed) {
    const double lhs = asa_boundary(body, p, resolution, seed);
    return check_equal("polytope_zero", lhs, 0.0, kExactTol);
}

std::vector<UscRow> demo_upper_semicontinuity(const ConvexBody& body, double p,
                                              const std::vector<int>& levels, int resolution,
                                              std::uint64_t seed) {
    if (body.dim() != 3) throw HullUnavailable("inscribed-polytope demo needs n = 3");
    const double asa_body = asa_boundary(body, p, resolution, seed);
    const auto sphere = sample_sphere(3, resolution, seed);
    std::vector<UscRow> rows;
    for (int level : levels) {
        std::vector<Vec> points;
        for (const Vec& u : icosphere_vertices(level))
            points.push_back(inverse_gauss(body, Direction(normalized(u))));
        const Polytope hull(points);
        UscRow row;
        row.vertex_count = static_cast<int>(points.size());
        double gap = 0.0;
        for (const auto& s : sphere)
            gap = std::max(gap, body.support_raw(s.u) - hull.support_raw(s.u));
        row.hausdorff_proxy = gap;
        row.asa_polytope = asa_boundary(hull, p, resolution, seed);
        row.asa_body = asa_body;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace asakit
