#include "asakit/sampling.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "asakit/curvature.hpp"
#include "asakit/errors.hpp"

namespace asakit {

namespace {

using Tri = std::array<Eigen::Vector3d, 3>;

std::vector<Tri> icosahedron_faces() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Eigen::Vector3d> v = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    for (auto& p : v) p.normalize();
    const int f[20][3] = {{0, 11, 5},  {0, 5, 1},   {0, 1, 7},   {0, 7, 10},  {0, 10, 11},
                          {1, 5, 9},   {5, 11, 4},  {11, 10, 2}, {10, 7, 6},  {7, 1, 8},
                          {3, 9, 4},   {3, 4, 2},   {3, 2, 6},   {3, 6, 8},   {3, 8, 9},
                          {4, 9, 5},   {2, 4, 11},  {6, 2, 10},  {8, 6, 7},   {9, 8, 1}};
    std::vector<Tri> faces;
    faces.reserve(20);
    for (const auto& idx : f) faces.push_back({v[idx[0]], v[idx[1]], v[idx[2]]});
    return faces;
}

std::vector<Tri> subdivide(const std::vector<Tri>& faces) {
    std::vector<Tri> out;
    out.reserve(4 * faces.size());
    for (const auto& t : faces) {
        const Eigen::Vector3d ab = (t[0] + t[1]).normalized();
        const Eigen::Vector3d bc = (t[1] + t[2]).normalized();
        const Eigen::Vector3d ca = (t[2] + t[0]).normalized();
        out.push_back({t[0], ab, ca});
        out.push_back({t[1], bc, ab});
        out.push_back({t[2], ca, bc});
        out.push_back({ab, bc, ca});
    }
    return out;
}

Vec from3(const Eigen::Vector3d& v) {
    Vec out(3);
    out << v(0), v(1), v(2);
    return out;
}

void normalize_weights(std::vector<SphereSample>& samples, double target) {
    std::vector<double> w;
    w.reserve(samples.size());
    for (const auto& s : samples) w.push_back(s.weight);
    const double total = pairwise_sum(w);
    const double factor = target / total;
    for (auto& s : samples) s.weight *= factor;
}

}  // namespace

std::vector<SphereSample> sample_sphere(int n, int resolution, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_sphere: n >= 2 required");
    if (resolution < 1) throw std::invalid_argument("sample_sphere: resolution >= 1 required");
    std::vector<SphereSample> samples;
    if (n == 2) {
        const int m = resolution;
        samples.resize(m);
        for (int k = 0; k < m; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / m;
            Vec u(2);
            u << std::cos(theta), std::sin(theta);
            samples[k].u = u;
            samples[k].weight = 2.0 * std::numbers::pi / m;
        }
    } else if (n == 3) {
        auto faces = icosahedron_faces();
        for (int level = 0; level < resolution; ++level) faces = subdivide(faces);
        samples.reserve(faces.size());
        for (const auto& t : faces) {
            SphereSample s;
            s.u = from3((t[0] + t[1] + t[2]).normalized());
            s.weight = spherical_triangle_area(from3(t[0]), from3(t[1]), from3(t[2]));
            samples.push_back(std::move(s));
        }
        normalize_weights(samples, sphere_measure(3));
    } else {
        const int m = resolution;
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        samples.resize(m);
        const double w = sphere_measure(n) / m;
        for (int k = 0; k < m; ++k) {
            Vec u(n);
            do {
                for (int i = 0; i < n; ++i) u(i) = gauss(rng);
            } while (u.norm() < 1e-12);
            samples[k].u = normalized(u);
            samples[k].weight = w;
        }
    }
    return samples;
}

std::vector<SphereSample> sample_sphere_rotated(int n, int resolution, std::uint64_t seed,
                                                std::uint64_t salt) {
    auto samples = sample_sphere(n, resolution, seed ^ (salt * 0x9E3779B97F4A7C15ULL));
    if (salt != 0 && n <= 3) {
        const Mat q = mesh_rotation(n, salt);
        for (auto& s : samples) s.u = q * s.u;
    }
    return samples;
}

void annotate_sphere(const ConvexBody& body, std::vector<SphereSample>& samples) {
    for (auto& s : samples) {
        const Direction u(s.u);
        s.h = support(body, u);
        s.F = curvature_function(body, u);
        s.in_F_plus = s.F > 0.0;
    }
}

namespace {

std::vector<BoundarySample> sample_polytope_boundary(const Polytope& p, int resolution) {
    std::vector<BoundarySample> samples;
    if (p.dim() == 2) {
        const int per_edge = std::max(2, resolution / static_cast<int>(p.facets().size()));
        for (const auto& f : p.facets()) {
            const Vec a = p.vertices()[f.vertices[0]];
            const Vec b = p.vertices()[f.vertices[1]];
            for (int k = 0; k < per_edge; ++k) {
                BoundarySample s;
                const double t = (k + 0.5) / per_edge;
                s.x = (1 - t) * a + t * b;
                s.nu = f.normal;
                s.weight = f.area / per_edge;
                s.h_at_nu = f.offset;
                samples.push_back(std::move(s));
            }
        }
    } else if (p.dim() == 3) {
        const int k = 1 << std::clamp(resolution, 1, 5);
        for (const auto& f : p.facets()) {
            const Vec& p0 = p.vertices()[f.vertices[0]];
            for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
                const Vec& p1 = p.vertices()[f.vertices[i]];
                const Vec& p2 = p.vertices()[f.vertices[i + 1]];
                const Eigen::Vector3d d1(p1(0) - p0(0), p1(1) - p0(1), p1(2) - p0(2));
                const Eigen::Vector3d d2(p2(0) - p0(0), p2(1) - p0(1), p2(2) - p0(2));
                const double tri_area = 0.5 * d1.cross(d2).norm();
                const double w = tri_area / (k * k);
                // barycentric grid: k^2 congruent sub-triangles, centroid nodes
                for (int row = 0; row < k; ++row) {
                    for (int col = 0; col < 2 * (k - row) - 1; ++col) {
                        const bool up = col % 2 == 0;
                        const double b1 = (col / 2 + (up ? 1.0 / 3.0 : 2.0 / 3.0)) / k;
                        const double b2 = (row + (up ? 1.0 / 3.0 : 2.0 / 3.0)) / k;
                        BoundarySample s;
                        s.x = p0 + b1 * (p1 - p0) + b2 * (p2 - p0);
                        s.nu = f.normal;
                        s.weight = w;
                        s.h_at_nu = f.offset;
                        samples.push_back(std::move(s));
                    }
                }
            }
        }
    } else {
        throw HullUnavailable("polytope boundary sampling is supported in dimensions 2 and 3");
    }
    return samples;
}

}  // namespace

std::vector<BoundarySample> sample_boundary(const ConvexBody& body, int resolution,
                                            std::uint64_t seed, std::uint64_t salt) {
    if (body.kind() == BodyKind::Polytope)
        return sample_polytope_boundary(static_cast<const Polytope&>(body), resolution);

    auto sphere = sample_sphere_rotated(body.dim(), resolution, seed, salt);
    std::vector<BoundarySample> samples;
    samples.reserve(sphere.size());
    for (const auto& node : sphere) {
        const Direction u(normalized(node.u));
        const double f = curvature_function(body, u);
        if (!std::isfinite(f)) throw DegenerateCurvature("F_K non-finite at a quadrature node");
        BoundarySample s;
        s.x = inverse_gauss(body, u);
        s.nu = u.coords();
        s.h_at_nu = support(body, u);
        s.weight = node.weight * f;
        s.in_H_plus = f > 0.0;
        s.H = s.in_H_plus ? 1.0 / f : 0.0;
        samples.push_back(std::move(s));
    }
    return samples;
}

std::vector<Vec> icosphere_vertices(int level) {
    auto faces = icosahedron_faces();
    for (int l = 0; l < level; ++l) faces = subdivide(faces);
    std::map<std::array<long long, 3>, Vec> unique;
    for (const auto& t : faces) {
        for (const auto& v : t) {
            std::array<long long, 3> key = {static_cast<long long>(std::llround(v(0) * 1e12)),
                                            static_cast<long long>(std::llround(v(1) * 1e12)),
                                            static_cast<long long>(std::llround(v(2) * 1e12))};
            unique.emplace(key, from3(v));
        }
    }
    std::vector<Vec> out;
    out.reserve(unique.size());
    for (const auto& [key, v] : unique) out.push_back(v);
    return out;
}

int default_resolution(int n) {
    if (n == 2) return 1024;
    if (n == 3) return 5;
    return 20000;
}

double sphere_weight_total(const std::vector<SphereSample>& samples) {
    std::vector<double> w;
    w.reserve(samples.size());
    for (const auto& s : samples) w.push_back(s.weight);
    return pairwise_sum(w);
}

double boundary_weight_total(const std::vector<BoundarySample>& samples) {
    std::vector<double> w;
    w.reserve(samples.size());
    for (const auto& s : samples) w.push_back(s.weight);
    return pairwise_sum(w);
}

}  // namespace asakit
