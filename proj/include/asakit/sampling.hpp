#pragma once

#include <cstdint>
#include <vector>

#include "asakit/body.hpp"

namespace asakit {

struct SphereSample {
    Vec u;
    double weight = 0.0;  // against dH^{n-1} on S^{n-1}
    double h = 0.0;       // h_K(u), filled by annotate_sphere
    double F = 0.0;       // F_K(u), filled by annotate_sphere
    bool in_F_plus = false;
};

struct BoundarySample {
    Vec x;
    Vec nu;
    double weight = 0.0;  // against dH^{n-1} on the boundary
    double H = 0.0;       // generalized Gauss curvature
    double h_at_nu = 0.0;
    bool in_H_plus = false;
};

/// Deterministic sphere quadrature with weights normalized to n * omega_n.
/// resolution means: node count (n = 2), icosahedral subdivision level
/// (n = 3), Monte Carlo node count (n >= 4).
std::vector<SphereSample> sample_sphere(int n, int resolution, std::uint64_t seed);

/// Same node layout rotated by mesh_rotation(n, salt); used to build
/// quadratures that are independent of the plain sphere mesh.
std::vector<SphereSample> sample_sphere_rotated(int n, int resolution, std::uint64_t seed,
                                                std::uint64_t salt);

/// Fills h and F on an existing node set (smooth bodies only).
void annotate_sphere(const ConvexBody& body, std::vector<SphereSample>& samples);

/// Boundary quadrature. Smooth bodies: pushforward of a rotated sphere mesh
/// through tau_K with weight w * F_K(u). Polytopes: per-facet planar
/// quadrature with exact total facet area and H = 0.
std::vector<BoundarySample> sample_boundary(const ConvexBody& body, int resolution,
                                            std::uint64_t seed, std::uint64_t salt = 1);

/// Vertices of the level-times-subdivided icosahedron (12, 42, 162, ...).
std::vector<Vec> icosphere_vertices(int level);

/// Effective node-count style default per dimension (1024 / level 5 / 20000).
int default_resolution(int n);

double sphere_weight_total(const std::vector<SphereSample>& samples);
double boundary_weight_total(const std::vector<BoundarySample>& samples);

}  // namespace asakit
