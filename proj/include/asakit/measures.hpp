#pragma once

#include <iosfwd>

#include "asakit/sampling.hpp"

namespace asakit {

struct Atom {
    Vec location;  // boundary point (curvature measures) or direction (S_K)
    double mass = 0.0;
};

/// Measure on the boundary, split into a density against dH^{n-1} carried by
/// a fixed sample set plus finitely many atoms.
struct CurvatureMeasure {
    std::vector<BoundarySample> samples;
    std::vector<double> density;
    std::vector<Atom> atoms;

    double total() const;
};

/// Measure on the sphere: density against spherical dH^{n-1} plus atoms at
/// facet normals.
struct SurfaceAreaMeasure {
    std::vector<SphereSample> samples;
    std::vector<double> density;
    std::vector<Atom> atoms;

    double total() const;
};

/// C_0(K, .): density H_K for smooth bodies; one atom per polytope vertex
/// carrying the solid angle of its normal cone.
CurvatureMeasure curvature_measure_c0(const ConvexBody& body, int resolution, std::uint64_t seed,
                                      std::uint64_t salt = 1);

/// C_{n-1}(K, .): the boundary area measure (density 1, no atoms).
CurvatureMeasure curvature_measure_cn1(const ConvexBody& body, int resolution, std::uint64_t seed,
                                       std::uint64_t salt = 1);

/// S_K: density F_K on the sphere for smooth bodies; polytope facet atoms
/// (normal, facet area), merged over coplanar facets.
SurfaceAreaMeasure surface_area_measure(const ConvexBody& body, int resolution, std::uint64_t seed);

/// Spherical measure of the normal cone at a vertex. Exact in n = 2 (exterior
/// angle) and n = 3 (spherical polygon of adjacent facet normals).
double normal_cone_solid_angle(const Polytope& p, int vertex_id);

/// Monte Carlo fallback (required for n >= 4, usable anywhere): fraction of
/// sphere nodes whose argmax vertex is vertex_id.
double normal_cone_solid_angle_mc(const Polytope& p, int vertex_id, int nodes, std::uint64_t seed);

/// V(K*) = (1/n) \int h_K(u)^{-n} dH^{n-1}(u); requires origin interior.
double polar_volume(const ConvexBody& body, int resolution, std::uint64_t seed);

/// V(K); exact for polytopes, sphere quadrature for smooth bodies.
double volume(const ConvexBody& body, int resolution, std::uint64_t seed);

void dump_csv(std::ostream& out, const CurvatureMeasure& m);
void dump_csv(std::ostream& out, const SurfaceAreaMeasure& m);

}  // namespace asakit
