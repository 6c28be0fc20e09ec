#pragma once

#include <utility>

#include "asakit/measures.hpp"

namespace asakit {

/// Positive function sampled on a fixed mesh. Measure atoms (polytope
/// vertices for C_0, facet normals for S_K) carry their own values so the
/// minimizing sequences can treat them separately from the density nodes.
struct DiscreteFunction {
    std::vector<double> values;
    std::vector<double> atom_values;
};

struct OptimizerOptions {
    int max_iterations = 10000;
    double rel_tol = 1e-10;
    double initial_step = 0.1;
};

struct TracePoint {
    int iteration = 0;
    double value = 0.0;
};

struct OptimizeResult {
    double value = 0.0;
    DiscreteFunction minimizer;
    std::vector<TracePoint> trace;  // monotone non-increasing
    bool converged = false;
};

/// Fixed boundary quadrature plus the C_0 atoms living on it; every g in the
/// curvature-measure formulation is a DiscreteFunction against this mesh.
struct BoundaryMesh {
    std::vector<BoundarySample> samples;
    std::vector<Atom> c0_atoms;
};

BoundaryMesh boundary_mesh(const ConvexBody& body, int resolution, std::uint64_t seed,
                           std::uint64_t salt = 1);

/// Fixed sphere quadrature plus the S_K atoms; the domain of h in the
/// Lutwak-style formulation. For polytopes the density is zero and the whole
/// surface area measure sits in the atoms.
struct SphereMesh {
    std::vector<SphereSample> samples;
    std::vector<Atom> sk_atoms;        // (facet normal, facet area)
    std::vector<double> atom_support;  // h_K at each atom normal
};

SphereMesh sphere_mesh(const ConvexBody& body, int resolution, std::uint64_t seed,
                       std::uint64_t salt = 0);

/// Boundary-integral representation: sum over samples with H > 0 of
/// (H / h^{(p-1)n/p})^{p/(n+p)} weight. Exactly 0 for polytopes.
double asa_boundary(const ConvexBody& body, double p, int resolution, std::uint64_t seed);

/// Sphere-integral representation: sum over samples with F > 0 of
/// (F / h^{p-1})^{n/(n+p)} weight.
double asa_sphere(const ConvexBody& body, double p, int resolution, std::uint64_t seed);

/// (int g^{-n} H dH^{n-1})^{p/(n+p)} (int g^p h^{1-p} dH^{n-1})^{n/(n+p)}.
double functional_L1(const ConvexBody& body, const BoundaryMesh& mesh, const DiscreteFunction& g,
                     double p);

/// Same with C_0 (atoms included) in the first factor and C_{n-1} in the
/// second; equals functional_L1 when there are no atoms.
double functional_L2(const ConvexBody& body, const BoundaryMesh& mesh, const DiscreteFunction& g,
                     double p);

/// g*(x) = h^{(p-1)/(n+p)} H^{1/(n+p)}; makes the Hoelder step defining L_1
/// an equality, so L_1(g*) equals the boundary integral on smooth bodies.
DiscreteFunction analytic_minimizer(const ConvexBody& body, const BoundaryMesh& mesh, double p);

/// (i, L_2(h_i)) for i in {1, 2, 4, ...} up to i_max: h_i is i on atoms, the
/// analytic minimizer on {H > 0}, 1/i elsewhere, clamped to [1/i, i].
std::vector<std::pair<double, double>> truncation_sequence(const ConvexBody& body, double p,
                                                           int i_max, int resolution,
                                                           std::uint64_t seed);

/// Numerical infimum of L_2 over positive g (log-space gradient descent with
/// backtracking). Starts at the analytic minimizer on smooth bodies, g = 1 on
/// polytopes. NonConvergence is reported through the converged flag.
OptimizeResult asa_cm_infimum(const ConvexBody& body, double p, int resolution, std::uint64_t seed,
                              const OptimizerOptions& options = {});

/// Numerical infimum of
/// (int h^n dH^{n-1})^{p/(n+p)} (int h^{-p} h_K^{1-p} dS_K)^{n/(n+p)}
/// over positive h on the sphere mesh.
OptimizeResult asa_lutwak_infimum(const ConvexBody& body, double p, int resolution,
                                  std::uint64_t seed, const OptimizerOptions& options = {});

struct AsaReport {
    double p = 0.0;
    int n = 0;
    double value_boundary = 0.0;
    double value_sphere = 0.0;
    double value_lutwak_inf = 0.0;
    double value_cm_inf = 0.0;
    std::vector<TracePoint> optimizer_trace;  // curvature-measure descent
    int resolution = 0;
    std::uint64_t seed = 0;
    double max_pairwise_rel_gap = 0.0;
    bool cm_converged = false;
    bool lutwak_converged = false;
};

AsaReport compute_report(const ConvexBody& body, double p, int resolution, std::uint64_t seed,
                         const OptimizerOptions& options = {});

/// Mesh salts keeping the four representation routes on genuinely different
/// quadratures (the boundary pushforward of the plain sphere mesh would
/// otherwise reproduce the sphere sum term by term).
inline constexpr std::uint64_t kSaltBoundary = 2;
inline constexpr std::uint64_t kSaltCm = 3;
inline constexpr std::uint64_t kSaltLutwak = 4;

}  // namespace asakit
