#pragma once

#include <string>

#include "asakit/asa.hpp"

namespace asakit {

enum class Relation { Eq, Le };

struct PropertyResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::Eq;
    double rel_gap_or_slack = 0.0;
    bool pass = false;
    double tolerance = 0.0;
};

PropertyResult check_equal(std::string name, double lhs, double rhs, double tolerance);
PropertyResult check_at_most(std::string name, double lhs, double rhs, double tolerance);

/// Quadrature-vs-closed-form comparisons; algebraically exact identities.
inline constexpr double kQuadratureTol = 0.01;
inline constexpr double kExactTol = 1e-9;

/// Centroid by the divergence theorem:
/// c_i = (1 / ((n+1) V)) int x_i <x, nu> dH^{n-1}.
Vec centroid(const ConvexBody& body, int resolution, std::uint64_t seed);

/// Omega_p(lambda K) = lambda^{n(n-p)/(n+p)} Omega_p(K).
PropertyResult check_homogeneity(const BodyPtr& body, double p, double lambda, int resolution,
                                 std::uint64_t seed);

/// Omega_p(phi K) = |det phi|^{(n-p)/(n+p)} Omega_p(K).
PropertyResult check_gl_covariance(const BodyPtr& body, double p, const Mat& phi, int resolution,
                                   std::uint64_t seed);

/// (1/n) Omega_p(K) <= W(K, h_L o nu_K)^{p/(n+p)} V_p(K, L)^{n/(n+p)},
/// followed by W(K, h_L o nu_K) <= V(L*).
std::vector<PropertyResult> check_mixed_volume_inequality(const ConvexBody& K, const ConvexBody& L,
                                                          double p, int resolution,
                                                          std::uint64_t seed);

/// Omega_p(K) <= n omega_n^{2p/(n+p)} V(K)^{(n-p)/(n+p)} after recentring the
/// centroid to the origin; equality exactly for balls and ellipsoids.
PropertyResult check_isoperimetric(const BodyPtr& body, double p, int resolution,
                                   std::uint64_t seed);

/// Omega_1(K + t) = Omega_1(K); the p = 1 case is the translation-invariant
/// one.
PropertyResult check_translation_invariance(const BodyPtr& body, const Vec& t, int resolution,
                                            std::uint64_t seed);

/// Omega_p of a polytope is exactly zero through the boundary route.
PropertyResult check_polytope_zero(const Polytope& body, double p, int resolution,
                                   std::uint64_t seed);

struct UscRow {
    int vertex_count = 0;
    double hausdorff_proxy = 0.0;  // sup over sphere nodes of h_K - h_P
    double asa_polytope = 0.0;
    double asa_body = 0.0;
};

/// Inscribed-polytope ladder (icosphere vertex hulls, n = 3): the polytopes
/// converge to the body while their affine surface area stays at zero,
/// illustrating upper semicontinuity with a strict gap.
std::vector<UscRow> demo_upper_semicontinuity(const ConvexBody& body, double p,
                                              const std::vector<int>& levels, int resolution,
                                              std::uint64_t seed);

}  // namespace asakit
