#pragma once

#include <functional>
#include <string>
#include <utility>

#include "asakit/asa.hpp"

namespace asakit {

/// Scalar test field; evaluated at boundary points (role g) or at sphere
/// directions (role h) depending on the identity.
using ScalarField = std::function<double(const Vec&)>;

struct RestrictionSetReport {
    double parameter = 0.0;
    double fraction_covered = 0.0;  // measure fraction of the sample set
    std::vector<bool> membership;
};

/// x is in (dK)_r iff the ball of radius r tangent at x along the outer
/// normal fits inside K, checked by support comparison on sphere nodes.
/// Non-regular boundary points (polytope vertices, edges) are never covered.
bool in_rolling_ball_set(const ConvexBody& body, const Vec& x, double r, int resolution,
                         std::uint64_t seed);

/// u is in A_i iff K fits in the closed ball of radius i tangent from
/// outside at tau_K(u). Non-regular normals are never covered.
bool in_enclosing_ball_set(const ConvexBody& body, const Direction& u, double i, int resolution,
                           std::uint64_t seed);

RestrictionSetReport rolling_ball_report(const ConvexBody& body, double r, int resolution,
                                         std::uint64_t seed);
RestrictionSetReport enclosing_ball_report(const ConvexBody& body, double i, int resolution,
                                           std::uint64_t seed);

/// Largest r in [r_lo, r_hi] with x still covered; bisection, 40 iterations.
double rolling_ball_threshold(const ConvexBody& body, const Vec& x, double r_lo, double r_hi,
                              int resolution, std::uint64_t seed);

/// Smallest i in [i_lo, i_hi] with u covered; bisection, 40 iterations.
double enclosing_ball_threshold(const ConvexBody& body, const Direction& u, double i_lo,
                                double i_hi, int resolution, std::uint64_t seed);

struct IdentityGap {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_gap = 0.0;
};

struct ChangeOfVariableReport {
    std::vector<IdentityGap> rows;
    double max_rel_gap = 0.0;
};

/// Evaluates both sides of the sphere <-> boundary substitution identities on
/// independent meshes, for each test field in both roles:
///   int g^{-n} H dH^{n-1}(x)        = int (g o tau)^{-n} dH^{n-1}(u)
///   int g^p h_K^{1-p} dH^{n-1}(x)   = int (g o tau)^p h_K^{1-p} F dH^{n-1}(u)
///   int h^{-p} h_K^{1-p} F dH^{n-1}(u) = int (h o nu)^{-p} h_K^{1-p} dH^{n-1}(x)
///   int h^n dH^{n-1}(u)             = int (h o nu)^n H dH^{n-1}(x)
ChangeOfVariableReport verify_change_of_variable(const ConvexBody& body, double p, int resolution,
                                                 std::uint64_t seed,
                                                 const std::vector<ScalarField>& fields);

struct Section7Report {
    double sphere_value = 0.0;
    double boundary_value = 0.0;
    double rel_gap = 0.0;
    std::vector<std::pair<double, double>> partial_sums;  // (i, integral over A_i)
    bool monotone = false;
};

/// Sphere vs boundary integral on independent meshes, plus the ladder of
/// partial integrals restricted to A_i for a geometric range of i.
Section7Report verify_section7_equality(const ConvexBody& body, double p, int resolution,
                                        std::uint64_t seed);

/// Finite-difference area distortion of tau_K on a small cap around u;
/// approximates F_K(u) on smooth bodies.
double tau_jacobian_estimate(const ConvexBody& body, const Direction& u, double cap_radius = 1e-3);

}  // namespace asakit
