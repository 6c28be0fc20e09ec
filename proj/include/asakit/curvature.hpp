#pragma once

#include "asakit/body.hpp"

namespace asakit {

/// Second derivative of the 1-homogeneous support function at a unit
/// direction. u is always a null vector of the matrix.
struct SupportHessian {
    Vec u;
    Mat matrix;
    bool analytic = false;
};

SupportHessian support_hessian(const ConvexBody& body, const Direction& u);

/// F_K(u): determinant of the Hessian restricted to u^perp, computed as the
/// product of the deflated eigenvalues. Tiny negative eigenvalues are clamped
/// to zero; strong violations raise DegenerateCurvature.
double curvature_function(const ConvexBody& body, const Direction& u);
double curvature_function(const SupportHessian& hessian);

/// H_K(x) through the reciprocity H_K(x) F_K(nu(x)) = 1.
double gauss_curvature(const ConvexBody& body, const Vec& x);

}  // namespace asakit
