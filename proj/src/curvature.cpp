#include "asakit/curvature.hpp"

#include <cmath>

#include "asakit/errors.hpp"

namespace asakit {

SupportHessian support_hessian(const ConvexBody& body, const Direction& u) {
    if (!body.smooth())
        throw HessianUnavailable("support Hessian requested on a non-smooth body");
    SupportHessian result;
    result.u = u.coords();
    result.analytic = body.analytic_derivatives();
    Mat h = body.support_hessian_raw(u.coords());
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (!std::isfinite(scale) || asym > 1e-4 * scale)
        throw HessianUnavailable("finite-difference Hessian is not symmetric");
    result.matrix = 0.5 * (h + h.transpose());
    return result;
}

double curvature_function(const SupportHessian& hessian) {
    const int n = static_cast<int>(hessian.u.size());
    const Mat basis = orthonormal_complement(hessian.u);
    const Mat restricted = basis.transpose() * hessian.matrix * basis;
    Eigen::SelfAdjointEigenSolver<Mat> eig(restricted);
    const double scale = std::max(1.0, hessian.matrix.cwiseAbs().maxCoeff());
    // Convexity means PSD; the clamp absorbs rounding (analytic) or
    // finite-difference noise, anything worse is a broken oracle.
    const double clamp = hessian.analytic ? 1e-10 * scale : 1e-6 * scale;
    double f = 1.0;
    for (int i = 0; i < n - 1; ++i) {
        double lambda = eig.eigenvalues()(i);
        if (lambda < -clamp)
            throw DegenerateCurvature("support Hessian has a negative eigenvalue on u^perp");
        f *= std::max(lambda, 0.0);
    }
    if (!std::isfinite(f)) throw DegenerateCurvature("curvature function is non-finite");
    return f;
}

double curvature_function(const ConvexBody& body, const Direction& u) {
    return curvature_function(support_hessian(body, u));
}

double gauss_curvature(const ConvexBody& body, const Vec& x) {
    if (body.kind() == BodyKind::Ball) {
        const auto& b = static_cast<const Ball&>(body);
        return std::pow(b.radius(), -(body.dim() - 1));
    }
    const Direction nu = gauss(body, x);
    const double f = curvature_function(body, nu);
    if (!(f > 0.0)) throw ZeroCurvatureFunction("F_K(nu(x)) = 0");
    return 1.0 / f;
}

}  // namespace asakit
