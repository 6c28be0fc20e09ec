#pragma once

#include <stdexcept>
#include <string>

namespace asakit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// u exposes a face of dimension >= 1; the exposed point is not unique.
struct NonRegularNormal : Error {
    using Error::Error;
};

// x has a normal cone of dimension > 1 (polytope vertex or edge point).
struct NonRegularPoint : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

// Finite differences produced an unusable support-function Hessian.
struct HessianUnavailable : Error {
    using Error::Error;
};

// Curvature function non-finite or strongly negative at a node.
struct DegenerateCurvature : Error {
    using Error::Error;
};

// F_K(nu(x)) = 0, so H_K is undefined through reciprocity.
struct ZeroCurvatureFunction : Error {
    using Error::Error;
};

struct NotAVertex : Error {
    using Error::Error;
};

struct OriginNotInterior : Error {
    using Error::Error;
};

// Facet enumeration from a bare vertex list is only available in R^3.
struct HullUnavailable : Error {
    using Error::Error;
};

}  // namespace asakit
