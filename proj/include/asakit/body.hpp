#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "asakit/geometry.hpp"

namespace asakit {

enum class BodyKind { Ball, Ellipsoid, Polytope, SupportOracle, Transformed };

/// A convex body K described through the 1-homogeneous extension of its
/// support function h_K. All evaluation points x are nonzero but need not be
/// unit vectors.
class ConvexBody {
  public:
    virtual ~ConvexBody() = default;

    int dim() const { return dim_; }
    virtual BodyKind kind() const = 0;

    /// True when h_K is twice differentiable everywhere we sample (every
    /// variant except Polytope).
    virtual bool smooth() const = 0;

    /// True when gradients/Hessians come from closed forms rather than finite
    /// differences; controls downstream numerical tolerances.
    virtual bool analytic_derivatives() const = 0;

    virtual double support_raw(const Vec& x) const = 0;
    virtual Vec support_gradient_raw(const Vec& x) const;
    virtual Mat support_hessian_raw(const Vec& x) const;

  protected:
    explicit ConvexBody(int dim);
    int dim_;
};

using BodyPtr = std::shared_ptr<const ConvexBody>;

class Ball final : public ConvexBody {
  public:
    Ball(Vec center, double radius);

    BodyKind kind() const override { return BodyKind::Ball; }
    bool smooth() const override { return true; }
    bool analytic_derivatives() const override { return true; }
    double support_raw(const Vec& x) const override;
    Vec support_gradient_raw(const Vec& x) const override;
    Mat support_hessian_raw(const Vec& x) const override;

    const Vec& center() const { return center_; }
    double radius() const { return radius_; }

  private:
    Vec center_;
    double radius_;
};

class Ellipsoid final : public ConvexBody {
  public:
    /// Semi-axes a_i > 0, orthogonal rotation, center. The body is
    /// center + rotation * diag(a) * B^n.
    Ellipsoid(Vec semi_axes, Mat rotation, Vec center);

    BodyKind kind() const override { return BodyKind::Ellipsoid; }
    bool smooth() const override { return true; }
    bool analytic_derivatives() const override { return true; }
    double support_raw(const Vec& x) const override;
    Vec support_gradient_raw(const Vec& x) const override;
    Mat support_hessian_raw(const Vec& x) const override;

    const Vec& semi_axes() const { return semi_axes_; }
    const Mat& rotation() const { return rotation_; }
    const Vec& center() const { return center_; }
    const Mat& shape_matrix() const { return m_; }  // rot * diag(a^2) * rot^T

  private:
    Vec semi_axes_;
    Mat rotation_;
    Vec center_;
    Mat m_;
};

struct PolytopeFacet {
    std::vector<int> vertices;  // cyclic order for n = 3
    Vec normal;                 // outer unit normal
    double offset = 0.0;        // h_K(normal)
    double area = 0.0;          // (n-1)-measure
};

class Polytope final : public ConvexBody {
  public:
    /// Facets are vertex-index lists. When absent they are enumerated: angular
    /// sort in R^2, gift wrapping in R^3; higher dimensions require facets.
    explicit Polytope(std::vector<Vec> vertices, std::vector<std::vector<int>> facets = {});

    BodyKind kind() const override { return BodyKind::Polytope; }
    bool smooth() const override { return false; }
    bool analytic_derivatives() const override { return true; }
    double support_raw(const Vec& x) const override;
    Vec support_gradient_raw(const Vec& x) const override;

    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<PolytopeFacet>& facets() const { return facets_; }
    const std::vector<int>& facets_at(int vertex) const { return vertex_facets_[vertex]; }
    double surface_area() const;

    /// Index of the vertex exposed by u; throws NonRegularNormal when the top
    /// two support values are within 1e-10.
    int exposed_vertex(const Vec& u) const;

  private:
    void build_facets(std::vector<std::vector<int>> facet_indices);

    std::vector<Vec> vertices_;
    std::vector<PolytopeFacet> facets_;
    std::vector<std::vector<int>> vertex_facets_;
};

class SupportOracle final : public ConvexBody {
  public:
    using Support = std::function<double(const Vec&)>;    // on unit vectors
    using Gradient = std::function<Vec(const Vec&)>;      // of the 1-homogeneous extension, at unit u
    using Hessian = std::function<Mat(const Vec&)>;       // of the 1-homogeneous extension, at unit u

    SupportOracle(int dim, Support h, std::optional<Gradient> grad = std::nullopt,
                  std::optional<Hessian> hess = std::nullopt);

    BodyKind kind() const override { return BodyKind::SupportOracle; }
    bool smooth() const override { return true; }
    bool analytic_derivatives() const override { return grad_.has_value() && hess_.has_value(); }
    double support_raw(const Vec& x) const override;
    Vec support_gradient_raw(const Vec& x) const override;
    Mat support_hessian_raw(const Vec& x) const override;

  private:
    Support h_;
    std::optional<Gradient> grad_;
    std::optional<Hessian> hess_;
};

/// phi K + t with invertible phi: h(x) = h_base(phi^T x) + <t, x>.
class Transformed final : public ConvexBody {
  public:
    Transformed(BodyPtr base, Mat linear, Vec translation);

    BodyKind kind() const override { return BodyKind::Transformed; }
    bool smooth() const override { return base_->smooth(); }
    bool analytic_derivatives() const override { return base_->analytic_derivatives(); }
    double support_raw(const Vec& x) const override;
    Vec support_gradient_raw(const Vec& x) const override;
    Mat support_hessian_raw(const Vec& x) const override;

    const BodyPtr& base() const { return base_; }
    const Mat& linear() const { return linear_; }
    const Vec& translation() const { return translation_; }

  private:
    BodyPtr base_;
    Mat linear_;
    Vec translation_;
};

/// h_K(u) = max over K of <., u>.
double support(const ConvexBody& body, const Direction& u);

/// tau_K(u): the unique boundary point with outer normal u. Polytope facet or
/// edge normals raise NonRegularNormal.
Vec inverse_gauss(const ConvexBody& body, const Direction& u);

/// nu_K(x): the unique outer unit normal at a regular boundary point x.
Direction gauss(const ConvexBody& body, const Vec& x);

/// phi K + t. Polytope vertices are mapped directly; smooth bodies wrap in
/// Transformed. Throws SingularMatrix on det(phi) = 0.
BodyPtr apply_linear(const BodyPtr& body, const Mat& phi, const Vec& t);

BodyPtr scale_body(const BodyPtr& body, double lambda);
BodyPtr translate_body(const BodyPtr& body, const Vec& t);

}  // namespace asakit
