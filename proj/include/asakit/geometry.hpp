#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace asakit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Volume omega_n of the n-dimensional unit ball.
double unit_ball_volume(int n);

/// Total (n-1)-measure of S^{n-1}, i.e. n * omega_n.
double sphere_measure(int n);

/// Deterministic pairwise summation; order-stable regardless of thread count.
double pairwise_sum(const std::vector<double>& values);

Vec normalized(const Vec& v);

/// Orthonormal basis of u^perp as the columns of an n x (n-1) matrix.
Mat orthonormal_complement(const Vec& u);

/// Area of the spherical triangle with unit vertices a, b, c (L'Huilier).
double spherical_triangle_area(const Vec& a, const Vec& b, const Vec& c);

/// Area of a convex spherical polygon given its unit vertices in cyclic order.
double spherical_polygon_area(const std::vector<Vec>& verts);

/// Deterministic rotation used to decorrelate quadrature meshes. salt = 0 is
/// the identity; other salts give fixed orthogonal matrices.
Mat mesh_rotation(int n, std::uint64_t salt);

/// Unit vector in S^{n-1}.
class Direction {
  public:
    explicit Direction(Vec v);

    /// Normalizes v (throws on the zero vector).
    static Direction of(const Vec& v);

    const Vec& coords() const { return u_; }
    int dim() const { return static_cast<int>(u_.size()); }

  private:
    Vec u_;
};

}  // namespace asakit
