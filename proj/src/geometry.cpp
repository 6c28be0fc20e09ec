#include "asakit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "asakit/errors.hpp"

namespace asakit {

double unit_ball_volume(int n) {
    if (n < 1) throw std::invalid_argument("unit_ball_volume: n >= 1 required");
    return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

double sphere_measure(int n) { return n * unit_ball_volume(n); }

namespace {

double pairwise_sum_range(const double* v, std::size_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i) s += v[i];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum_range(v, half) + pairwise_sum_range(v + half, count - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    return pairwise_sum_range(values.data(), values.size());
}

Vec normalized(const Vec& v) {
    const double norm = v.norm();
    if (!(norm > 0.0)) throw std::invalid_argument("cannot normalize the zero vector");
    return v / norm;
}

Mat orthonormal_complement(const Vec& u) {
    const int n = static_cast<int>(u.size());
    Eigen::HouseholderQR<Mat> qr(u);
    Mat q = qr.householderQ();
    return q.rightCols(n - 1);
}

double spherical_triangle_area(const Vec& a, const Vec& b, const Vec& c) {
    auto side = [](const Vec& x, const Vec& y) {
        return std::acos(std::clamp(x.dot(y), -1.0, 1.0));
    };
    const double sa = side(b, c), sb = side(a, c), sc = side(a, b);
    const double s = 0.5 * (sa + sb + sc);
    const double t = std::tan(s / 2) * std::max(std::tan((s - sa) / 2), 0.0) *
                     std::max(std::tan((s - sb) / 2), 0.0) * std::max(std::tan((s - sc) / 2), 0.0);
    return 4.0 * std::atan(std::sqrt(std::max(t, 0.0)));
}

double spherical_polygon_area(const std::vector<Vec>& verts) {
    if (verts.size() < 3) return 0.0;
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < verts.size(); ++i)
        total += spherical_triangle_area(verts[0], verts[i], verts[i + 1]);
    return total;
}

Mat mesh_rotation(int n, std::uint64_t salt) {
    if (salt == 0) return Mat::Identity(n, n);
    std::mt19937_64 rng(salt * 0x9E3779B97F4A7C15ULL + 0x42ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i)
        if (r(i, i) < 0) q.col(i) *= -1.0;
    return q;
}

Direction::Direction(Vec v) : u_(std::move(v)) {
    if (u_.size() < 2) throw std::invalid_argument("Direction: dimension >= 2 required");
    if (std::abs(u_.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("Direction: vector is not unit length");
}

Direction Direction::of(const Vec& v) { return Direction(normalized(v)); }

}  // namespace asakit
