#include "asakit/body.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

#include "asakit/errors.hpp"

namespace asakit {

namespace {

constexpr double kGradStep = 1e-5;
constexpr double kHessStep = 1e-4;
constexpr double kRegularGap = 1e-10;

Eigen::Vector3d to3(const Vec& v) { return Eigen::Vector3d(v(0), v(1), v(2)); }

}  // namespace

ConvexBody::ConvexBody(int dim) : dim_(dim) {
    if (dim < 2) throw std::invalid_argument("ConvexBody: dimension >= 2 required");
}

Vec ConvexBody::support_gradient_raw(const Vec& x) const {
    const int n = dim_;
    Vec g(n);
    for (int i = 0; i < n; ++i) {
        Vec xp = x, xm = x;
        xp(i) += kGradStep;
        xm(i) -= kGradStep;
        g(i) = (support_raw(xp) - support_raw(xm)) / (2 * kGradStep);
    }
    return g;
}

Mat ConvexBody::support_hessian_raw(const Vec& x) const {
    const int n = dim_;
    Mat h(n, n);
    const double e = kHessStep;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Vec xpp = x, xpm = x, xmp = x, xmm = x;
            xpp(i) += e; xpp(j) += e;
            xpm(i) += e; xpm(j) -= e;
            xmp(i) -= e; xmp(j) += e;
            xmm(i) -= e; xmm(j) -= e;
            h(i, j) = (support_raw(xpp) - support_raw(xpm) - support_raw(xmp) + support_raw(xmm)) /
                      (4 * e * e);
            h(j, i) = h(i, j);
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// Ball

Ball::Ball(Vec center, double radius) : ConvexBody(static_cast<int>(center.size())),
                                        center_(std::move(center)), radius_(radius) {
    if (!(radius > 0)) throw std::invalid_argument("Ball: radius must be positive");
}

double Ball::support_raw(const Vec& x) const { return center_.dot(x) + radius_ * x.norm(); }

Vec Ball::support_gradient_raw(const Vec& x) const { return center_ + radius_ * normalized(x); }

Mat Ball::support_hessian_raw(const Vec& x) const {
    const double norm = x.norm();
    const Vec u = x / norm;
    return (radius_ / norm) * (Mat::Identity(dim_, dim_) - u * u.transpose());
}

// ---------------------------------------------------------------------------
// Ellipsoid

Ellipsoid::Ellipsoid(Vec semi_axes, Mat rotation, Vec center)
    : ConvexBody(static_cast<int>(semi_axes.size())),
      semi_axes_(std::move(semi_axes)), rotation_(std::move(rotation)), center_(std::move(center)) {
    for (int i = 0; i < dim_; ++i)
        if (!(semi_axes_(i) > 0)) throw std::invalid_argument("Ellipsoid: semi-axes must be positive");
    if ((rotation_ * rotation_.transpose() - Mat::Identity(dim_, dim_)).norm() > 1e-9)
        throw std::invalid_argument("Ellipsoid: rotation must be orthogonal");
    m_ = rotation_ * semi_axes_.array().square().matrix().asDiagonal() * rotation_.transpose();
}

double Ellipsoid::support_raw(const Vec& x) const {
    return center_.dot(x) + std::sqrt(x.dot(m_ * x));
}

Vec Ellipsoid::support_gradient_raw(const Vec& x) const {
    const Vec mx = m_ * x;
    return center_ + mx / std::sqrt(x.dot(mx));
}

Mat Ellipsoid::support_hessian_raw(const Vec& x) const {
    const Vec mx = m_ * x;
    const double s = std::sqrt(x.dot(mx));
    return m_ / s - (mx * mx.transpose()) / (s * s * s);
}

// ---------------------------------------------------------------------------
// Polytope

Polytope::Polytope(std::vector<Vec> vertices, std::vector<std::vector<int>> facets)
    : ConvexBody(vertices.empty() ? 0 : static_cast<int>(vertices[0].size())),
      vertices_(std::move(vertices)) {
    if (vertices_.size() < static_cast<std::size_t>(dim_ + 1))
        throw std::invalid_argument("Polytope: needs at least dim+1 vertices");
    Mat span(dim_, static_cast<int>(vertices_.size()) - 1);
    for (std::size_t i = 1; i < vertices_.size(); ++i) span.col(i - 1) = vertices_[i] - vertices_[0];
    if (Eigen::FullPivLU<Mat>(span).rank() < dim_)
        throw std::invalid_argument("Polytope: vertices do not affinely span R^n");
    build_facets(std::move(facets));
}

namespace {

// Gift wrapping for points in convex position in R^3. The wrap runs on a
// deterministically jittered copy so coplanar faces fall apart into
// unambiguous triangles; facet normals, areas and offsets are computed later
// from the unperturbed coordinates.
std::vector<std::array<int, 3>> gift_wrap_3d(const std::vector<Vec>& pts_in) {
    const int n = static_cast<int>(pts_in.size());
    double scale = 0.0;
    for (const Vec& p : pts_in) scale = std::max(scale, p.norm());

    auto mix = [](std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    };
    const double jitter = 1e-9 * std::max(1.0, scale);
    std::vector<Eigen::Vector3d> pts(n);
    for (int i = 0; i < n; ++i) {
        Eigen::Vector3d p = to3(pts_in[i]);
        for (int k = 0; k < 3; ++k) {
            const std::uint64_t bits = mix(3 * std::uint64_t(i) + k + 1);
            p(k) += jitter * (double(bits >> 11) / double(1ULL << 53) - 0.5);
        }
        pts[i] = p;
    }

    auto orient_pt = [&](const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                         const Eigen::Vector3d& c, const Eigen::Vector3d& d) {
        return (b - a).cross(c - a).dot(d - a);
    };
    // Rotate around edge (a, b) starting from a known supporting plane
    // through c0; seeding from a supporting plane keeps every candidate
    // within a half-turn, where the pairwise orientation test is a total
    // order.
    auto pivot_from = [&](int a, int b, Eigen::Vector3d c0) {
        int c = -1;
        for (int i = 0; i < n; ++i) {
            if (i == a || i == b) continue;
            if (orient_pt(pts[a], pts[b], c0, pts[i]) > 0.0) {
                c = i;
                c0 = pts[i];
            }
        }
        if (c < 0) throw Error("gift wrapping found no point beyond a supporting plane");
        return c;
    };

    Eigen::Vector3d interior = Eigen::Vector3d::Zero();
    for (const auto& p : pts) interior += p;
    interior /= n;

    int v0 = 0;
    for (int i = 1; i < n; ++i)
        if (pts[i](0) < pts[v0](0)) v0 = i;
    // First edge: the neighbor of v0 on the 2d hull of the (x, y) projection.
    // All directions from v0 have positive x, so a single pass with the cross
    // product comparison is again a total order.
    int v1 = -1;
    for (int i = 0; i < n; ++i) {
        if (i == v0) continue;
        if (v1 < 0) {
            v1 = i;
            continue;
        }
        const Eigen::Vector3d dc = pts[v1] - pts[v0], di = pts[i] - pts[v0];
        if (dc(0) * di(1) - dc(1) * di(0) < 0.0) v1 = i;
    }
    // First facet: rotate from the vertical supporting plane through the
    // first edge, oriented so the point cloud starts on the positive side.
    Eigen::Vector3d c0 = pts[v0] + Eigen::Vector3d(0.0, 0.0, 1.0);
    if (orient_pt(pts[v0], pts[v1], c0, interior) < 0.0)
        c0 = pts[v0] - Eigen::Vector3d(0.0, 0.0, 1.0);
    const int v2 = pivot_from(v0, v1, c0);

    std::array<int, 3> first = {v0, v1, v2};
    {
        const Eigen::Vector3d nrm =
            (pts[first[1]] - pts[first[0]]).cross(pts[first[2]] - pts[first[0]]);
        if (nrm.dot(interior - pts[first[0]]) > 0) std::swap(first[1], first[2]);
    }

    std::vector<std::array<int, 3>> facets;
    std::set<std::array<int, 3>> seen;
    std::set<std::pair<int, int>> open;
    auto key = [](std::array<int, 3> t) { std::sort(t.begin(), t.end()); return t; };
    auto push = [&](const std::array<int, 3>& t) {
        if (!seen.insert(key(t)).second) return false;
        facets.push_back(t);
        return true;
    };
    push(first);
    std::vector<std::array<int, 3>> stack = {first};
    while (!stack.empty()) {
        const auto f = stack.back();
        stack.pop_back();
        for (int e = 0; e < 3; ++e) {
            // reversed edge, seeded with the current facet's plane
            const int a = f[(e + 1) % 3], b = f[e];
            const int c = pivot_from(a, b, pts[f[(e + 2) % 3]]);
            std::array<int, 3> t = {a, b, c};
            if (push(t)) stack.push_back(t);
        }
        if (facets.size() > 8 * pts.size()) throw Error("gift wrapping failed to close the hull");
    }
    return facets;
}

}  // namespace

void Polytope::build_facets(std::vector<std::vector<int>> facet_indices) {
    Vec interior = Vec::Zero(dim_);
    for (const Vec& v : vertices_) interior += v;
    interior /= static_cast<double>(vertices_.size());

    if (facet_indices.empty()) {
        if (dim_ == 2) {
            std::vector<int> order(vertices_.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                const Vec da = vertices_[a] - interior, db = vertices_[b] - interior;
                return std::atan2(da(1), da(0)) < std::atan2(db(1), db(0));
            });
            for (std::size_t i = 0; i < order.size(); ++i)
                facet_indices.push_back({order[i], order[(i + 1) % order.size()]});
        } else if (dim_ == 3) {
            for (const auto& t : gift_wrap_3d(vertices_))
                facet_indices.push_back({t[0], t[1], t[2]});
        } else {
            throw HullUnavailable("facet enumeration from vertices is implemented for n = 3 only");
        }
    }

    vertex_facets_.assign(vertices_.size(), {});
    for (const auto& idx : facet_indices) {
        PolytopeFacet f;
        f.vertices = idx;
        if (dim_ == 2) {
            if (idx.size() != 2) throw std::invalid_argument("2d facet needs exactly 2 vertices");
            const Vec d = vertices_[idx[1]] - vertices_[idx[0]];
            Vec nrm(2);
            nrm << d(1), -d(0);
            nrm = normalized(nrm);
            if (nrm.dot(vertices_[idx[0]] - interior) < 0) nrm *= -1.0;
            f.normal = nrm;
            f.area = d.norm();
        } else if (dim_ == 3) {
            if (idx.size() < 3) throw std::invalid_argument("3d facet needs at least 3 vertices");
            Eigen::Vector3d nrm = Eigen::Vector3d::Zero();
            const Eigen::Vector3d p0 = to3(vertices_[idx[0]]);
            double area2 = 0.0;
            for (std::size_t i = 1; i + 1 < idx.size(); ++i) {
                const Eigen::Vector3d c =
                    (to3(vertices_[idx[i]]) - p0).cross(to3(vertices_[idx[i + 1]]) - p0);
                nrm += c;
                area2 += c.norm();
            }
            if (nrm.norm() < 1e-14) throw std::invalid_argument("degenerate polytope facet");
            nrm.normalize();
            Vec nv(3);
            nv << nrm(0), nrm(1), nrm(2);
            if (nv.dot(vertices_[idx[0]] - interior) < 0) {
                nv *= -1.0;
                std::reverse(f.vertices.begin(), f.vertices.end());
            }
            f.normal = nv;
            f.area = 0.5 * area2;
        } else {
            throw HullUnavailable("polytopes are supported in dimensions 2 and 3 only");
        }
        f.offset = f.normal.dot(vertices_[f.vertices[0]]);
        const int fid = static_cast<int>(facets_.size());
        for (int v : f.vertices) vertex_facets_[v].push_back(fid);
        facets_.push_back(std::move(f));
    }
}

double Polytope::support_raw(const Vec& x) const {
    double best = vertices_[0].dot(x);
    for (std::size_t i = 1; i < vertices_.size(); ++i) best = std::max(best, vertices_[i].dot(x));
    return best;
}

int Polytope::exposed_vertex(const Vec& u) const {
    int best = 0;
    double h1 = vertices_[0].dot(u), h2 = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const double v = vertices_[i].dot(u);
        if (v > h1) { h2 = h1; h1 = v; best = static_cast<int>(i); }
        else if (v > h2) h2 = v;
    }
    if (h1 - h2 <= kRegularGap)
        throw NonRegularNormal("direction exposes a face of dimension >= 1");
    return best;
}

Vec Polytope::support_gradient_raw(const Vec& x) const { return vertices_[exposed_vertex(x)]; }

double Polytope::surface_area() const {
    std::vector<double> areas;
    areas.reserve(facets_.size());
    for (const auto& f : facets_) areas.push_back(f.area);
    return pairwise_sum(areas);
}

// ---------------------------------------------------------------------------
// SupportOracle

SupportOracle::SupportOracle(int dim, Support h, std::optional<Gradient> grad,
                             std::optional<Hessian> hess)
    : ConvexBody(dim), h_(std::move(h)), grad_(std::move(grad)), hess_(std::move(hess)) {}

double SupportOracle::support_raw(const Vec& x) const {
    const double norm = x.norm();
    return norm * h_(x / norm);
}

Vec SupportOracle::support_gradient_raw(const Vec& x) const {
    if (grad_) return (*grad_)(normalized(x));  // gradient is 0-homogeneous
    return ConvexBody::support_gradient_raw(x);
}

Mat SupportOracle::support_hessian_raw(const Vec& x) const {
    if (hess_) return (*hess_)(normalized(x)) / x.norm();  // Hessian is (-1)-homogeneous
    return ConvexBody::support_hessian_raw(x);
}

// ---------------------------------------------------------------------------
// Transformed

Transformed::Transformed(BodyPtr base, Mat linear, Vec translation)
    : ConvexBody(base->dim()), base_(std::move(base)), linear_(std::move(linear)),
      translation_(std::move(translation)) {
    if (std::abs(linear_.determinant()) < 1e-300)
        throw SingularMatrix("transform matrix is singular");
}

double Transformed::support_raw(const Vec& x) const {
    return base_->support_raw(linear_.transpose() * x) + translation_.dot(x);
}

Vec Transformed::support_gradient_raw(const Vec& x) const {
    return linear_ * base_->support_gradient_raw(linear_.transpose() * x) + translation_;
}

Mat Transformed::support_hessian_raw(const Vec& x) const {
    return linear_ * base_->support_hessian_raw(linear_.transpose() * x) * linear_.transpose();
}

// ---------------------------------------------------------------------------
// Free operations

double support(const ConvexBody& body, const Direction& u) { return body.support_raw(u.coords()); }

Vec inverse_gauss(const ConvexBody& body, const Direction& u) {
    return body.support_gradient_raw(u.coords());
}

namespace {

Direction gauss_by_ascent(const ConvexBody& body, const Vec& x) {
    // Maximize <x,u> - h(u) over the sphere; the maximum (value 0) is attained
    // at the outer normal. Projected gradient ascent with backtracking.
    Vec u = x.norm() > 1e-12 ? Vec(normalized(x)) : Vec(Vec::Unit(body.dim(), 0));
    double step = 1.0;
    const double scale = 1.0 + x.norm();
    auto value = [&](const Vec& v) { return x.dot(v) - body.support_raw(v); };
    double fu = value(u);
    for (int it = 0; it < 500; ++it) {
        const Vec grad = x - body.support_gradient_raw(u);
        const Vec tangential = grad - grad.dot(u) * u;
        if (tangential.norm() <= 1e-13 * scale) break;
        bool moved = false;
        for (int ls = 0; ls < 60; ++ls) {
            const Vec cand = normalized(u + step * tangential);
            const double fc = value(cand);
            if (fc > fu) {
                u = cand;
                fu = fc;
                step *= 1.8;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return Direction(normalized(u));
}

}  // namespace

Direction gauss(const ConvexBody& body, const Vec& x) {
    switch (body.kind()) {
        case BodyKind::Ball: {
            const auto& b = static_cast<const Ball&>(body);
            return Direction::of(x - b.center());
        }
        case BodyKind::Ellipsoid: {
            const auto& e = static_cast<const Ellipsoid&>(body);
            return Direction::of(e.shape_matrix().ldlt().solve(x - e.center()));
        }
        case BodyKind::Polytope: {
            const auto& p = static_cast<const Polytope&>(body);
            double scale = 1.0 + x.norm();
            std::vector<int> hits;
            for (std::size_t i = 0; i < p.facets().size(); ++i) {
                const auto& f = p.facets()[i];
                if (std::abs(f.normal.dot(x) - f.offset) <= 1e-9 * scale)
                    hits.push_back(static_cast<int>(i));
            }
            if (hits.empty()) throw std::invalid_argument("gauss: point is not on the boundary");
            // coplanar facets count once
            const Vec& n0 = p.facets()[hits[0]].normal;
            for (int fid : hits)
                if (p.facets()[fid].normal.dot(n0) < 1.0 - 1e-10)
                    throw NonRegularPoint("normal cone at x has dimension > 1");
            return Direction(n0);
        }
        case BodyKind::Transformed: {
            const auto& t = static_cast<const Transformed&>(body);
            if (t.base()->smooth()) {
                Mat inv = t.linear().inverse();
                const Vec x_base = inv * (x - t.translation());
                const Direction nu_base = gauss(*t.base(), x_base);
                return Direction::of(inv.transpose() * nu_base.coords());
            }
            return gauss_by_ascent(body, x);
        }
        case BodyKind::SupportOracle:
            return gauss_by_ascent(body, x);
    }
    throw Error("unreachable");
}

BodyPtr apply_linear(const BodyPtr& body, const Mat& phi, const Vec& t) {
    if (std::abs(phi.determinant()) < 1e-300) throw SingularMatrix("apply_linear: det(phi) = 0");
    if (body->kind() == BodyKind::Polytope) {
        const auto& p = static_cast<const Polytope&>(*body);
        std::vector<Vec> verts;
        verts.reserve(p.vertices().size());
        for (const Vec& v : p.vertices()) verts.push_back(phi * v + t);
        std::vector<std::vector<int>> facets;
        facets.reserve(p.facets().size());
        for (const auto& f : p.facets()) facets.push_back(f.vertices);
        return std::make_shared<Polytope>(std::move(verts), std::move(facets));
    }
    return std::make_shared<Transformed>(body, phi, t);
}

BodyPtr scale_body(const BodyPtr& body, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("scale_body: lambda must be positive");
    return apply_linear(body, lambda * Mat::Identity(body->dim(), body->dim()),
                        Vec::Zero(body->dim()));
}

BodyPtr translate_body(const BodyPtr& body, const Vec& t) {
    return apply_linear(body, Mat::Identity(body->dim(), body->dim()), t);
}

}  // namespace asakit
