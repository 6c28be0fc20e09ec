#include "asakit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "asakit/curvature.hpp"
#include "asakit/errors.hpp"

namespace asakit {

namespace {

double measure_total(const std::vector<double>& density, const auto& samples,
                     const std::vector<Atom>& atoms) {
    std::vector<double> terms;
    terms.reserve(density.size() + atoms.size());
    for (std::size_t i = 0; i < density.size(); ++i) terms.push_back(density[i] * samples[i].weight);
    for (const auto& a : atoms) terms.push_back(a.mass);
    return pairwise_sum(terms);
}

}  // namespace

double CurvatureMeasure::total() const { return measure_total(density, samples, atoms); }
double SurfaceAreaMeasure::total() const { return measure_total(density, samples, atoms); }

CurvatureMeasure curvature_measure_c0(const ConvexBody& body, int resolution, std::uint64_t seed,
                                      std::uint64_t salt) {
    CurvatureMeasure m;
    m.samples = sample_boundary(body, resolution, seed, salt);
    m.density.reserve(m.samples.size());
    if (body.kind() == BodyKind::Polytope) {
        const auto& p = static_cast<const Polytope&>(body);
        for (std::size_t i = 0; i < m.samples.size(); ++i) m.density.push_back(0.0);
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
            const double mass = body.dim() <= 3
                                    ? normal_cone_solid_angle(p, static_cast<int>(v))
                                    : normal_cone_solid_angle_mc(p, static_cast<int>(v),
                                                                 default_resolution(body.dim()), seed);
            m.atoms.push_back({p.vertices()[v], mass});
        }
    } else {
        for (const auto& s : m.samples) m.density.push_back(s.H);
    }
    return m;
}

CurvatureMeasure curvature_measure_cn1(const ConvexBody& body, int resolution, std::uint64_t seed,
                                       std::uint64_t salt) {
    CurvatureMeasure m;
    m.samples = sample_boundary(body, resolution, seed, salt);
    m.density.assign(m.samples.size(), 1.0);
    return m;
}

SurfaceAreaMeasure surface_area_measure(const ConvexBody& body, int resolution,
                                        std::uint64_t seed) {
    SurfaceAreaMeasure m;
    if (body.kind() == BodyKind::Polytope) {
        const auto& p = static_cast<const Polytope&>(body);
        for (const auto& f : p.facets()) {
            bool merged = false;
            for (auto& a : m.atoms) {
                if (a.location.dot(f.normal) > 1.0 - 1e-10) {
                    a.mass += f.area;
                    merged = true;
                    break;
                }
            }
            if (!merged) m.atoms.push_back({f.normal, f.area});
        }
    } else {
        m.samples = sample_sphere(body.dim(), resolution, seed);
        annotate_sphere(body, m.samples);
        m.density.reserve(m.samples.size());
        for (const auto& s : m.samples) m.density.push_back(s.F);
    }
    return m;
}

double normal_cone_solid_angle(const Polytope& p, int vertex_id) {
    if (vertex_id < 0 || vertex_id >= static_cast<int>(p.vertices().size()))
        throw NotAVertex("vertex index out of range");
    const auto& facet_ids = p.facets_at(vertex_id);
    if (p.dim() == 2) {
        if (facet_ids.size() != 2) throw NotAVertex("vertex is not extreme");
        const Vec& n1 = p.facets()[facet_ids[0]].normal;
        const Vec& n2 = p.facets()[facet_ids[1]].normal;
        return std::acos(std::clamp(n1.dot(n2), -1.0, 1.0));
    }
    if (p.dim() != 3) throw HullUnavailable("exact solid angles are available for n in {2,3}");

    // Distinct adjacent facet normals are the vertices of the (convex)
    // spherical polygon cut by the normal cone.
    std::vector<Vec> normals;
    for (int fid : facet_ids) {
        const Vec& n = p.facets()[fid].normal;
        bool dup = false;
        for (const Vec& m : normals)
            if (m.dot(n) > 1.0 - 1e-10) { dup = true; break; }
        if (!dup) normals.push_back(n);
    }
    if (normals.size() < 3) throw NotAVertex("vertex is not extreme");

    Vec axis = Vec::Zero(3);
    for (const Vec& n : normals) axis += n;
    axis = normalized(axis);
    const Mat frame = orthonormal_complement(axis);
    std::sort(normals.begin(), normals.end(), [&](const Vec& a, const Vec& b) {
        return std::atan2(frame.col(1).dot(a), frame.col(0).dot(a)) <
               std::atan2(frame.col(1).dot(b), frame.col(0).dot(b));
    });
    return spherical_polygon_area(normals);
}

double normal_cone_solid_angle_mc(const Polytope& p, int vertex_id, int nodes, std::uint64_t seed) {
    if (vertex_id < 0 || vertex_id >= static_cast<int>(p.vertices().size()))
        throw NotAVertex("vertex index out of range");
    // n = 2, 3 keep their deterministic node layouts; higher dimensions use
    // the seeded Monte Carlo node set. Equal or not, weights sum to n*omega_n.
    const auto sphere = sample_sphere(p.dim(), nodes, seed);
    std::vector<double> hits;
    for (const auto& s : sphere) {
        int best = 0;
        double top = p.vertices()[0].dot(s.u);
        for (std::size_t i = 1; i < p.vertices().size(); ++i) {
            const double v = p.vertices()[i].dot(s.u);
            if (v > top) { top = v; best = static_cast<int>(i); }
        }
        if (best == vertex_id) hits.push_back(s.weight);
    }
    return pairwise_sum(hits);
}

double polar_volume(const ConvexBody& body, int resolution, std::uint64_t seed) {
    const int n = body.dim();
    const auto sphere = sample_sphere(n, resolution, seed);
    std::vector<double> terms;
    terms.reserve(sphere.size());
    for (const auto& s : sphere) {
        const double h = body.support_raw(s.u);
        if (!(h > 0.0)) throw OriginNotInterior("h_K(u) <= 0 at a sphere node");
        terms.push_back(std::pow(h, -n) * s.weight);
    }
    return pairwise_sum(terms) / n;
}

double volume(const ConvexBody& body, int resolution, std::uint64_t seed) {
    const int n = body.dim();
    if (body.kind() == BodyKind::Polytope) {
        const auto& p = static_cast<const Polytope&>(body);
        std::vector<double> terms;
        terms.reserve(p.facets().size());
        for (const auto& f : p.facets()) terms.push_back(f.area * f.offset);
        return pairwise_sum(terms) / n;
    }
    auto sphere = sample_sphere(n, resolution, seed);
    annotate_sphere(body, sphere);
    std::vector<double> terms;
    terms.reserve(sphere.size());
    for (const auto& s : sphere) terms.push_back(s.h * s.F * s.weight);
    return pairwise_sum(terms) / n;
}

namespace {

void write_row(std::ostream& out, const char* kind, const Vec& location, const Vec& normal,
               double value, double weight) {
    out << kind;
    for (int i = 0; i < location.size(); ++i) out << ',' << location(i);
    for (int i = 0; i < normal.size(); ++i) out << ',' << normal(i);
    out << ',' << value << ',' << weight << '\n';
}

}  // namespace

void dump_csv(std::ostream& out, const CurvatureMeasure& m) {
    out << "kind,location...,normal...,value,weight\n";
    for (std::size_t i = 0; i < m.samples.size(); ++i)
        write_row(out, "density", m.samples[i].x, m.samples[i].nu, m.density[i],
                  m.samples[i].weight);
    for (const auto& a : m.atoms)
        write_row(out, "atom", a.location, Vec::Zero(a.location.size()), a.mass, 0.0);
}

void dump_csv(std::ostream& out, const SurfaceAreaMeasure& m) {
    out << "kind,location...,normal...,value,weight\n";
    for (std::size_t i = 0; i < m.samples.size(); ++i)
        write_row(out, "density", m.samples[i].u, m.samples[i].u, m.density[i],
                  m.samples[i].weight);
    for (const auto& a : m.atoms) write_row(out, "atom", a.location, a.location, a.mass, 0.0);
}

}  // namespace asakit
