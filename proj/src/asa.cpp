#include "asakit/asa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asakit/errors.hpp"

namespace asakit {

namespace {

void require_p(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("p > 0 required");
}

double pow_support(double h, double e) {
    if (e == 0.0) return 1.0;
    if (!(h > 0.0)) throw OriginNotInterior("h_K <= 0 with p != 1");
    return std::pow(h, e);
}

}  // namespace

BoundaryMesh boundary_mesh(const ConvexBody& body, int resolution, std::uint64_t seed,
                           std::uint64_t salt) {
    BoundaryMesh mesh;
    mesh.samples = sample_boundary(body, resolution, seed, salt);
    if (body.kind() == BodyKind::Polytope) {
        const auto& p = static_cast<const Polytope&>(body);
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
            const double mass = body.dim() <= 3
                                    ? normal_cone_solid_angle(p, static_cast<int>(v))
                                    : normal_cone_solid_angle_mc(p, static_cast<int>(v),
                                                                 default_resolution(body.dim()), seed);
            mesh.c0_atoms.push_back({p.vertices()[v], mass});
        }
    }
    return mesh;
}

SphereMesh sphere_mesh(const ConvexBody& body, int resolution, std::uint64_t seed,
                       std::uint64_t salt) {
    SphereMesh mesh;
    mesh.samples = sample_sphere_rotated(body.dim(), resolution, seed, salt);
    if (body.kind() == BodyKind::Polytope) {
        for (auto& s : mesh.samples) s.h = body.support_raw(s.u);
        const auto sk = surface_area_measure(body, resolution, seed);
        mesh.sk_atoms = sk.atoms;
        for (const auto& a : mesh.sk_atoms) mesh.atom_support.push_back(body.support_raw(a.location));
    } else {
        annotate_sphere(body, mesh.samples);
    }
    return mesh;
}

double asa_boundary(const ConvexBody& body, double p, int resolution, std::uint64_t seed) {
    require_p(p);
    const int n = body.dim();
    const auto samples = sample_boundary(body, resolution, seed, kSaltBoundary);
    if (p != 1.0)
        for (const auto& s : samples)
            if (!(s.h_at_nu > 0.0)) throw OriginNotInterior("h_K <= 0 with p != 1");
    const double e = (p - 1.0) * n / p;
    std::vector<double> terms;
    terms.reserve(samples.size());
    for (const auto& s : samples) {
        if (!s.in_H_plus) continue;
        terms.push_back(std::pow(s.H / pow_support(s.h_at_nu, e), p / (n + p)) * s.weight);
    }
    return pairwise_sum(terms);
}

double asa_sphere(const ConvexBody& body, double p, int resolution, std::uint64_t seed) {
    require_p(p);
    const int n = body.dim();
    if (body.kind() == BodyKind::Polytope) {
        if (p != 1.0) {
            const auto& poly = static_cast<const Polytope&>(body);
            for (const auto& f : poly.facets())
                if (!(f.offset > 0.0)) throw OriginNotInterior("h_K <= 0 with p != 1");
        }
        return 0.0;  // the curvature function vanishes a.e.
    }
    auto samples = sample_sphere(n, resolution, seed);
    annotate_sphere(body, samples);
    if (p != 1.0)
        for (const auto& s : samples)
            if (!(s.h > 0.0)) throw OriginNotInterior("h_K <= 0 with p != 1");
    std::vector<double> terms;
    terms.reserve(samples.size());
    for (const auto& s : samples) {
        if (!s.in_F_plus) continue;
        terms.push_back(std::pow(s.F * pow_support(s.h, 1.0 - p), double(n) / (n + p)) *
                        s.weight);
    }
    return pairwise_sum(terms);
}

namespace {

double two_factor_value(double A, double B, double alpha, double beta) {
    return std::pow(A, alpha) * std::pow(B, beta);
}

}  // namespace

double functional_L1(const ConvexBody& body, const BoundaryMesh& mesh, const DiscreteFunction& g,
                     double p) {
    require_p(p);
    if (g.values.size() != mesh.samples.size())
        throw std::invalid_argument("g is not aligned with the boundary mesh");
    const int n = body.dim();
    std::vector<double> ta, tb;
    ta.reserve(mesh.samples.size());
    tb.reserve(mesh.samples.size());
    for (std::size_t j = 0; j < mesh.samples.size(); ++j) {
        const auto& s = mesh.samples[j];
        ta.push_back(std::pow(g.values[j], -n) * s.H * s.weight);
        tb.push_back(std::pow(g.values[j], p) * pow_support(s.h_at_nu, 1.0 - p) * s.weight);
    }
    return two_factor_value(pairwise_sum(ta), pairwise_sum(tb), p / (n + p), double(n) / (n + p));
}

double functional_L2(const ConvexBody& body, const BoundaryMesh& mesh, const DiscreteFunction& g,
                     double p) {
    require_p(p);
    if (g.values.size() != mesh.samples.size() || g.atom_values.size() != mesh.c0_atoms.size())
        throw std::invalid_argument("g is not aligned with the boundary mesh");
    const int n = body.dim();
    std::vector<double> ta, tb;
    ta.reserve(mesh.samples.size() + mesh.c0_atoms.size());
    tb.reserve(mesh.samples.size());
    for (std::size_t j = 0; j < mesh.samples.size(); ++j) {
        const auto& s = mesh.samples[j];
        ta.push_back(std::pow(g.values[j], -n) * s.H * s.weight);
        tb.push_back(std::pow(g.values[j], p) * pow_support(s.h_at_nu, 1.0 - p) * s.weight);
    }
    for (std::size_t j = 0; j < mesh.c0_atoms.size(); ++j)
        ta.push_back(std::pow(g.atom_values[j], -n) * mesh.c0_atoms[j].mass);
    return two_factor_value(pairwise_sum(ta), pairwise_sum(tb), p / (n + p), double(n) / (n + p));
}

DiscreteFunction analytic_minimizer(const ConvexBody& body, const BoundaryMesh& mesh, double p) {
    require_p(p);
    const int n = body.dim();
    DiscreteFunction g;
    g.values.reserve(mesh.samples.size());
    for (const auto& s : mesh.samples) {
        const double v = s.in_H_plus ? pow_support(s.h_at_nu, (p - 1.0) / (n + p)) *
                                           std::pow(s.H, 1.0 / (n + p))
                                     : 0.0;
        g.values.push_back(v);
    }
    g.atom_values.assign(mesh.c0_atoms.size(), 0.0);
    return g;
}

std::vector<std::pair<double, double>> truncation_sequence(const ConvexBody& body, double p,
                                                           int i_max, int resolution,
                                                           std::uint64_t seed) {
    require_p(p);
    const auto mesh = boundary_mesh(body, resolution, seed, kSaltCm);
    const auto gstar = analytic_minimizer(body, mesh, p);
    std::vector<double> ladder;
    for (int i = 1; i < i_max; i *= 2) ladder.push_back(i);
    if (ladder.empty() || ladder.back() != i_max) ladder.push_back(i_max);
    std::vector<std::pair<double, double>> out;
    for (double i : ladder) {
        DiscreteFunction h;
        h.values.reserve(mesh.samples.size());
        for (std::size_t j = 0; j < mesh.samples.size(); ++j) {
            const double base = mesh.samples[j].in_H_plus ? gstar.values[j] : 1.0 / i;
            h.values.push_back(std::clamp(base, 1.0 / i, i));
        }
        h.atom_values.assign(mesh.c0_atoms.size(), i);
        out.emplace_back(i, functional_L2(body, mesh, h, p));
    }
    return out;
}

namespace {

// O(t) = A^alpha B^beta with A = sum a_j e^{e1 t_j}, B = sum b_j e^{e2 t_j};
// all coefficients are >= 0 and each factor stays positive on test bodies.
struct TwoFactorObjective {
    std::vector<double> a, b;
    double e1 = 0.0, e2 = 0.0;
    double alpha = 0.0, beta = 0.0;

    double eval(const std::vector<double>& t, double& A, double& B) const {
        std::vector<double> ta, tb;
        ta.reserve(a.size());
        tb.reserve(b.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j] != 0.0) ta.push_back(a[j] * std::exp(e1 * t[j]));
            if (b[j] != 0.0) tb.push_back(b[j] * std::exp(e2 * t[j]));
        }
        A = pairwise_sum(ta);
        B = pairwise_sum(tb);
        return two_factor_value(A, B, alpha, beta);
    }
};

constexpr double kLogClamp = 60.0;

OptimizeResult minimize_two_factor(const TwoFactorObjective& obj, std::vector<double> t,
                                   const OptimizerOptions& options) {
    OptimizeResult result;
    for (auto& v : t) v = std::clamp(v, -kLogClamp, kLogClamp);
    double A = 0.0, B = 0.0;
    double value = obj.eval(t, A, B);
    result.trace.push_back({0, value});
    double step = options.initial_step;
    const double step_cap = options.initial_step * 1e8;
    std::vector<double> grad(t.size()), trial(t.size());
    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        double gmax = 0.0;
        for (std::size_t j = 0; j < t.size(); ++j) {
            const double da = obj.a[j] != 0.0 ? obj.a[j] * std::exp(obj.e1 * t[j]) / A : 0.0;
            const double db = obj.b[j] != 0.0 ? obj.b[j] * std::exp(obj.e2 * t[j]) / B : 0.0;
            grad[j] = value * (obj.alpha * obj.e1 * da + obj.beta * obj.e2 * db);
            gmax = std::max(gmax, std::abs(grad[j]));
        }
        if (gmax == 0.0) {
            result.converged = true;
            break;
        }
        double trial_value = value;
        double tA = A, tB = B;
        bool accepted = false;
        while (step >= 1e-18) {
            for (std::size_t j = 0; j < t.size(); ++j)
                trial[j] = std::clamp(t[j] - step * grad[j], -kLogClamp, kLogClamp);
            trial_value = obj.eval(trial, tA, tB);
            if (trial_value < value) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            result.converged = true;  // no descent direction left at float scale
            break;
        }
        const double rel = (value - trial_value) / value;
        t = trial;
        value = trial_value;
        A = tA;
        B = tB;
        result.trace.push_back({iter, value});
        step = std::min(step * 1.9, step_cap);
        if (rel < options.rel_tol) {
            result.converged = true;
            break;
        }
    }
    result.value = value;
    result.minimizer.values.resize(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) result.minimizer.values[j] = std::exp(t[j]);
    return result;
}

}  // namespace

OptimizeResult asa_cm_infimum(const ConvexBody& body, double p, int resolution, std::uint64_t seed,
                              const OptimizerOptions& options) {
    require_p(p);
    const int n = body.dim();
    const auto mesh = boundary_mesh(body, resolution, seed, kSaltCm);
    if (p != 1.0)
        for (const auto& s : mesh.samples)
            if (!(s.h_at_nu > 0.0)) throw OriginNotInterior("h_K <= 0 with p != 1");

    TwoFactorObjective obj;
    obj.e1 = -double(n);
    obj.e2 = p;
    obj.alpha = p / (n + p);
    obj.beta = double(n) / (n + p);
    const std::size_t m = mesh.samples.size();
    obj.a.resize(m + mesh.c0_atoms.size(), 0.0);
    obj.b.resize(m + mesh.c0_atoms.size(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        obj.a[j] = mesh.samples[j].H * mesh.samples[j].weight;
        obj.b[j] = pow_support(mesh.samples[j].h_at_nu, 1.0 - p) * mesh.samples[j].weight;
    }
    for (std::size_t j = 0; j < mesh.c0_atoms.size(); ++j) obj.a[m + j] = mesh.c0_atoms[j].mass;

    std::vector<double> t(obj.a.size(), 0.0);
    if (body.smooth()) {
        const auto gstar = analytic_minimizer(body, mesh, p);
        for (std::size_t j = 0; j < m; ++j)
            if (gstar.values[j] > 0.0) t[j] = std::log(gstar.values[j]);
    }
    auto result = minimize_two_factor(obj, std::move(t), options);
    result.minimizer.atom_values.assign(result.minimizer.values.begin() + m,
                                        result.minimizer.values.end());
    result.minimizer.values.resize(m);
    return result;
}

OptimizeResult asa_lutwak_infimum(const ConvexBody& body, double p, int resolution,
                                  std::uint64_t seed, const OptimizerOptions& options) {
    require_p(p);
    const int n = body.dim();
    const auto mesh = sphere_mesh(body, resolution, seed, kSaltLutwak);
    for (const auto& s : mesh.samples)
        if (!(s.h > 0.0)) throw OriginNotInterior("h_K <= 0 at a sphere node");
    for (double h : mesh.atom_support)
        if (!(h > 0.0)) throw OriginNotInterior("h_K <= 0 at a facet normal");

    TwoFactorObjective obj;
    obj.e1 = double(n);
    obj.e2 = -p;
    obj.alpha = p / (n + p);
    obj.beta = double(n) / (n + p);
    const std::size_t m = mesh.samples.size();
    obj.a.resize(m + mesh.sk_atoms.size(), 0.0);
    obj.b.resize(m + mesh.sk_atoms.size(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        obj.a[j] = mesh.samples[j].weight;
        if (mesh.samples[j].in_F_plus)
            obj.b[j] = mesh.samples[j].F * std::pow(mesh.samples[j].h, 1.0 - p) *
                       mesh.samples[j].weight;
    }
    for (std::size_t j = 0; j < mesh.sk_atoms.size(); ++j)
        obj.b[m + j] = mesh.sk_atoms[j].mass * std::pow(mesh.atom_support[j], 1.0 - p);

    std::vector<double> t(obj.a.size(), 0.0);
    if (body.smooth()) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto& s = mesh.samples[j];
            if (s.in_F_plus)
                t[j] = std::log(s.F * std::pow(s.h, 1.0 - p)) / (n + p);
        }
    }
    auto result = minimize_two_factor(obj, std::move(t), options);
    result.minimizer.atom_values.assign(result.minimizer.values.begin() + m,
                                        result.minimizer.values.end());
    result.minimizer.values.resize(m);
    return result;
}

namespace {

double pair_gap(double x, double y) {
    const double d = std::abs(x - y);
    if (d == 0.0) return 0.0;
    return d / std::max(std::abs(x), std::abs(y));
}

}  // namespace

AsaReport compute_report(const ConvexBody& body, double p, int resolution, std::uint64_t seed,
                         const OptimizerOptions& options) {
    AsaReport report;
    report.p = p;
    report.n = body.dim();
    report.resolution = resolution;
    report.seed = seed;
    report.value_boundary = asa_boundary(body, p, resolution, seed);
    report.value_sphere = asa_sphere(body, p, resolution, seed);
    auto cm = asa_cm_infimum(body, p, resolution, seed, options);
    auto lutwak = asa_lutwak_infimum(body, p, resolution, seed, options);
    report.value_cm_inf = cm.value;
    report.value_lutwak_inf = lutwak.value;
    report.optimizer_trace = std::move(cm.trace);
    report.cm_converged = cm.converged;
    report.lutwak_converged = lutwak.converged;
    const double v[4] = {report.value_boundary, report.value_sphere, report.value_cm_inf,
                         report.value_lutwak_inf};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            report.max_pairwise_rel_gap = std::max(report.max_pairwise_rel_gap, pair_gap(v[i], v[j]));
    return report;
}

}  // namespace asakit
