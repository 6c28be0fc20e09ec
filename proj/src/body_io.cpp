#include "asakit/body_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace asakit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw SpecParseError(message); }

void check_fields(const json& spec, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : spec.items()) {
        bool known = false;
        for (const char* name : allowed)
            if (key == name) {
                known = true;
                break;
            }
        if (!known) fail("unknown field \"" + key + "\" in body spec");
    }
}

int parse_dim(const json& spec) {
    if (!spec.contains("dim") || !spec["dim"].is_number_integer())
        fail("body spec needs an integer \"dim\"");
    const int n = spec["dim"].get<int>();
    if (n < 2) fail("dim must be at least 2");
    return n;
}

Vec parse_vec(const json& j, int n, const std::string& name) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        fail("\"" + name + "\" must be an array of " + std::to_string(n) + " numbers");
    Vec v(n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_number()) fail("\"" + name + "\" must contain numbers");
        v(i) = j[i].get<double>();
    }
    return v;
}

Mat parse_mat(const json& j, int n, const std::string& name) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        fail("\"" + name + "\" must be an array of " + std::to_string(n) + " rows");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.row(i) = parse_vec(j[i], n, name).transpose();
    return m;
}

}  // namespace

BodyPtr parse_body(const nlohmann::json& spec) {
    if (!spec.is_object()) fail("body spec must be a JSON object");
    const int n = parse_dim(spec);
    if (!spec.contains("kind") || !spec["kind"].is_string())
        fail("body spec needs a string \"kind\"");
    const std::string kind = spec["kind"].get<std::string>();

    if (kind == "ball") {
        check_fields(spec, {"dim", "kind", "center", "radius"});
        Vec center = Vec::Zero(n);
        if (spec.contains("center")) center = parse_vec(spec["center"], n, "center");
        double radius = 1.0;
        if (spec.contains("radius")) {
            if (!spec["radius"].is_number()) fail("\"radius\" must be a number");
            radius = spec["radius"].get<double>();
        }
        if (!(radius > 0.0)) fail("radius must be positive");
        return std::make_shared<Ball>(std::move(center), radius);
    }

    if (kind == "ellipsoid") {
        check_fields(spec, {"dim", "kind", "semi_axes", "rotation", "center"});
        if (!spec.contains("semi_axes")) fail("ellipsoid spec needs \"semi_axes\"");
        Vec axes = parse_vec(spec["semi_axes"], n, "semi_axes");
        for (int i = 0; i < n; ++i)
            if (!(axes(i) > 0.0)) fail("semi_axes must be positive");
        Mat rotation = Mat::Identity(n, n);
        if (spec.contains("rotation")) rotation = parse_mat(spec["rotation"], n, "rotation");
        Vec center = Vec::Zero(n);
        if (spec.contains("center")) center = parse_vec(spec["center"], n, "center");
        try {
            return std::make_shared<Ellipsoid>(std::move(axes), std::move(rotation),
                                               std::move(center));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    if (kind == "polytope") {
        check_fields(spec, {"dim", "kind", "vertices", "facets"});
        if (!spec.contains("vertices") || !spec["vertices"].is_array())
            fail("polytope spec needs a \"vertices\" array");
        std::vector<Vec> vertices;
        for (const auto& row : spec["vertices"])
            vertices.push_back(parse_vec(row, n, "vertices"));
        std::vector<std::vector<int>> facets;
        if (spec.contains("facets")) {
            if (!spec["facets"].is_array()) fail("\"facets\" must be an array of index arrays");
            for (const auto& f : spec["facets"]) {
                if (!f.is_array()) fail("\"facets\" must be an array of index arrays");
                std::vector<int> ids;
                for (const auto& id : f) {
                    if (!id.is_number_integer()) fail("facet indices must be integers");
                    const int v = id.get<int>();
                    if (v < 0 || v >= static_cast<int>(vertices.size()))
                        fail("facet index out of range");
                    ids.push_back(v);
                }
                facets.push_back(std::move(ids));
            }
        }
        try {
            return std::make_shared<Polytope>(std::move(vertices), std::move(facets));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        } catch (const HullUnavailable& e) {
            fail(e.what());
        }
    }

    if (kind == "transform") {
        check_fields(spec, {"dim", "kind", "linear", "translation", "base"});
        if (!spec.contains("linear") || !spec.contains("base"))
            fail("transform spec needs \"linear\" and \"base\"");
        const Mat linear = parse_mat(spec["linear"], n, "linear");
        Vec translation = Vec::Zero(n);
        if (spec.contains("translation"))
            translation = parse_vec(spec["translation"], n, "translation");
        BodyPtr base = parse_body(spec["base"]);
        if (base->dim() != n) fail("transform base dimension mismatch");
        try {
            return apply_linear(base, linear, translation);
        } catch (const SingularMatrix& e) {
            fail(e.what());
        }
    }

    if (kind == "quartic") {
        check_fields(spec, {"dim", "kind", "amplitude"});
        double amplitude = 0.3;
        if (spec.contains("amplitude")) {
            if (!spec["amplitude"].is_number()) fail("\"amplitude\" must be a number");
            amplitude = spec["amplitude"].get<double>();
        }
        if (!(amplitude >= 0.0)) fail("amplitude must be non-negative");
        return quartic_body(n, amplitude);
    }

    fail("unknown body kind \"" + kind + "\"");
}

BodyPtr load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open body spec file " + path);
    nlohmann::json spec;
    try {
        in >> spec;
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    return parse_body(spec);
}

std::string body_hash(const nlohmann::json& spec) {
    const std::string bytes = spec.dump();
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << hash;
    return out.str();
}

BodyPtr quartic_body(int dim, double amplitude) {
    const double a = amplitude;
    auto h = [a](const Vec& u) { return 1.0 + a * u.array().pow(4).sum(); };
    auto grad = [a](const Vec& u) {
        const double s = u.array().pow(4).sum();
        return Vec(u + a * (4.0 * u.array().pow(3).matrix() - 3.0 * s * u));
    };
    auto hess = [a](const Vec& u) {
        const int n = static_cast<int>(u.size());
        const double s = u.array().pow(4).sum();
        const Vec cube = u.array().pow(3).matrix();
        Mat m = Mat::Identity(n, n) - u * u.transpose();
        m += a * (12.0 * Mat(u.array().square().matrix().asDiagonal()) -
                  12.0 * (cube * u.transpose() + u * cube.transpose()) -
                  3.0 * s * Mat::Identity(n, n) + 15.0 * s * u * u.transpose());
        return m;
    };
    return std::make_shared<SupportOracle>(dim, h, grad, hess);
}

}  // namespace asakit
