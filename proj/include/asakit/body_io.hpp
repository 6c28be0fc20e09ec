#pragma once

#include <string>

#include "json.hpp"

#include "asakit/body.hpp"
#include "asakit/errors.hpp"

namespace asakit {

// Malformed or unrecognized body spec; distinct from numerical failures so
// the CLI can map it to its own exit code.
struct SpecParseError : Error {
    using Error::Error;
};

/// Parses a body spec:
///   {"dim": n, "kind": "ball", "center": [...], "radius": r}
///   {"dim": n, "kind": "ellipsoid", "semi_axes": [...], "rotation": [[...]], "center": [...]}
///   {"dim": n, "kind": "polytope", "vertices": [[...]], "facets": [[...]]}
///   {"dim": n, "kind": "transform", "linear": [[...]], "translation": [...], "base": {...}}
///   {"dim": 3, "kind": "quartic", "amplitude": a}
/// Unknown fields are rejected.
BodyPtr parse_body(const nlohmann::json& spec);

BodyPtr load_body(const std::string& path);

/// FNV-1a over the canonical compact serialization of the spec.
std::string body_hash(const nlohmann::json& spec);

/// Smooth non-ellipsoidal test body: support h(u) = 1 + a (u_1^4 + ... + u_n^4)
/// on unit directions, with closed-form gradient and Hessian. Convex for
/// moderate a (the default 0.3 is validated in the test suite).
BodyPtr quartic_body(int dim, double amplitude = 0.3);

}  // namespace asakit
