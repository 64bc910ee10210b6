#pragma once

#include <json.hpp>

#include "liemc/models.hpp"
#include "liemc/solver.hpp"

namespace liemc {

// Insertion-ordered JSON keeps emitted reports deterministic and readable.
using Json = nlohmann::ordered_json;

Json context_to_json(const ContextPtr& ctx);
ContextPtr context_from_json(const Json& j);

// Element schema: {"generators":[{"name","degree"}...], "truncation":N,
// "terms":[{"word":[names...], "coeff":"p/q"}...]} with terms in canonical
// order and exact coefficient strings. Round-trips bit-exactly.
Json element_to_json(const Element& a);
Element element_from_json(const Json& j);

Json morphism_to_json(const GroupMorphism& m);
GroupMorphism morphism_from_json(const Json& j, const ContextPtr& ctx);

// Model schema: generator table, per-generator differential images as
// Element objects, and the morphism tables when the model carries them.
Json cdgl_to_json(const Cdgl& L);
Cdgl cdgl_from_json(const Json& j);

Json circuit_to_json(const CircuitModel& m);
Json triangle_to_json(const TriangleModel& m);

Json diagnostics_to_json(const std::vector<StageDiagnostics>& stages);

}  // namespace liemc
