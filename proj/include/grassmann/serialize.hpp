#pragma once

#include <string>

#include <json.hpp>

#include "grassmann/cohomology.hpp"
#include "grassmann/qformulas.hpp"
#include "grassmann/verify.hpp"

namespace grassmann {

// Documents use insertion-ordered JSON and a fixed dump style so identical
// inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

Json shape_json(const GrassmannShape& shape);
Json partition_json(const Partition& p);
Json polynomial_json(const IntPolynomial& p, const std::string& variable);
Json group_json(const AbelianGroup& group);

// {schema_version, request, payload}.
Json make_document(Json request, Json payload);

// Cohomology/homology table payload.  `homological` flips the degree labels;
// the groups sequence is taken as already ordered for the chosen indexing.
Json table_payload(const CohomologyTable& table, bool homological);

// Weighted-graph payload with per-node weights and per-edge classes.
Json graph_payload(const WeightedLattice& lattice);
// Plain Bruhat graph payload (no weights, no classes).
Json graph_payload(const BruhatGraph& graph);

Json polynomials_payload(const GrassmannShape& shape, int capacity = default_capacity);

Json verification_payload(const std::vector<CheckResult>& results);

std::string graph_dot(const WeightedLattice& lattice);
std::string graph_dot(const BruhatGraph& graph);

// dump(2) plus trailing newline; the single rendering used everywhere.
std::string render(const Json& document);

}  // namespace grassmann
