#include "grassmann/serialize.hpp"

#include <sstream>

namespace grassmann {

Json shape_json(const GrassmannShape& shape) {
    return Json{{"k", shape.k}, {"n", shape.n}, {"dimension", shape.dimension()}};
}

Json partition_json(const Partition& p) { return Json(p.rows); }

Json polynomial_json(const IntPolynomial& p, const std::string& variable) {
    return Json{{"coefficients", p.coefficients()},
                {"pretty", p.to_pretty_string(variable)}};
}

Json group_json(const AbelianGroup& group) {
    return Json{{"free_rank", group.free_rank}, {"torsion", group.torsion}};
}

Json make_document(Json request, Json payload) {
    return Json{{"schema_version", schema_version},
                {"request", std::move(request)},
                {"payload", std::move(payload)}};
}

Json table_payload(const CohomologyTable& table, bool homological) {
    Json groups = Json::array();
    for (size_t j = 0; j < table.groups.size(); ++j) {
        Json entry = group_json(table.groups[j]);
        entry["degree"] = static_cast<int>(j);
        // keep degree first for readability
        Json ordered{{"degree", static_cast<int>(j)},
                     {"free_rank", table.groups[j].free_rank},
                     {"torsion", table.groups[j].torsion}};
        groups.push_back(std::move(ordered));
    }
    Json payload{{"shape", shape_json(table.shape)},
                 {"coefficients",
                  table.variant == FillVariant::standard ? "constant" : "twisted"},
                 {"variant", to_string(table.variant)},
                 {"indexing", homological ? "homological" : "cohomological"},
                 {"groups", std::move(groups)},
                 {"provenance", to_string(table.provenance)}};
    if (table.provenance == Provenance::f2_fast_path && table.shape.n > oracle_capacity)
        payload["note"] = "fast path unverified beyond oracle range";
    return payload;
}

namespace {

std::string node_id(const Partition& p) {
    std::string id = "p";
    for (size_t i = 0; i < p.rows.size(); ++i) {
        if (i > 0) id += "_";
        id += std::to_string(p.rows[i]);
    }
    return id;
}

Json nodes_json(const BruhatGraph& graph, const std::vector<std::vector<int>>* weights) {
    Json nodes = Json::array();
    for (size_t degree = 0; degree < graph.levels.size(); ++degree) {
        const auto& level = graph.levels[degree];
        for (size_t i = 0; i < level.size(); ++i) {
            Json node{{"id", node_id(level[i])},
                      {"partition", partition_json(level[i])},
                      {"degree", static_cast<int>(degree)}};
            if (weights) node["weight"] = (*weights)[degree][i];
            nodes.push_back(std::move(node));
        }
    }
    return nodes;
}

Json edges_json(const BruhatGraph& graph, const std::vector<EdgeClass>* classes) {
    Json edges = Json::array();
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        const CoverEdge& edge = graph.edges[e];
        Json entry{{"source", node_id(edge.source)},
                   {"target", node_id(edge.target)},
                   {"reflection", edge.reflection_index},
                   {"box", Json{{"row", edge.box_row}, {"col", edge.box_col}}}};
        if (classes)
            entry["class"] = (*classes)[e] == EdgeClass::dbl ? "double" : "single";
        edges.push_back(std::move(entry));
    }
    return edges;
}

Json graph_payload_impl(const BruhatGraph& graph, const WeightedLattice* lattice) {
    Json payload{{"shape", shape_json(graph.shape)},
                 {"row_order", "bottom_up"}};
    if (lattice) payload["variant"] = to_string(lattice->variant);
    payload["nodes"] = nodes_json(graph, lattice ? &lattice->cell_weights : nullptr);
    payload["edges"] = edges_json(graph, lattice ? &lattice->edge_class : nullptr);
    return payload;
}

std::string dot_impl(const BruhatGraph& graph, const WeightedLattice* lattice) {
    std::ostringstream out;
    out << "digraph bruhat {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (size_t degree = 0; degree < graph.levels.size(); ++degree) {
        const auto& level = graph.levels[degree];
        out << "  { rank=same;";
        for (const Partition& cell : level) out << " " << node_id(cell) << ";";
        out << " }\n";
        for (size_t i = 0; i < level.size(); ++i) {
            out << "  " << node_id(level[i]) << " [label=\"" << to_string(level[i]);
            if (lattice) out << " | " << lattice->cell_weights[degree][i];
            out << "\"];\n";
        }
    }
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        const CoverEdge& edge = graph.edges[e];
        out << "  " << node_id(edge.source) << " -> " << node_id(edge.target) << " [label=\"s"
            << edge.reflection_index << "\"";
        if (lattice && (*lattice).edge_class[e] == EdgeClass::dbl)
            out << ",penwidth=2,style=bold";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

Json graph_payload(const WeightedLattice& lattice) {
    return graph_payload_impl(lattice.graph, &lattice);
}

Json graph_payload(const BruhatGraph& graph) { return graph_payload_impl(graph, nullptr); }

std::string graph_dot(const WeightedLattice& lattice) { return dot_impl(lattice.graph, &lattice); }

std::string graph_dot(const BruhatGraph& graph) { return dot_impl(graph, nullptr); }

Json polynomials_payload(const GrassmannShape& shape, int capacity) {
    IntPolynomial sum_standard = p_sum(shape, FillVariant::standard, capacity);
    IntPolynomial closed = p_closed(shape);
    IntPolynomial sum_shifted = p_sum(shape, FillVariant::shifted, capacity);
    PointCount pc = fq_point_count(shape);

    Json p_star{{"sum", polynomial_json(sum_shifted, "q")}};
    if (shape.n % 2 == 1) {
        p_star["closed"] = polynomial_json(p_star_closed(shape), "q");
        p_star["closed_supported"] = true;
    } else {
        p_star["closed"] = nullptr;
        p_star["closed_supported"] = false;
    }

    return Json{
        {"shape", shape_json(shape)},
        {"p", Json{{"sum", polynomial_json(sum_standard, "q")},
                   {"closed", polynomial_json(closed, "q")},
                   {"sum_matches_closed", sum_standard == closed}}},
        {"p_star", std::move(p_star)},
        {"poincare", polynomial_json(poincare_polynomial(shape), "t")},
        {"euler_characteristic", euler_characteristic(shape)},
        {"point_count", Json{{"shift_exponent", pc.shift_exponent},
                             {"p", polynomial_json(pc.p, "q")},
                             {"full", polynomial_json(pc.full(), "q")}}},
        {"reciprocity", reciprocity_check(shape)},
    };
}

Json verification_payload(const std::vector<CheckResult>& results) {
    Json checks = Json::array();
    for (const CheckResult& result : results) {
        checks.push_back(Json{{"name", result.name},
                              {"status", result.skipped  ? "skipped"
                                         : result.passed ? "pass"
                                                         : "fail"},
                              {"detail", result.detail}});
    }
    return Json{{"checks", std::move(checks)}, {"all_passed", all_passed(results)}};
}

std::string render(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace grassmann
