#include <doctest.h>

#include "grassmann/serialize.hpp"

using namespace grassmann;

TEST_CASE("documents serialize deterministically and round-trip") {
    GrassmannShape gr25(2, 5);
    Json request{{"command", "cohomology"}, {"k", 2}, {"n", 5}};
    Json doc = make_document(request,
                             table_payload(cohomology(gr25, FillVariant::standard), false));

    std::string once = render(doc);
    std::string twice = render(make_document(
        request, table_payload(cohomology(gr25, FillVariant::standard), false)));
    CHECK(once == twice);
    CHECK(once.back() == '\n');

    Json reparsed = Json::parse(once);
    CHECK(reparsed == doc);
    CHECK(reparsed["schema_version"] == schema_version);
    CHECK(reparsed["payload"]["groups"].size() == 7);
    CHECK(reparsed["payload"]["groups"][4]["free_rank"] == 1);
    CHECK(reparsed["payload"]["groups"][4]["torsion"] == Json::array({2}));
    CHECK(reparsed["payload"]["provenance"] == "f2-fast-path");
}

TEST_CASE("graph payload carries weights and edge classes") {
    WeightedLattice lattice = classify_edges(GrassmannShape(2, 5), FillVariant::standard);
    Json payload = graph_payload(lattice);
    CHECK(payload["row_order"] == "bottom_up");
    CHECK(payload["nodes"].size() == 10);
    CHECK(payload["edges"].size() == 12);
    int doubles = 0;
    for (const auto& edge : payload["edges"])
        if (edge["class"] == "double") ++doubles;
    CHECK(doubles == 6);

    Json shifted = graph_payload(classify_edges(GrassmannShape(2, 5), FillVariant::shifted));
    int shifted_doubles = 0;
    for (const auto& edge : shifted["edges"])
        if (edge["class"] == "double") ++shifted_doubles;
    CHECK(shifted_doubles == 6);

    Json plain = graph_payload(build_bruhat_graph(GrassmannShape(2, 5)));
    CHECK_FALSE(plain["nodes"][0].contains("weight"));
    CHECK_FALSE(plain["edges"][0].contains("class"));
}

TEST_CASE("DOT export styles double edges and labels nodes with weights") {
    WeightedLattice lattice = classify_edges(GrassmannShape(1, 4), FillVariant::standard);
    std::string dot = graph_dot(lattice);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("penwidth=2,style=bold") != std::string::npos);
    CHECK(dot.find("label=\"(1) | 1\"") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    // (1) -> (2) adds the box in column 2: the double edge.
    CHECK(dot.find("p1 -> p2 [label=\"s2\",penwidth=2,style=bold]") != std::string::npos);
    // The empty diagram to (1) stays single.
    CHECK(dot.find("p0 -> p1 [label=\"s1\"]") != std::string::npos);
    CHECK(graph_dot(lattice) == dot);
}

TEST_CASE("polynomials payload fields") {
    Json payload = polynomials_payload(GrassmannShape(2, 4));
    CHECK(payload["p"]["sum_matches_closed"] == true);
    CHECK(payload["point_count"]["shift_exponent"] == 2);
    CHECK(payload["point_count"]["full"]["coefficients"] == Json::array({0, 0, 1, 0, 1}));
    CHECK(payload["reciprocity"] == true);
    CHECK(payload["p_star"]["closed_supported"] == false);

    Json odd = polynomials_payload(GrassmannShape(2, 5));
    CHECK(odd["p_star"]["closed_supported"] == true);
    CHECK(odd["p_star"]["closed"]["coefficients"] == Json::array({0, 1, 0, 1}));
    CHECK(odd["euler_characteristic"] == 2);
}

TEST_CASE("verification payload shape") {
    auto results = run_checks(GrassmannShape(2, 4));
    Json payload = verification_payload(results);
    CHECK(payload["all_passed"] == true);
    CHECK(payload["checks"].size() == results.size());
    for (const auto& check : payload["checks"]) CHECK(check["status"] != "fail");
}
