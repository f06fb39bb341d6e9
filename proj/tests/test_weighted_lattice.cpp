#include <doctest.h>

#include <set>

#include "grassmann/weighted_lattice.hpp"

using namespace grassmann;

namespace {

std::set<std::pair<std::vector<int>, std::vector<int>>> double_edges(
    const WeightedLattice& lattice) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    for (size_t e = 0; e < lattice.graph.edges.size(); ++e)
        if (lattice.is_double(e))
            out.insert({lattice.graph.edges[e].source.rows, lattice.graph.edges[e].target.rows});
    return out;
}

}  // namespace

TEST_CASE("double edges of the standard Gr(2,5) lattice") {
    WeightedLattice lattice = classify_edges(GrassmannShape(2, 5), FillVariant::standard);
    std::set<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{0, 1}, {0, 2}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}},
        {{1, 1}, {1, 2}}, {{0, 3}, {1, 3}}, {{2, 3}, {3, 3}},
    };
    CHECK(double_edges(lattice) == expected);
}

TEST_CASE("double edges of the shifted Gr(2,5) lattice are the complement") {
    GrassmannShape gr25(2, 5);
    WeightedLattice standard = classify_edges(gr25, FillVariant::standard);
    WeightedLattice shifted = classify_edges(gr25, FillVariant::shifted);
    std::set<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}, {{1, 2}, {1, 3}},
        {{1, 2}, {2, 2}}, {{1, 3}, {2, 3}}, {{2, 2}, {2, 3}},
    };
    CHECK(double_edges(shifted) == expected);
    std::set<std::pair<std::vector<int>, std::vector<int>>> all;
    for (const CoverEdge& edge : standard.graph.edges)
        all.insert({edge.source.rows, edge.target.rows});
    std::set<std::pair<std::vector<int>, std::vector<int>>> joined = double_edges(standard);
    for (const auto& e : double_edges(shifted)) CHECK(joined.insert(e).second);
    CHECK(joined == all);
}

TEST_CASE("Gr(1,n) alternates, starting single in the standard fill") {
    WeightedLattice lattice = classify_edges(GrassmannShape(1, 6), FillVariant::standard);
    REQUIRE(lattice.graph.edges.size() == 5);
    for (size_t e = 0; e < 5; ++e) {
        // Edge e adds the box in column e+1; double exactly at even columns.
        CHECK(lattice.is_double(e) == ((e + 1) % 2 == 0));
    }
    WeightedLattice shifted = classify_edges(GrassmannShape(1, 6), FillVariant::shifted);
    for (size_t e = 0; e < 5; ++e) CHECK(shifted.is_double(e) == ((e + 1) % 2 == 1));
}

TEST_CASE("edge partition across variants up to n = 9") {
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k < n; ++k) {
            GrassmannShape shape(k, n);
            WeightedLattice standard = classify_edges(shape, FillVariant::standard);
            WeightedLattice shifted = classify_edges(shape, FillVariant::shifted);
            REQUIRE(standard.graph.edges.size() == shifted.graph.edges.size());
            for (size_t e = 0; e < standard.graph.edges.size(); ++e)
                CHECK(standard.is_double(e) != shifted.is_double(e));
        }
    }
}
