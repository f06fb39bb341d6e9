#include <doctest.h>

#include "grassmann/checkered.hpp"

using namespace grassmann;

TEST_CASE("checkered fill of the Gr(2,5) top cell") {
    GrassmannShape gr25(2, 5);
    CheckeredDiagram diagram = checkered_fill(Partition{{3, 3}}, gr25, FillVariant::standard);
    // Top row (row 2): q,1,q; bottom row: 1,q,1.
    CHECK(diagram.letters[1] == std::vector<Letter>{Letter::q, Letter::one, Letter::q});
    CHECK(diagram.letters[0] == std::vector<Letter>{Letter::one, Letter::q, Letter::one});
    CHECK(diagram.eta == 3);

    CheckeredDiagram shifted = checkered_fill(Partition{{3, 3}}, gr25, FillVariant::shifted);
    CHECK(shifted.letters[1] == std::vector<Letter>{Letter::one, Letter::q, Letter::one});
    CHECK(shifted.eta == 3);
}

TEST_CASE("empty diagram carries no q") {
    GrassmannShape gr25(2, 5);
    CHECK(checkered_fill(Partition{{0, 0}}, gr25, FillVariant::standard).eta == 0);
    CHECK(eta(Partition{{0, 0}}, gr25) == 0);
    CHECK(eta_star(Partition{{0, 0}}, gr25) == 0);
}

TEST_CASE("hook diagram of Gr(3,8)") {
    GrassmannShape gr38(3, 8);
    // The (n-k) x 1^{k-1} hook: bottom-to-top rows (1,1,5).
    CheckeredDiagram diagram = checkered_fill(Partition{{1, 1, 5}}, gr38, FillVariant::standard);
    CHECK(diagram.eta == 4);
    CHECK(eta(Partition{{1, 1, 5}}, gr38) == 4);
}

TEST_CASE("eta examples for Gr(2,5)") {
    GrassmannShape gr25(2, 5);
    CHECK(eta(Partition{{3, 3}}, gr25) == 3);
    CHECK(eta(Partition{{2, 2}}, gr25) == 2);
    CHECK(eta_star(Partition{{3, 3}}, gr25) == 3);
    CHECK(eta_star(Partition{{1, 2}}, gr25) == 2);
}

TEST_CASE("eta values across Gr(2,5), degree by degree") {
    GrassmannShape gr25(2, 5);
    std::vector<int> values;
    for (int degree = 0; degree <= 6; ++degree)
        for (const Partition& cell : enumerate_cells(gr25, degree))
            values.push_back(eta(cell, gr25));
    CHECK(values == std::vector<int>{0, 1, 1, 1, 2, 1, 2, 2, 3, 3});
}

TEST_CASE("complementarity and closed form everywhere up to n = 10") {
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k < n; ++k) {
            GrassmannShape shape(k, n);
            for (int degree = 0; degree <= shape.dimension(); ++degree) {
                for (const Partition& cell : enumerate_cells(shape, degree)) {
                    int e = eta(cell, shape);  // count vs closed form checked inside
                    CHECK(e + eta_star(cell, shape) == cell.size());
                    CHECK(checkered_fill(cell, shape, FillVariant::shifted).eta ==
                          eta_star(cell, shape));
                }
            }
        }
    }
}
