#pragma once

#include <vector>

#include "grassmann/partition.hpp"

namespace grassmann {

// The two checkered letter assignments.  In the standard fill the box labeled
// s_m carries q exactly when m - k is even, so the first box of the top row
// (label s_k) carries q; the shifted fill is the complement.
enum class FillVariant { standard, shifted };

const char* to_string(FillVariant variant);
FillVariant opposite(FillVariant variant);

enum class Letter { q, one };

inline bool box_carries_q(int row, int col, const GrassmannShape& shape, FillVariant variant) {
    bool standard_q = (row + col - 1 - shape.k) % 2 == 0;
    return variant == FillVariant::standard ? standard_q : !standard_q;
}

// A Young diagram with each box assigned q or 1; eta counts the q boxes.
struct CheckeredDiagram {
    Partition partition;
    FillVariant variant;
    std::vector<std::vector<Letter>> letters;  // letters[r-1][c-1], bottom-to-top
    int eta = 0;
};

CheckeredDiagram checkered_fill(const Partition& p, const GrassmannShape& shape,
                                FillVariant variant);

// q-box count of the standard fill.  Computed twice -- by direct count and by
// the row-wise closed form sum_j floor((lambda_j + sigma_j)/2) -- and the two
// must agree.
int eta(const Partition& p, const GrassmannShape& shape);

// q-box count of the shifted fill; equals |p| - eta(p).
int eta_star(const Partition& p, const GrassmannShape& shape);

int checkered_weight(const Partition& p, const GrassmannShape& shape, FillVariant variant);

}  // namespace grassmann
