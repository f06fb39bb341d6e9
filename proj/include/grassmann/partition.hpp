#pragma once

#include <compare>
#include <string>
#include <vector>

#include "grassmann/shape.hpp"

namespace grassmann {

// A Young diagram inside the k x (n-k) box, indexing one Schubert cell.
//
// Rows are stored bottom-to-top: rows[0] is the bottom row and the sequence is
// weakly increasing, so rows[j-1] is the length of row j and equals the pivot
// offset w(j) - j.  The top row (index k-1) is the longest.
struct Partition {
    std::vector<int> rows;

    // Number of boxes; equals the cell dimension and the Weyl length.
    int size() const {
        int total = 0;
        for (int r : rows) total += r;
        return total;
    }

    int row(int r) const { return rows[static_cast<size_t>(r) - 1]; }  // 1-based

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

// Pivot columns of the reduced row echelon form: a strictly increasing
// k-subset of {1, ..., n}.  Bijective with Partition via pivots[j-1] = rows[j-1] + j.
struct SchubertSymbol {
    std::vector<int> pivots;

    bool operator==(const SchubertSymbol&) const = default;
};

bool fits_in_box(const Partition& p, const GrassmannShape& shape);
void require_valid(const Partition& p, const GrassmannShape& shape);

Partition empty_partition(const GrassmannShape& shape);
Partition full_partition(const GrassmannShape& shape);

// All partitions of `degree` inside the box, ordered lexicographically on the
// row sequence.  The order is the canonical cell order used everywhere
// downstream (matrix rows/columns, serialized documents).
std::vector<Partition> enumerate_cells(const GrassmannShape& shape, int degree);

long long cell_count(const GrassmannShape& shape);  // C(n, k)

SchubertSymbol partition_to_symbol(const Partition& p, const GrassmannShape& shape);
Partition symbol_to_partition(const SchubertSymbol& symbol, const GrassmannShape& shape);

// "(0,2)" with rows listed bottom-to-top.
std::string to_string(const Partition& p);

}  // namespace grassmann
