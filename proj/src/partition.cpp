#include "grassmann/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassmann {

bool fits_in_box(const Partition& p, const GrassmannShape& shape) {
    if (static_cast<int>(p.rows.size()) != shape.k) return false;
    int prev = 0;
    for (int r : p.rows) {
        if (r < prev || r > shape.box_width()) return false;
        prev = r;
    }
    return true;
}

void require_valid(const Partition& p, const GrassmannShape& shape) {
    if (!fits_in_box(p, shape))
        throw std::invalid_argument("partition " + to_string(p) + " does not fit in the " +
                                    std::to_string(shape.k) + "x" +
                                    std::to_string(shape.box_width()) + " box");
}

Partition empty_partition(const GrassmannShape& shape) {
    return Partition{std::vector<int>(static_cast<size_t>(shape.k), 0)};
}

Partition full_partition(const GrassmannShape& shape) {
    return Partition{std::vector<int>(static_cast<size_t>(shape.k), shape.box_width())};
}

namespace {

void extend_rows(std::vector<int>& rows, int row, int min_len, int remaining,
                 const GrassmannShape& shape, std::vector<Partition>& out) {
    const int k = shape.k;
    const int width = shape.box_width();
    if (row == k) {
        out.push_back(Partition{rows});
        return;
    }
    const int rows_after = k - row - 1;
    for (int len = min_len; len <= width && len <= remaining; ++len) {
        // Later rows are each at least `len` and at most `width`.
        if (remaining - len > rows_after * width) continue;
        if (remaining - len < rows_after * len) break;
        rows[static_cast<size_t>(row)] = len;
        extend_rows(rows, row + 1, len, remaining - len, shape, out);
    }
    rows[static_cast<size_t>(row)] = 0;
}

}  // namespace

std::vector<Partition> enumerate_cells(const GrassmannShape& shape, int degree) {
    if (degree < 0 || degree > shape.dimension())
        throw std::out_of_range("degree " + std::to_string(degree) + " outside 0.." +
                                std::to_string(shape.dimension()));
    std::vector<Partition> out;
    std::vector<int> rows(static_cast<size_t>(shape.k), 0);
    extend_rows(rows, 0, 0, degree, shape, out);
    return out;
}

long long cell_count(const GrassmannShape& shape) {
    long long result = 1;
    for (int i = 1; i <= shape.k; ++i) {
        result = result * (shape.n - shape.k + i) / i;
    }
    return result;
}

SchubertSymbol partition_to_symbol(const Partition& p, const GrassmannShape& shape) {
    require_valid(p, shape);
    SchubertSymbol symbol;
    symbol.pivots.reserve(p.rows.size());
    for (int j = 1; j <= shape.k; ++j) symbol.pivots.push_back(p.row(j) + j);
    return symbol;
}

Partition symbol_to_partition(const SchubertSymbol& symbol, const GrassmannShape& shape) {
    if (static_cast<int>(symbol.pivots.size()) != shape.k)
        throw std::invalid_argument("Schubert symbol must have exactly k pivots");
    int prev = 0;
    for (int pivot : symbol.pivots) {
        if (pivot <= prev || pivot > shape.n)
            throw std::invalid_argument("Schubert symbol pivots must increase strictly within 1..n");
        prev = pivot;
    }
    Partition p;
    p.rows.reserve(symbol.pivots.size());
    for (int j = 1; j <= shape.k; ++j) p.rows.push_back(symbol.pivots[static_cast<size_t>(j) - 1] - j);
    return p;
}

std::string to_string(const Partition& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.rows.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(p.rows[i]);
    }
    out += ")";
    return out;
}

}  // namespace grassmann
