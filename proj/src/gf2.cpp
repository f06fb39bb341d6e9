#include "grassmann/gf2.hpp"

#include <algorithm>

namespace grassmann {

namespace {

using Row = std::vector<std::uint64_t>;

bool get_bit(const Row& row, int c) { return (row[static_cast<size_t>(c) >> 6] >> (c & 63)) & 1; }

void flip_bit(Row& row, int c) { row[static_cast<size_t>(c) >> 6] ^= std::uint64_t{1} << (c & 63); }

void xor_into(Row& dst, const Row& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

// In-place elimination; returns the rank.  Scans columns 0..cols-1, fully
// reducing above and below each pivot.
int eliminate(std::vector<Row>& rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (get_bit(rows[static_cast<size_t>(r)], c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && get_bit(rows[static_cast<size_t>(r)], c))
                xor_into(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(rank)]);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_mod2(const BinaryMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    const size_t words = (static_cast<size_t>(m.cols) + 63) / 64;
    std::vector<Row> rows(static_cast<size_t>(m.rows), Row(words, 0));
    for (const auto& [r, c] : m.ones) flip_bit(rows[static_cast<size_t>(r)], c);
    return eliminate(rows, m.cols);
}

std::optional<std::vector<std::uint8_t>> solve_mod2(int num_variables,
                                                    const std::vector<ParityEquation>& equations) {
    // Augmented column num_variables holds the right-hand side.
    const size_t words = (static_cast<size_t>(num_variables) + 1 + 63) / 64;
    std::vector<Row> rows;
    rows.reserve(equations.size());
    for (const ParityEquation& eq : equations) {
        Row row(words, 0);
        for (int v : eq.variables) {
            if (v < 0 || v >= num_variables)
                throw std::out_of_range("equation references unknown variable");
            flip_bit(row, v);
        }
        if (eq.rhs & 1) flip_bit(row, num_variables);
        rows.push_back(std::move(row));
    }

    int rank = eliminate(rows, num_variables);

    // A leftover row 0 = 1 means the system is inconsistent.
    for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
        if (get_bit(rows[r], num_variables)) return std::nullopt;

    std::vector<std::uint8_t> solution(static_cast<size_t>(num_variables), 0);
    for (int r = 0; r < rank; ++r) {
        int lead = -1;
        for (int c = 0; c < num_variables; ++c) {
            if (get_bit(rows[static_cast<size_t>(r)], c)) {
                lead = c;
                break;
            }
        }
        if (lead >= 0)
            solution[static_cast<size_t>(lead)] =
                get_bit(rows[static_cast<size_t>(r)], num_variables) ? 1 : 0;
    }
    return solution;
}

}  // namespace grassmann
