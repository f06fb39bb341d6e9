#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "grassmann/shape.hpp"

namespace grassmann {

// Sparse 0/1 matrix with set semantics over the two-element field.
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::set<std::pair<int, int>> ones;

    void set(int r, int c) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::out_of_range("BinaryMatrix entry outside bounds");
        ones.insert({r, c});
    }
    bool at(int r, int c) const { return ones.count({r, c}) > 0; }
};

int rank_mod2(const BinaryMatrix& m);

// One linear equation over GF(2): the variables listed sum to rhs.
struct ParityEquation {
    std::vector<int> variables;
    int rhs = 0;  // 0 or 1
};

// Any solution of the system, with free variables set to 0; nullopt when
// inconsistent.
std::optional<std::vector<std::uint8_t>> solve_mod2(int num_variables,
                                                    const std::vector<ParityEquation>& equations);

}  // namespace grassmann
