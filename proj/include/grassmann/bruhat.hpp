#pragma once

#include <optional>
#include <vector>

#include "grassmann/partition.hpp"

namespace grassmann {

// One cover relation: target = source + one box at (box_row, box_col).  The
// added box carries the simple-reflection label s_{row + col - 1}; the bottom
// row starts at s_1 and row j starts at s_j.
struct CoverEdge {
    Partition source;
    Partition target;
    int box_row = 0;  // 1 = bottom
    int box_col = 0;
    int reflection_index = 0;

    bool operator==(const CoverEdge&) const = default;
};

// Positions of an edge's endpoints inside the graded level lists; kept
// alongside CoverEdge so matrix builders never search.
struct EdgeRef {
    int source_degree = 0;
    int source_index = 0;
    int target_index = 0;
};

// The weak Bruhat graph of Gr(k,n): partitions graded by size, edges adding
// one box.  Levels are in canonical (lexicographic) order.
struct BruhatGraph {
    GrassmannShape shape;
    std::vector<std::vector<Partition>> levels;  // levels[j] = cells of degree j
    std::vector<CoverEdge> edges;
    std::vector<EdgeRef> edge_refs;              // parallel to edges

    const std::vector<Partition>& level(int degree) const {
        return levels[static_cast<size_t>(degree)];
    }
    // Position of p within its level; p must be a valid cell.
    int index_in_level(const Partition& p) const;
};

BruhatGraph build_bruhat_graph(const GrassmannShape& shape, int capacity = default_capacity);

// Rows r where p + box(r) is still a partition in the box, ascending.
std::vector<int> addable_rows(const Partition& p, const GrassmannShape& shape);

// Left action of s_v through the lattice: adds the unique box labeled v when
// that yields a cover, otherwise nullopt.
std::optional<Partition> apply_reflection(const Partition& p, int v, const GrassmannShape& shape);

// Row-wise reduced word (top row first, each row left to right), given in
// application order: applying the letters to the empty diagram rebuilds p.
std::vector<int> canonical_reduced_word(const Partition& p, const GrassmannShape& shape);

// Up to `limit` reduced words, one per saturated chain from the empty diagram
// to p, enumerated depth-first with the canonical chain first.
std::vector<std::vector<int>> lattice_paths(const Partition& p, const GrassmannShape& shape,
                                            int limit);

}  // namespace grassmann
