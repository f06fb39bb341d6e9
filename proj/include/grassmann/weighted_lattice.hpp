#pragma once

#include <vector>

#include "grassmann/bruhat.hpp"
#include "grassmann/checkered.hpp"

namespace grassmann {

enum class EdgeClass { single, dbl };

// The Bruhat graph with every cover edge classified for one coefficient
// system.  An edge is double exactly when the checkered weight is unchanged,
// equivalently when the added box carries the letter 1 in the variant's fill;
// classification checks both criteria and insists they agree.  The double
// edges are the ones whose incidence number is +-2; single edges carry 0.
struct WeightedLattice {
    BruhatGraph graph;
    FillVariant variant;
    std::vector<EdgeClass> edge_class;            // parallel to graph.edges
    std::vector<std::vector<int>> cell_weights;   // per level, per cell

    bool is_double(size_t edge_index) const { return edge_class[edge_index] == EdgeClass::dbl; }
};

WeightedLattice classify_edges(const GrassmannShape& shape, FillVariant variant,
                               int capacity = default_capacity);

}  // namespace grassmann
