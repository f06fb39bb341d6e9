#include "grassmann/weighted_lattice.hpp"

namespace grassmann {

WeightedLattice classify_edges(const GrassmannShape& shape, FillVariant variant, int capacity) {
    WeightedLattice lattice{build_bruhat_graph(shape, capacity), variant, {}, {}};

    lattice.cell_weights.reserve(lattice.graph.levels.size());
    for (const auto& level : lattice.graph.levels) {
        std::vector<int> weights;
        weights.reserve(level.size());
        for (const Partition& cell : level)
            weights.push_back(checkered_weight(cell, shape, variant));
        lattice.cell_weights.push_back(std::move(weights));
    }

    lattice.edge_class.reserve(lattice.graph.edges.size());
    for (size_t e = 0; e < lattice.graph.edges.size(); ++e) {
        const CoverEdge& edge = lattice.graph.edges[e];
        const EdgeRef& ref = lattice.graph.edge_refs[e];
        int w_source = lattice.cell_weights[static_cast<size_t>(ref.source_degree)]
                                           [static_cast<size_t>(ref.source_index)];
        int w_target = lattice.cell_weights[static_cast<size_t>(ref.source_degree) + 1]
                                           [static_cast<size_t>(ref.target_index)];
        bool weight_unchanged = w_source == w_target;
        bool box_is_one = !box_carries_q(edge.box_row, edge.box_col, shape, variant);
        if (weight_unchanged != box_is_one)
            throw falsification_error(
                "edge " + to_string(edge.source) + " -> " + to_string(edge.target) +
                ": weight criterion and letter criterion disagree");
        lattice.edge_class.push_back(weight_unchanged ? EdgeClass::dbl : EdgeClass::single);
    }
    return lattice;
}

}  // namespace grassmann
