#include "grassmann/cohomology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grassmann {

const char* to_string(Provenance provenance) {
    return provenance == Provenance::f2_fast_path ? "f2-fast-path" : "snf-oracle";
}

BinaryMatrix boundary_matrix_mod2(const WeightedLattice& lattice, int degree) {
    const int dim = lattice.graph.shape.dimension();
    if (degree < 0 || degree > dim)
        throw std::out_of_range("boundary degree " + std::to_string(degree) + " outside 0.." +
                                std::to_string(dim));
    BinaryMatrix m;
    m.rows = static_cast<int>(lattice.graph.level(degree).size());
    m.cols = degree == dim ? 0 : static_cast<int>(lattice.graph.level(degree + 1).size());
    for (size_t e = 0; e < lattice.graph.edges.size(); ++e) {
        const EdgeRef& ref = lattice.graph.edge_refs[e];
        if (ref.source_degree != degree || !lattice.is_double(e)) continue;
        m.set(ref.source_index, ref.target_index);
    }
    return m;
}

CohomologyTable cohomology(const GrassmannShape& shape, FillVariant variant, int capacity) {
    WeightedLattice lattice = classify_edges(shape, variant, capacity);
    const int dim = shape.dimension();

    std::vector<int> rank(static_cast<size_t>(dim) + 1, 0);  // rank[j] pairs degrees j, j+1
    for (int j = 0; j < dim; ++j)
        rank[static_cast<size_t>(j)] = rank_mod2(boundary_matrix_mod2(lattice, j));

    CohomologyTable table{shape, variant, {}, Provenance::f2_fast_path};
    table.groups.reserve(static_cast<size_t>(dim) + 1);
    for (int j = 0; j <= dim; ++j) {
        int cells = static_cast<int>(lattice.graph.level(j).size());
        int r_here = j < dim ? rank[static_cast<size_t>(j)] : 0;
        int r_below = j > 0 ? rank[static_cast<size_t>(j) - 1] : 0;
        AbelianGroup group;
        group.free_rank = cells - r_here - r_below;
        group.torsion.assign(static_cast<size_t>(r_below), 2);
        table.groups.push_back(std::move(group));
    }
    return table;
}

std::vector<int> solve_signs(const WeightedLattice& lattice) {
    const auto& graph = lattice.graph;

    std::vector<int> variable(graph.edges.size(), -1);
    int num_variables = 0;
    for (size_t e = 0; e < graph.edges.size(); ++e)
        if (lattice.is_double(e)) variable[e] = num_variables++;

    // Outgoing double edges grouped by (degree, source index) for path chaining.
    std::map<std::pair<int, int>, std::vector<size_t>> outgoing;
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        if (!lattice.is_double(e)) continue;
        const EdgeRef& ref = graph.edge_refs[e];
        outgoing[{ref.source_degree, ref.source_index}].push_back(e);
    }

    // All length-2 double paths x -> y -> z, grouped by the pair (x, z).
    std::map<std::tuple<int, int, int>, std::vector<std::pair<size_t, size_t>>> diamonds;
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        if (!lattice.is_double(e)) continue;
        const EdgeRef& first = graph.edge_refs[e];
        auto it = outgoing.find({first.source_degree + 1, first.target_index});
        if (it == outgoing.end()) continue;
        for (size_t f : it->second) {
            const EdgeRef& second = graph.edge_refs[f];
            diamonds[{first.source_degree, first.source_index, second.target_index}].push_back(
                {e, f});
        }
    }

    std::vector<ParityEquation> equations;
    for (const auto& [key, paths] : diamonds) {
        if (paths.size() == 2) {
            // Two double paths must cancel: the product of the four edge signs
            // is -1, i.e. the four sign bits sum to 1 mod 2.
            ParityEquation eq;
            eq.rhs = 1;
            for (const auto& [e, f] : paths) {
                eq.variables.push_back(variable[e]);
                eq.variables.push_back(variable[f]);
            }
            equations.push_back(std::move(eq));
        } else if (paths.size() != 0) {
            // A box-addition diamond has exactly two interiors and a same-row
            // or same-column pair has a single path through one single edge,
            // so any other count contradicts the cell structure.
            throw falsification_error("double-path count " + std::to_string(paths.size()) +
                                      " between cells two degrees apart; expected 0 or 2");
        }
    }

    auto solution = solve_mod2(num_variables, equations);
    if (!solution)
        throw falsification_error(
            "diamond parity system is infeasible; no sign assignment squares to zero");

    std::vector<int> signs(graph.edges.size(), 0);
    for (size_t e = 0; e < graph.edges.size(); ++e)
        if (variable[e] >= 0)
            signs[e] = (*solution)[static_cast<size_t>(variable[e])] ? -1 : 1;
    return signs;
}

std::vector<SignedIncidenceMatrix> signed_boundaries(const WeightedLattice& lattice,
                                                     const std::vector<int>& signs) {
    const auto& graph = lattice.graph;
    const int dim = graph.shape.dimension();
    std::vector<SignedIncidenceMatrix> deltas(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        deltas[static_cast<size_t>(j)].rows = static_cast<int>(graph.level(j).size());
        deltas[static_cast<size_t>(j)].cols = static_cast<int>(graph.level(j + 1).size());
    }
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        if (!lattice.is_double(e)) continue;
        const EdgeRef& ref = graph.edge_refs[e];
        deltas[static_cast<size_t>(ref.source_degree)]
            .entries[{ref.source_index, ref.target_index}] = 2 * signs[e];
    }
    return deltas;
}

namespace {

// delta_{j+1} * delta_j over the integers; entries are small (+-4 sums).
void require_composite_zero(const SignedIncidenceMatrix& first,
                            const SignedIncidenceMatrix& second, int degree) {
    std::map<std::pair<int, int>, long long> product;
    for (const auto& [pos1, v1] : first.entries) {
        for (const auto& [pos2, v2] : second.entries) {
            if (pos1.second != pos2.first) continue;
            product[{pos1.first, pos2.second}] += static_cast<long long>(v1) * v2;
        }
    }
    for (const auto& [pos, value] : product) {
        if (value != 0)
            throw falsification_error("delta.delta != 0 at degrees " + std::to_string(degree) +
                                      "," + std::to_string(degree + 1) + " entry (" +
                                      std::to_string(pos.first) + "," +
                                      std::to_string(pos.second) + ") = " +
                                      std::to_string(value));
    }
}

BigMatrix to_big_matrix(const SignedIncidenceMatrix& m) {
    BigMatrix big(static_cast<size_t>(m.rows),
                  std::vector<BigInt>(static_cast<size_t>(m.cols), 0));
    for (const auto& [pos, value] : m.entries)
        big[static_cast<size_t>(pos.first)][static_cast<size_t>(pos.second)] = value;
    return big;
}

}  // namespace

CohomologyTable cohomology_snf_oracle(const GrassmannShape& shape, FillVariant variant,
                                      int capacity) {
    shape.require_within(capacity, "cohomology_snf_oracle");
    WeightedLattice lattice = classify_edges(shape, variant, capacity);
    std::vector<int> signs = solve_signs(lattice);
    std::vector<SignedIncidenceMatrix> deltas = signed_boundaries(lattice, signs);

    const int dim = shape.dimension();
    for (int j = 0; j + 1 < dim; ++j)
        require_composite_zero(deltas[static_cast<size_t>(j)], deltas[static_cast<size_t>(j) + 1],
                               j);

    // rank_q[j] = rational rank of delta_j = number of invariant factors.
    std::vector<std::vector<BigInt>> factors(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        factors[static_cast<size_t>(j)] = smith_normal_form(to_big_matrix(deltas[static_cast<size_t>(j)]));
        for (const BigInt& d : factors[static_cast<size_t>(j)]) {
            if (d != 2)
                throw falsification_error("invariant factor " + d.str() + " of delta_" +
                                          std::to_string(j) + " for Gr(" +
                                          std::to_string(shape.k) + "," + std::to_string(shape.n) +
                                          "); expected every factor to be 2");
        }
    }

    CohomologyTable table{shape, variant, {}, Provenance::snf_oracle};
    table.groups.reserve(static_cast<size_t>(dim) + 1);
    for (int j = 0; j <= dim; ++j) {
        int cells = static_cast<int>(lattice.graph.level(j).size());
        int r_here = j < dim ? static_cast<int>(factors[static_cast<size_t>(j)].size()) : 0;
        int r_below = j > 0 ? static_cast<int>(factors[static_cast<size_t>(j) - 1].size()) : 0;
        AbelianGroup group;
        group.free_rank = cells - r_here - r_below;
        for (int i = 0; i < r_below; ++i) group.torsion.push_back(2);
        table.groups.push_back(std::move(group));
    }

    CohomologyTable fast = cohomology(shape, variant, capacity);
    if (fast.groups != table.groups)
        throw falsification_error("SNF oracle disagrees with the GF(2) fast path for Gr(" +
                                  std::to_string(shape.k) + "," + std::to_string(shape.n) + ") " +
                                  to_string(variant));
    return table;
}

CohomologyTable homology(const GrassmannShape& shape, int capacity) {
    FillVariant variant = shape.n % 2 == 0 ? FillVariant::standard : FillVariant::shifted;
    CohomologyTable table = cohomology(shape, variant, capacity);
    std::reverse(table.groups.begin(), table.groups.end());
    return table;
}

bool is_orientable(const GrassmannShape& shape, int capacity) {
    WeightedLattice lattice = classify_edges(shape, FillVariant::standard, capacity);
    const int dim = shape.dimension();

    bool top_incidence_nonzero = false;
    for (size_t e = 0; e < lattice.graph.edges.size(); ++e) {
        if (lattice.graph.edge_refs[e].source_degree != dim - 1) continue;
        if (lattice.is_double(e)) top_incidence_nonzero = true;
    }

    bool orientable = shape.n % 2 == 0;
    if (orientable == top_incidence_nonzero)
        throw falsification_error("orientability parity and top-cell incidence witness disagree "
                                  "for Gr(" +
                                  std::to_string(shape.k) + "," + std::to_string(shape.n) + ")");
    return orientable;
}

}  // namespace grassmann
