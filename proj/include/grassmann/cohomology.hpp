#pragma once

#include <map>
#include <utility>
#include <vector>

#include "grassmann/gf2.hpp"
#include "grassmann/snf.hpp"
#include "grassmann/weighted_lattice.hpp"

namespace grassmann {

// Finitely generated abelian group: free rank plus invariant-factor torsion
// orders (each dividing the next).  For these complexes every torsion order
// comes out as 2; that is checked wherever the integer route runs, not assumed.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<long long> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup&) const = default;
};

enum class Provenance { f2_fast_path, snf_oracle };

const char* to_string(Provenance provenance);

struct CohomologyTable {
    GrassmannShape shape;
    FillVariant variant;
    std::vector<AbelianGroup> groups;  // indexed by degree 0 .. k(n-k)
    Provenance provenance = Provenance::f2_fast_path;
};

// Halved coboundary between degrees j and j+1, reduced mod 2: entry 1 exactly
// on double edges.  Rows = cells of degree j, columns = degree j+1, canonical
// order on both.  degree == k(n-k) yields the empty 0-column matrix.
BinaryMatrix boundary_matrix_mod2(const WeightedLattice& lattice, int degree);

// Integral cohomology from GF(2) ranks alone:
//   H^j = Z^{c_j - r_j - r_{j-1}}  +  (Z/2)^{r_{j-1}}
// valid because the halved coboundary has unit invariant factors -- a fact the
// SNF oracle verifies on every shape it covers.
CohomologyTable cohomology(const GrassmannShape& shape, FillVariant variant,
                           int capacity = default_capacity);

// Sign for each double edge making the composite of consecutive coboundaries
// vanish: one parity equation per diamond with two all-double paths.  Entries
// are +1/-1 for double edges and 0 for single ones, parallel to graph.edges.
// Throws falsification_error if the parity system has no solution or a
// diamond carries an odd number of double paths.
std::vector<int> solve_signs(const WeightedLattice& lattice);

// Coboundary with entries +-2 on double edges, signs as solved.
struct SignedIncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, int> entries;
};

std::vector<SignedIncidenceMatrix> signed_boundaries(const WeightedLattice& lattice,
                                                     const std::vector<int>& signs);

// Full integer route: solved signs, delta.delta = 0 asserted exactly, kernels
// and images via Smith normal form.  Must reproduce the fast path bit for bit
// and produce only torsion order 2; anything else throws falsification_error.
CohomologyTable cohomology_snf_oracle(const GrassmannShape& shape, FillVariant variant,
                                      int capacity = oracle_capacity);

// Integral homology via duality: the reversed constant-coefficient table when
// n is even, the reversed twisted-coefficient table when n is odd.  Groups are
// indexed homologically (H_0 first).
CohomologyTable homology(const GrassmannShape& shape, int capacity = default_capacity);

// True iff n is even.  Also checks the graph-level witness -- the incidence
// into the top cell vanishes exactly in the orientable case -- and throws
// falsification_error if the two disagree.
bool is_orientable(const GrassmannShape& shape, int capacity = default_capacity);

}  // namespace grassmann
