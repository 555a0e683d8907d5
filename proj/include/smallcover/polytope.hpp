/*
 * Combinatorial simple polytopes: labeled facets plus vertex-facet
 * incidence. No coordinates are stored; everything downstream depends only
 * on the face lattice. Builders cover the cube and polygon-prism families
 * with their fixed facet labelings.
 */
#ifndef SMALLCOVER_POLYTOPE_HPP
#define SMALLCOVER_POLYTOPE_HPP

#include <string>
#include <vector>

#include "smallcover/errors.hpp"
#include "smallcover/simplicial.hpp"

namespace smallcover {

struct SimplePolytope {
    int dim = 0;
    std::vector<std::string> facet_labels;
    // each vertex as the sorted set of 1-based facet indices containing it
    std::vector<std::vector<int>> vertices;

    int num_facets() const { return static_cast<int>(facet_labels.size()); }

    // Checks simplicity (every vertex lies on exactly dim facets), facet
    // coverage, label distinctness, and vertex distinctness.
    void check() const;
};

// The n-cube with facets F_1..F_2n: F_i is the -1 side and F_{n+i} the +1
// side in direction i. 2^n vertices, one per sign vector.
SimplePolytope cube(int n);

// The prism P_m x I^{n-2} over an m-gon, m >= 3, n >= 2 (n = 2 gives the
// bare polygon). Facet labels: cube-minus sides at F_1..F_{n-2}, polygon
// edges E_1, E_2 at F_{n-1}, F_n, edges E_3..E_{m-3} next, then the
// cube-plus sides, and the last three edges at the last three indices.
// For m = 5 this places E_3,E_4,E_5 at F_{2n-1},F_{2n},F_{2n+1}; for m = 6
// it places E_3 at F_{n+1} and E_4,E_5,E_6 at F_{2n},F_{2n+1},F_{2n+2}.
SimplePolytope polygon_prism(int m, int n);

// The boundary complex of the dual polytope: faces are the facet sets with
// nonempty common intersection; maximal faces are the vertex sets.
struct DualComplexView {
    SimplicialComplex complex;
    int polytope_dim = 0;
};

DualComplexView dual_complex(const SimplePolytope& p);

// Face-count vector (f_{-1}, f_0, ..., f_{n-1}) of a pure complex of
// dimension n-1, and its h-vector. Throws NotPureError otherwise.
std::vector<std::int64_t> f_vector(const DualComplexView& k);
std::vector<std::int64_t> h_vector(const DualComplexView& k);

}  // namespace smallcover

#endif
