/*
 * Finite abstract simplicial complexes with exact reduced rational homology.
 *
 * Complexes are stored by their maximal faces only; faces of a given degree
 * are generated on demand. Homology is computed from integer boundary
 * matrices (orientation signs from sorted vertex order) with the empty
 * simplex included, so the complex consisting of the empty face alone has
 * reduced Betti number 1 in degree -1. Ranks are exact: sparse integer
 * elimination, no floating point anywhere.
 */
#ifndef SMALLCOVER_SIMPLICIAL_HPP
#define SMALLCOVER_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "smallcover/betti.hpp"
#include "smallcover/errors.hpp"

namespace smallcover {

class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Builds a complex from an arbitrary list of faces: faces are sorted,
    // deduplicated and reduced so that no maximal face contains another.
    // Empty input (or only empty faces) yields the complex whose sole face
    // is the empty simplex.
    static SimplicialComplex from_faces(std::vector<std::vector<int>> faces);

    const std::vector<std::vector<int>>& maximal_faces() const { return maximal_; }
    std::vector<int> vertices() const;
    std::size_t num_vertices() const;

    // Dimension of the largest face; -1 for the empty complex.
    int dimension() const;
    bool is_pure() const;

    // All faces with exactly k+1 vertices (degree k), each sorted; the
    // result is sorted lexicographically. k = -1 gives the empty face.
    std::vector<std::vector<int>> faces_of_degree(int k) const;

    bool operator==(const SimplicialComplex&) const = default;

  private:
    std::vector<std::vector<int>> maximal_;  // sorted faces, sorted list
};

// Faces of K contained in W (1 or more vertices plus the empty face),
// reduced to maximal faces. W must consist of vertices of K.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<int>& w);

// Exact reduced rational Betti numbers in degrees -1..max_degree.
BettiVector reduced_betti(const SimplicialComplex& k, int max_degree);

// Sparse integer matrix in triplet form, used for boundary matrices.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        std::int64_t value;
    };
    std::vector<Entry> entries;
};

// Boundary map from degree-k chains to degree-(k-1) chains, with both face
// lists in the order produced by faces_of_degree. k = 0 gives the
// augmentation row (all ones) onto the empty simplex.
IntMatrix boundary_matrix(const SimplicialComplex& k, int degree);

// Exact rank over the integers (equivalently over Q): sparse elimination
// with gcd-scaled row updates; falls back to arbitrary precision if 64-bit
// intermediates would overflow.
int rank_exact(const IntMatrix& m);

}  // namespace smallcover

#endif
