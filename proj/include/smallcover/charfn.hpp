/*
 * Characteristic functions on simple polytopes and the two Betti-number
 * pipelines for the associated small covers: the Suciu-Trevisan sum of
 * reduced Betti numbers of induced subcomplexes, and the mod-2 Betti
 * numbers via the h-vector.
 */
#ifndef SMALLCOVER_CHARFN_HPP
#define SMALLCOVER_CHARFN_HPP

#include <vector>

#include "smallcover/betti.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

// A GF(2) matrix bound to a polytope's facet labeling: column j is the
// vector assigned to facet F_j.
struct CharacteristicFunction {
    SimplePolytope polytope;
    BitMatrix matrix;  // rows = dim, cols = num_facets
};

struct ValidationResult {
    bool valid = false;
    std::vector<std::vector<int>> failing_vertices;
};

// Checks the basis condition at every vertex: the dim x dim matrix of the
// vertex's facet columns must be invertible over GF(2). Returns every
// offending vertex on failure.
ValidationResult validate(const CharacteristicFunction& chi);

// The built-in families, bound to cube(n) / polygon_prism(5,n) /
// polygon_prism(6,n). All three validate.
CharacteristicFunction chi_kn(int n);   // [I_n | sum e | e_2 .. e_n], n >= 1
CharacteristicFunction chi_p5(int n);   // [I_n | I_n | sum e], n >= 2
CharacteristicFunction chi_p6(int n);   // [I_n | sum e | I_n | sum e], n >= 2

struct SupportProfile {
    std::vector<int> t;        // the row subset, 1-based, sorted
    BitVector chi_t;           // XOR of the selected rows
    std::vector<int> support;  // 1-based positions of nonzero entries
};

SupportProfile support_profile(const CharacteristicFunction& chi, const std::vector<int>& t);

// Rational Betti numbers of the small cover X(P, chi): for each subset T of
// the rows, add the reduced Betti numbers (shifted up by one degree) of the
// subcomplex of the dual complex induced on supp(chi_T). Validates chi
// first. Deterministic for any worker count.
BettiVector suciu_trevisan_betti(const CharacteristicFunction& chi, int workers = 1);

// Mod-2 Betti numbers of any small cover over P: the h-vector of P.
BettiVector dj_mod2_betti(const SimplePolytope& p);

}  // namespace smallcover

#endif
