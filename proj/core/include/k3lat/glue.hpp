#pragma once

#include <optional>

#include "k3lat/discform.hpp"

namespace k3lat {

// Glue datum for an index-p overlattice of <2d> + Omega: the adjoined class is
// (coeff_l * L + v) / p with v given in Omega coordinates.
struct GlueVector {
    Int two_d;               // L^2 = 2d of the rank-one summand
    Lattice omega;           // the definite summand
    Int coeff_l = 1;
    std::vector<Int> v;      // Omega coordinates
    Int p;
};

// Arithmetic glue conditions: L^2 = 0 (2p), v^2 = 0 (2p), L^2 + v^2 = 0 (2p^2).
bool glue_conditions(const Int& lsq, const Int& vsq, const Int& p);

// Even index-p overlattice spanned by <2d> + Omega and the glue class.
// Throws: NotInDual / ConditionsFail / OddResult (as Error messages).
Lattice overlattice_from_glue(const GlueVector& g);

struct GlueSearchResult {
    bool found = false;
    GlueVector glue;        // valid when found
    Lattice overlattice;    // valid when found
    std::size_t cosets_tried = 0;
};

// Exhaustive search over representatives of Omega^dual/Omega (lifted to
// p * (dual generators)) for a valid glue vector.
GlueSearchResult search_glue(const Int& two_d, const Lattice& omega, const Int& p);

}  // namespace k3lat
