#pragma once

#include "k3lat/lattice.hpp"

namespace k3lat {

// Named lattices.  Catalog keys: U, U(n), A(n), E8(-1), Lambda_K3, rank1(2d),
// Upsilon, Omega3, Omega5, Omega7, M_NS3, M_NS5, M_NS7.
// A(n) and E8(-1) are negative definite throughout.
Lattice standard_lattice(const std::string& name);

Lattice lattice_U();
Lattice lattice_U_scaled(const Int& n);
Lattice lattice_A(int n);       // negative definite root lattice A_n
Lattice lattice_E8_neg();
Lattice lattice_K3();           // U^3 + E8(-1)^2
Lattice lattice_rank1(const Int& two_d);
Lattice lattice_Upsilon();      // [[4,1],[1,2]]
Lattice lattice_Omega(int p);   // p in {3,5,7}

}  // namespace k3lat
