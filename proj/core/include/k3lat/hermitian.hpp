#pragma once

#include "k3lat/cyclo.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// Hermitian Z[omega_p]-lattice: module spanned by `gens` inside Z[omega_p]^n
// with h(a, b) = sum scale_i * a_i * conj(b_i), scale_i conjugation-fixed.
struct HermitianLattice {
    int p = 0;
    std::size_t n = 0;
    std::vector<CycInt> scale;
    std::vector<std::vector<CycInt>> gens;
};

CycInt herm_pairing(const HermitianLattice& h, const std::vector<CycInt>& a,
                    const std::vector<CycInt>& b);

// Gram of the given vectors under the trace bilinear form -(1/p) Tr(h(., .)).
MatQ trace_gram(const HermitianLattice& h,
                const std::vector<std::vector<CycInt>>& vecs);

struct TraceLattice {
    Lattice lattice;                         // Gram of the HNF basis
    MatZ basis;                              // rows: flattened Z-coordinates
    std::vector<std::vector<CycInt>> basis_vectors;
};

// The Z-lattice spanned by {w^j g : g generator, 0 <= j <= p-2} with the trace
// bilinear form; basis extracted by HNF in generator-major, power-minor
// coordinate order.  Throws when the form is not Z-valued on the span.
TraceLattice trace_lattice(const HermitianLattice& h);

// flattening helpers (component-major, power-minor)
std::vector<Int> flatten(const std::vector<CycInt>& v);
std::vector<CycInt> unflatten(int p, std::size_t n, const std::vector<Int>& c);

// The congruence lattices of the three symplectic-automorphism families,
// with explicit generator lists l_1 ... l_{12|16|18}.
HermitianLattice build_Lp(int p);

// Evaluates the two defining congruences on a raw vector.
bool membership_Lp(int p, const std::vector<CycInt>& x);

// Scalars used by the hermitian forms.
CycInt lp_scale_tau();        // p=5: tau = f conj(f), f = 1-(w^2+w^3)
CycInt lp_scale_f1_sq();      // p=7: f1 * conj(f1)
CycInt lp_scale_f2_sq();      // p=7: f2 * conj(f2)

}  // namespace k3lat
