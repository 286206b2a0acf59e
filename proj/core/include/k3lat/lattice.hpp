#pragma once

#include <string>
#include <vector>

#include "k3lat/normal_form.hpp"

namespace k3lat {

// Integer quadratic lattice: free Z-module with symmetric Gram matrix.
struct Lattice {
    std::size_t rank = 0;
    MatZ gram;
    std::string label;

    Lattice() = default;
    Lattice(MatZ g, std::string lab = "");

    Int det() const { return det_exact(gram); }
    bool is_even() const;
};

struct Signature {
    std::size_t plus = 0;
    std::size_t minus = 0;
};

Lattice direct_sum(const std::vector<Lattice>& ls);
Lattice rescale(const Lattice& l, const Int& n);

// Exact signature of a nondegenerate Gram matrix: positive-root count of the
// characteristic polynomial by Descartes' rule (exact, all roots real).
Signature signature(const Lattice& l);

// Pairwise inner products of the given coordinate vectors under l's Gram.
MatZ gram_of_vectors(const Lattice& l, const std::vector<std::vector<Int>>& vs);
MatQ gram_of_vectors_q(const Lattice& l, const std::vector<std::vector<Rat>>& vs);

// sqrt(det(sub)/det(l)); both lattices must have equal rank and square ratio.
Int sublattice_index(const Lattice& l, const Lattice& sub);

struct SublatticeBasis {
    Lattice lattice;   // induced Gram on the basis below
    MatZ basis;        // rows: coordinates in the host lattice
};

// Primitive sublattice {x in l : x.s = 0 for all s in span}, basis in HNF.
SublatticeBasis orthogonal_complement(const Lattice& l,
                                      const std::vector<std::vector<Int>>& span);

// Characteristic polynomial coefficients of G, leading first.
std::vector<Rat> char_poly(const MatZ& g);

}  // namespace k3lat
