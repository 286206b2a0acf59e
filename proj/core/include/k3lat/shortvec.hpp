#pragma once

#include "k3lat/lattice.hpp"

#include <map>

namespace k3lat {

struct EnumReport {
    std::string lattice;
    Int bound;
    std::map<Int, Int> counts;           // norm -> vector count, with +-signs
    Int min = 0;                         // minimum nonzero norm seen
    std::vector<std::vector<Int>> vectors;  // populated when requested
};

// Exact Gram-only LLL (delta = 3/4): t * g * t^T = gram, t unimodular.
// Requires a positive definite input.
struct LllResult {
    MatZ gram;
    MatZ t;
};
LllResult lll_gram(const MatZ& gram);

// All nonzero lattice vectors with |norm| <= bound, enumerated exactly.
// Negative definite lattices are negated internally and reported with their
// own sign convention.  Throws on indefinite or degenerate input.
EnumReport short_vectors(const Lattice& l, const Int& bound, bool keep_vectors = false);

Int min_norm(const Lattice& l);

// True iff the vectors of exactly the given norm span the whole lattice.
bool spans_at_norm(const Lattice& l, const Int& norm);

// Sphere-packing density V_n / sqrt(|det|) with packing radius sqrt(|min|)/2.
// The only floating-point quantity in the library; approximate by nature.
double density(const Lattice& l);

}  // namespace k3lat
