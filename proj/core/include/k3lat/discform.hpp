#pragma once

#include "k3lat/lattice.hpp"

namespace k3lat {

// Finite quadratic form: finite abelian group with q valued in Q/2Z and
// induced bilinear form valued in Q/Z.
struct FiniteQuadraticForm {
    std::vector<Int> orders;  // invariant factors >= 2, divisibility chain
    std::vector<Rat> qvals;   // q(g_i), reduced into [0,2)
    MatQ bil;                 // b(g_i,g_j), reduced into [0,1)
    MatQ gens;                // rows: generator coordinates in the source lattice basis
                              // (empty when the form was built synthetically)

    std::size_t ngen() const { return orders.size(); }
    Int group_order() const;
    bool is_trivial() const { return orders.empty(); }
};

// Discriminant form of a nondegenerate even lattice, via SNF of the Gram.
FiniteQuadraticForm discriminant_group(const Lattice& l);

// Build a form from diagonal data: generators of the given prime order p with
// q(g_i) = qs[i] (mod 2), pairwise orthogonal.
FiniteQuadraticForm diagonal_form(const Int& p, const std::vector<Rat>& qs);

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a,
                               const FiniteQuadraticForm& b);

FiniteQuadraticForm negated(const FiniteQuadraticForm& f);

enum class DiscClass { Square, NonSquare };

struct FormNormal {
    Int p;
    std::size_t n = 0;
    DiscClass discclass = DiscClass::Square;

    bool operator==(const FormNormal&) const = default;
};

// Complete isomorphism invariant for forms all of whose invariant factors are
// one odd prime p: rank and the square class mod p of the product of the u_i
// in q(g_i) = 2 u_i / p after diagonalization.
FormNormal finite_form_normal(const FiniteQuadraticForm& f);

// True iff f1 is isomorphic to -f2.  Homogeneous odd-prime forms are compared
// by normal form; otherwise an exhaustive generator-matching search is used
// (bounded by max_order for feasibility).
bool is_opposite(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                 const Int& max_order = Int(729));

std::size_t min_generators(const FiniteQuadraticForm& f);

}  // namespace k3lat
