#pragma once

#include <optional>

#include "k3lat/mat.hpp"

namespace k3lat {

struct HnfResult {
    MatZ h;  // row Hermite normal form: pivots positive, entries above reduced into [0, pivot)
    MatZ u;  // unimodular, u * m = h
    std::size_t rank = 0;
};

struct SnfResult {
    MatZ d;  // diagonal, d_i >= 0, d_i | d_{i+1}
    MatZ u;  // unimodular
    MatZ v;  // unimodular, u * m * v = d
};

HnfResult hnf(const MatZ& m);
SnfResult snf(const MatZ& m);

Int det_exact(const MatZ& m);   // fraction-free (Bareiss) elimination
Rat det_exact_q(const MatQ& m);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<Rat> x;          // a particular solution when one exists
    std::size_t nullity = 0;     // solution-space rank when underdetermined
};

SolveResult solve_linear(const MatQ& a, const std::vector<Rat>& b);

// Basis of {x in Z^n : m * x^T = 0}, one kernel vector per row.  The basis is
// primitive (saturated) since it comes from a unimodular column transform.
MatZ integer_kernel(const MatZ& m);

MatQ inverse(const MatQ& m);

}  // namespace k3lat
