#pragma once

#include "k3lat/lattice.hpp"
#include "k3lat/normal_form.hpp"

namespace k3lat {

// An elliptic K3 fibration with h fibers of type I_p, i1count fibers of type
// I_1, and a torsion section t_1 hitting component k_j of fiber j.
struct FibrationConfig {
    int p = 0;
    int h = 0;
    std::vector<int> k;
    int i1count = 0;
};

FibrationConfig standard_config(int p);  // the three families: 3, 5, 7

// Torsion constraint sum_j k_j (1 - k_j/p) = 4, evaluated exactly.
bool check_component_numbers(const FibrationConfig& cfg);

// Euler characteristic bookkeeping p*h + i1count = 24.
bool check_euler(const FibrationConfig& cfg);

// Ambient divisor space: basis s, F, C_i^{(j)} (i = 1..p-1, j = 1..h), the
// zero-component C_0 eliminated via C_0 = F - sum_i C_i.
MatZ ambient_gram(const FibrationConfig& cfg);

// Index of basis elements in the ambient space.
std::size_t ambient_dim(const FibrationConfig& cfg);
std::size_t ambient_comp_index(const FibrationConfig& cfg, int fiber, int comp);

// The unique ambient class with t*s = 0, t*F = 1 and t*C_i^{(j)} = 1 exactly
// when i = m*k_j mod p.  Verifies t^2 = -2.
std::vector<Rat> solve_torsion_section(const FibrationConfig& cfg, int m);

struct NSModel {
    FibrationConfig cfg;
    std::vector<std::string> ambient_labels;
    MatZ ambient;                          // ambient Gram
    std::vector<std::vector<Rat>> sections;  // t_1 .. t_{p-1}, ambient coords
    MatQ ns_basis;                         // rows: NS basis in ambient coords
    std::vector<std::string> ns_labels;
    Lattice lattice;                       // Gram on the NS basis
};

NSModel build_ns(const FibrationConfig& cfg);

// Convenience: the Neron-Severi lattice of the standard family for p.
Lattice ns_lattice(int p);

struct SigmaAction {
    MatZ mat;   // action on NS column coordinates
    int order;
};

// Fiberwise translation by t_1: s -> t_1, t_m -> t_{m+1}, F -> F,
// C_i^{(j)} -> C_{i+k_j}^{(j)} with indices mod p.  Must be integral on NS.
SigmaAction sigma_matrix(const NSModel& model);

// Fixed sublattice of sigma inside NS, with its HNF basis (NS coords).
SublatticeBasis invariant_sublattice(const NSModel& model, const SigmaAction& s);

struct OmegaResult {
    Lattice lattice;  // Gram on the b-basis below
    MatZ basis;       // rows: b_1 .. b_n in NS coordinates
};

// Orthogonal complement of the invariant part, presented on the b-basis;
// checks both the Gram and the span against the computed complement.
OmegaResult omega_lattice(const NSModel& model, const SigmaAction& s);

// True iff sigma fixes every generator of the discriminant group of the
// complement modulo the complement itself.
bool disc_group_action(const NSModel& model, const SigmaAction& s,
                       const OmegaResult& omega);

int shioda_tate_rank(const FibrationConfig& cfg);

Int ns_det_formula(const FibrationConfig& cfg);

struct LefschetzResult {
    Int a, b, rho_min, m_max;
};

// Solves a - b = mu - 2, a + (p-1) b = 22 for the given fixed-point count mu.
LefschetzResult lefschetz_solve(int p, int fixedpoints);

}  // namespace k3lat
