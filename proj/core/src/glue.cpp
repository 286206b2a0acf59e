#include "k3lat/glue.hpp"

#include <functional>

namespace k3lat {

bool glue_conditions(const Int& lsq, const Int& vsq, const Int& p) {
    if (p != 3 && p != 5 && p != 7) throw Error("glue_conditions: bad prime");
    Int twop = 2 * p;
    Int twop2 = 2 * p * p;
    return mod_floor(lsq, twop) == 0 && mod_floor(vsq, twop) == 0 &&
           mod_floor(lsq + vsq, twop2) == 0;
}

Lattice overlattice_from_glue(const GlueVector& g) {
    const std::size_t m = g.omega.rank;
    if (g.v.size() != m) throw Error("overlattice_from_glue: bad glue vector length");
    const Int& p = g.p;

    // v/p must pair integrally with Omega
    for (std::size_t j = 0; j < m; ++j) {
        Int acc = 0;
        for (std::size_t k = 0; k < m; ++k) acc += g.v[k] * g.omega.gram(k, j);
        if (mod_floor(acc, p) != 0) throw Error("NotInDual: v/p outside the dual lattice");
    }

    std::vector<std::vector<Int>> vv{g.v};
    Int vsq = gram_of_vectors(g.omega, vv)(0, 0);
    Int lsq = g.two_d * g.coeff_l * g.coeff_l;
    if (!glue_conditions(lsq, vsq, p))
        throw Error("ConditionsFail: glue congruences violated");

    // host basis scaled by p plus the glue class, HNF -> basis of p*N
    const std::size_t n = m + 1;
    MatZ genmat(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) genmat(i, i) = p;
    genmat(n, 0) = g.coeff_l;
    for (std::size_t j = 0; j < m; ++j) genmat(n, 1 + j) = g.v[j];
    HnfResult h = hnf(genmat);
    if (h.rank != n) throw Error("overlattice_from_glue: rank drop");

    Lattice host = direct_sum({Lattice(MatZ{{g.two_d}}, "<2d>"), g.omega});
    MatZ gramN(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int acc = inner(host.gram, h.h.row(i), h.h.row(j));
            // basis of N is (rows of h)/p, so divide pairings by p^2
            Int p2 = p * p;
            if (mod_floor(acc, p2) != 0)
                throw Error("overlattice_from_glue: non-integral result");
            gramN(i, j) = acc / p2;
        }
    Lattice result(gramN, "overlattice");
    if (!result.is_even()) throw Error("OddResult: glue parity violated");
    return result;
}

GlueSearchResult search_glue(const Int& two_d, const Lattice& omega, const Int& p) {
    FiniteQuadraticForm disc = discriminant_group(omega);
    const std::size_t ng = disc.ngen();
    const std::size_t m = omega.rank;

    GlueSearchResult res;
    std::vector<Int> coeff(ng, Int(0));
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == ng) {
            ++res.cosets_tried;
            // v = p * sum coeff_i * g_i, an integral Omega vector
            std::vector<Int> v(m, Int(0));
            for (std::size_t a = 0; a < ng; ++a)
                for (std::size_t k = 0; k < m; ++k)
                    v[k] += to_int(Rat(coeff[a]) * Rat(p) * disc.gens(a, k));
            bool nonzero = false;
            for (const Int& x : v) nonzero = nonzero || x != 0;
            if (!nonzero) return false;
            GlueVector g{two_d, omega, Int(1), v, p};
            try {
                res.overlattice = overlattice_from_glue(g);
            } catch (const Error&) {
                return false;
            }
            res.glue = g;
            res.found = true;
            return true;
        }
        for (Int c = 0; c < disc.orders[i]; ++c) {
            coeff[i] = c;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    rec(0);
    return res;
}

}  // namespace k3lat
