#include "k3lat/catalog.hpp"
#include "k3lat/discform.hpp"
#include "k3lat/hermitian.hpp"

#include <doctest.h>

using namespace k3lat;

TEST_CASE("trace gram of the generator lists equals the catalog gram") {
    for (int p : {3, 5, 7}) {
        CAPTURE(p);
        HermitianLattice h = build_Lp(p);
        MatQ tg = trace_gram(h, h.gens);
        Lattice om = lattice_Omega(p);
        REQUIRE(tg.rows() == om.rank);
        bool equal = true;
        for (std::size_t i = 0; i < om.rank; ++i)
            for (std::size_t j = 0; j < om.rank; ++j)
                if (tg(i, j) != Rat(om.gram(i, j))) equal = false;
        CHECK(equal);
    }
}

TEST_CASE("trace lattice rank and determinant") {
    for (int p : {3, 5, 7}) {
        CAPTURE(p);
        HermitianLattice h = build_Lp(p);
        TraceLattice tl = trace_lattice(h);
        Lattice om = lattice_Omega(p);
        CHECK(tl.lattice.rank == om.rank);
        CHECK(tl.lattice.det() == om.det());
        CHECK(tl.lattice.is_even());
        CHECK(discriminant_group(tl.lattice).group_order() == om.det());
    }
}

TEST_CASE("generators satisfy the defining congruences") {
    for (int p : {3, 5, 7}) {
        CAPTURE(p);
        HermitianLattice h = build_Lp(p);
        for (const auto& g : h.gens) CHECK(membership_Lp(p, g));
    }
}

TEST_CASE("hermitian pairing respects omega multiplication") {
    HermitianLattice h = build_Lp(5);
    CycInt w = CycInt::omega_pow(5, 1);
    std::vector<CycInt> wa;
    for (const CycInt& c : h.gens[0]) wa.push_back(w * c);
    // h(w a, b) = w h(a, b)
    CHECK(herm_pairing(h, wa, h.gens[1]) == w * herm_pairing(h, h.gens[0], h.gens[1]));
    // h(a, a) is conjugation fixed
    CycInt diag = herm_pairing(h, h.gens[0], h.gens[0]);
    CHECK(diag.conj() == diag);
}

TEST_CASE("flatten and unflatten are inverse") {
    HermitianLattice h = build_Lp(7);
    std::vector<Int> flat = flatten(h.gens[0]);
    CHECK(flat.size() == 18);
    CHECK(unflatten(7, 3, flat) == h.gens[0]);
}

TEST_CASE("scale factors are conjugation fixed") {
    CHECK(lp_scale_tau().conj() == lp_scale_tau());
    CHECK(lp_scale_f1_sq().conj() == lp_scale_f1_sq());
    CHECK(lp_scale_f2_sq().conj() == lp_scale_f2_sq());
    // all three scalars are totally positive units
    CHECK(lp_scale_tau().norm() == 1);
    CHECK(lp_scale_f1_sq().norm() == 1);
    CHECK(lp_scale_f2_sq().norm() == 1);
}
