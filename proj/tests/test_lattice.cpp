#include "k3lat/catalog.hpp"
#include "k3lat/lattice.hpp"

#include <doctest.h>

using namespace k3lat;

TEST_CASE("catalog signatures and determinants") {
    CHECK(lattice_U().det() == -1);
    Signature su = signature(lattice_U());
    CHECK(su.plus == 1);
    CHECK(su.minus == 1);

    Lattice e8 = lattice_E8_neg();
    CHECK(e8.det() == 1);
    Signature s8 = signature(e8);
    CHECK(s8.plus == 0);
    CHECK(s8.minus == 8);
    CHECK(e8.is_even());

    Lattice k3 = lattice_K3();
    CHECK(k3.rank == 22);
    CHECK(k3.det() == -1);
    Signature sk = signature(k3);
    CHECK(sk.plus == 3);
    CHECK(sk.minus == 19);

    Lattice up = lattice_Upsilon();
    CHECK(up.det() == 7);
    Signature sy = signature(up);
    CHECK(sy.plus == 2);
    CHECK(sy.minus == 0);
    CHECK(up.is_even());

    CHECK(lattice_A(2).det() == 3);
    CHECK(lattice_A(4).det() == 5);
    CHECK(lattice_U_scaled(3).det() == -9);
}

TEST_CASE("standard_lattice parses catalog names") {
    CHECK(standard_lattice("U").rank == 2);
    CHECK(standard_lattice("U(5)").gram(0, 1) == 5);
    CHECK(standard_lattice("A(2)").rank == 2);
    CHECK(standard_lattice("E8(-1)").rank == 8);
    CHECK(standard_lattice("Lambda_K3").rank == 22);
    CHECK(standard_lattice("rank1(6)").gram(0, 0) == 6);
    CHECK(standard_lattice("Upsilon").det() == 7);
    CHECK(standard_lattice("Omega3").rank == 12);
    CHECK(standard_lattice("Omega5").rank == 16);
    CHECK(standard_lattice("Omega7").rank == 18);
    CHECK(standard_lattice("M_NS3").rank == 14);
    CHECK_THROWS_AS((void)standard_lattice("nope"), Error);
}

TEST_CASE("direct sum and rescale") {
    Lattice s = direct_sum({lattice_U(), lattice_A(2)});
    CHECK(s.rank == 4);
    CHECK(s.det() == -3);
    Lattice r = rescale(lattice_U(), Int(3));
    CHECK(r.gram == lattice_U_scaled(3).gram);
}

TEST_CASE("orthogonal complement inside U + U") {
    Lattice l = direct_sum({lattice_U(), lattice_U()});
    // complement of the first U is the second U
    SublatticeBasis c = orthogonal_complement(
        l, {{Int(1), Int(0), Int(0), Int(0)}, {Int(0), Int(1), Int(0), Int(0)}});
    CHECK(c.lattice.rank == 2);
    CHECK(c.lattice.det() == -1);
    CHECK(c.lattice.gram == lattice_U().gram);
}

TEST_CASE("sublattice index by determinant ratio") {
    // index-2 sublattice of U: doubled first basis vector
    Lattice u = lattice_U();
    MatZ g(2, 2);
    g(0, 0) = 0; g(0, 1) = 2;
    g(1, 0) = 2; g(1, 1) = 0;
    CHECK(sublattice_index(u, Lattice(g)) == 2);
}
