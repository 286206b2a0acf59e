#include "k3lat/catalog.hpp"
#include "k3lat/discform.hpp"

#include "test_util.hpp"

#include <doctest.h>
#include <random>

using namespace k3lat;

TEST_CASE("discriminant groups of small lattices") {
    CHECK(discriminant_group(lattice_U()).is_trivial());
    CHECK(discriminant_group(lattice_E8_neg()).is_trivial());

    FiniteQuadraticForm a2 = discriminant_group(lattice_A(2));
    REQUIRE(a2.ngen() == 1);
    CHECK(a2.orders[0] == 3);
    CHECK(a2.group_order() == 3);

    FiniteQuadraticForm u3 = discriminant_group(lattice_U_scaled(3));
    CHECK(u3.group_order() == 9);

    CHECK(discriminant_group(lattice_Omega(3)).group_order() == 729);
    CHECK(discriminant_group(lattice_Omega(5)).group_order() == 625);
    CHECK(discriminant_group(lattice_Omega(7)).group_order() == 343);
}

TEST_CASE("normal form of the three Omega discriminant forms") {
    FormNormal f3 = finite_form_normal(discriminant_group(lattice_Omega(3)));
    CHECK(f3.p == 3);
    CHECK(f3.n == 6);
    FormNormal f5 = finite_form_normal(discriminant_group(lattice_Omega(5)));
    CHECK(f5.p == 5);
    CHECK(f5.n == 4);
    FormNormal f7 = finite_form_normal(discriminant_group(lattice_Omega(7)));
    CHECK(f7.p == 7);
    CHECK(f7.n == 3);
}

TEST_CASE("normal form is invariant under re-presentation") {
    std::mt19937 rng(20240818);
    Lattice base = direct_sum({lattice_A(2), lattice_A(2), lattice_U_scaled(3)});
    FormNormal ref = finite_form_normal(discriminant_group(base));
    for (int trial = 0; trial < 50; ++trial) {
        MatZ u = testutil::random_unimodular(base.rank, rng);
        Lattice conj(u * base.gram * u.transpose(), "representation");
        CHECK(finite_form_normal(discriminant_group(conj)) == ref);
    }
}

TEST_CASE("opposite forms") {
    // q(A2) vs q(A2 rescaled by -1): generator q values 4/3 vs 2/3 mod 2
    Lattice a2 = lattice_A(2);
    Lattice a2pos = rescale(a2, Int(-1));
    CHECK(is_opposite(discriminant_group(a2), discriminant_group(a2pos)));

    // the transcendental partners of the NS lattices
    Lattice t3 = direct_sum({lattice_U(), lattice_U_scaled(3), lattice_A(2), lattice_A(2)});
    Lattice ns3 = standard_lattice("M_NS3");
    CHECK(is_opposite(discriminant_group(t3), discriminant_group(ns3)));
    Lattice t5 = direct_sum({lattice_U(), lattice_U_scaled(5)});
    CHECK(is_opposite(discriminant_group(t5), discriminant_group(standard_lattice("M_NS5"))));
    CHECK(is_opposite(discriminant_group(lattice_Upsilon()),
                      discriminant_group(standard_lattice("M_NS7"))));
}

TEST_CASE("min_generators counts the p-rank") {
    CHECK(min_generators(discriminant_group(lattice_U())) == 0);
    CHECK(min_generators(discriminant_group(lattice_A(2))) == 1);
    CHECK(min_generators(discriminant_group(lattice_Omega(7))) == 3);
    Lattice bad = direct_sum({lattice_rank1(Int(14)), lattice_Omega(7)});
    CHECK(min_generators(discriminant_group(bad)) == 4);
}

TEST_CASE("diagonal_form and direct_sum behave additively") {
    FiniteQuadraticForm f = diagonal_form(Int(3), {make_rat(2, 3)});
    FiniteQuadraticForm g = diagonal_form(Int(3), {make_rat(4, 3)});
    FiniteQuadraticForm s = direct_sum(f, g);
    CHECK(s.group_order() == 9);
    CHECK(is_opposite(f, g));
    CHECK(finite_form_normal(negated(f)).discclass == finite_form_normal(g).discclass);
}
