#include "k3lat/cyclo.hpp"

#include <doctest.h>

using namespace k3lat;

namespace {
CycInt cyc(int p, std::vector<Int> c) { return CycInt(p, std::move(c)); }
}

TEST_CASE("power basis reduction") {
    // w^2 = -(1 + w) for p = 3
    CycInt w = CycInt::omega_pow(3, 1);
    CycInt w2 = w * w;
    CHECK(w2 == cyc(3, {-1, -1}));
    CHECK(CycInt::omega_pow(3, 3) == CycInt::from_int(3, 1));
    CHECK(CycInt::omega_pow(5, 5) == CycInt::from_int(5, 1));
    CHECK(CycInt::omega_pow(7, -1) == CycInt::omega_pow(7, 6));
}

TEST_CASE("trace and norm") {
    // Tr(1) = p - 1, Tr(w^k) = -1
    CHECK(CycInt::from_int(5, 1).trace() == 4);
    CHECK(CycInt::omega_pow(5, 2).trace() == -1);
    // N(1 - w) = p
    for (int p : {3, 5, 7}) {
        CycInt t = CycInt::from_int(p, 1) - CycInt::omega_pow(p, 1);
        CHECK(t.norm() == p);
    }
    // norm is multiplicative
    CycInt a = cyc(7, {1, 2, 0, -1, 0, 3});
    CycInt b = cyc(7, {0, 1, 1, 0, -2, 1});
    CHECK((a * b).norm() == a.norm() * b.norm());
}

TEST_CASE("galois action and conjugation") {
    CycInt a = cyc(5, {1, 2, 3, 4});
    CHECK(a.galois(1) == a);
    CHECK(a.conj().conj() == a);
    // trace is galois invariant
    CHECK(a.galois(2).trace() == a.trace());
    // conjugation fixes the norm
    CHECK(a.conj().norm() == a.norm());
}

TEST_CASE("exact division in Z[omega]") {
    CycInt t = CycInt::from_int(5, 1) - CycInt::omega_pow(5, 1);
    CycInt a = cyc(5, {2, -1, 0, 3});
    CycInt prod = t * a;
    auto q = divide_exact(prod, t);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    CHECK(divides(t, prod));
    // 1 - w does not divide 1
    CHECK_FALSE(divides(t, CycInt::from_int(5, 1)));
}

TEST_CASE("trace form scalar") {
    // -(1/p) Tr(1) = -(p-1)/p
    CHECK(trace_form(CycInt::from_int(3, 1)) == make_rat(-2, 3));
    CHECK(trace_form(CycInt::omega_pow(3, 1)) == make_rat(1, 3));
    // (1-w)(1-w~) has trace 2p - 2 + 2 = integer multiple giving -2
    for (int p : {3, 5, 7}) {
        CycInt t = CycInt::from_int(p, 1) - CycInt::omega_pow(p, 1);
        CHECK(trace_form(t * t.conj()) == Rat(-2));
    }
}
