#include "k3lat/poly.hpp"

#include <doctest.h>

using namespace k3lat;

namespace {
PolyQ T() { return PolyQ::t(); }
}

TEST_CASE("polynomial arithmetic basics") {
    PolyQ f = T() * T() - PolyQ(Rat(1));          // t^2 - 1
    PolyQ g = T() + PolyQ(Rat(1));                // t + 1
    CHECK(f.degree() == 2);
    CHECK((f + (-f)).is_zero());
    CHECK((g * (T() - PolyQ(Rat(1)))) == f);
    CHECK(f.eval(Rat(3)) == 8);
    CHECK(f.derivative() == T() * Rat(2));
    CHECK(pow(g, 3).coeff(1) == 3);
    CHECK(f.str() == "t^2 - 1");
}

TEST_CASE("euclidean division and gcd") {
    PolyQ f = pow(T(), 3) - PolyQ(Rat(1));
    PolyQ g = T() - PolyQ(Rat(1));
    auto [q, r] = divmod(f, g);
    CHECK(r.is_zero());
    CHECK(q * g == f);
    CHECK(poly_gcd(f, g) == g.monic());
    // coprime pair
    CHECK(poly_gcd(T(), T() + PolyQ(Rat(1))).degree() == 0);
    CHECK_THROWS_AS((void)divmod(f, PolyQ()), Error);
}

TEST_CASE("square-free factorization") {
    // f = (t - 1)^2 (t + 2)^3 t
    PolyQ f = pow(T() - PolyQ(Rat(1)), 2) * pow(T() + PolyQ(Rat(2)), 3) * T();
    auto fac = squarefree_factor(f);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0].second == 1);
    CHECK(fac[0].first == T());
    CHECK(fac[1].second == 2);
    CHECK(fac[1].first == T() - PolyQ(Rat(1)));
    CHECK(fac[2].second == 3);
    CHECK(fac[2].first == T() + PolyQ(Rat(2)));
    // multiplicities reconstruct f up to the leading coefficient
    PolyQ rebuilt(Rat(1));
    for (auto& [p, m] : fac) rebuilt = rebuilt * pow(p, m);
    CHECK(rebuilt == f.monic());
}

TEST_CASE("vanishing order") {
    PolyQ f = pow(T(), 4) * (T() - PolyQ(Rat(2)));
    CHECK(vanishing_order(f, T()) == 4);
    CHECK(vanishing_order(f, T() - PolyQ(Rat(2))) == 1);
    CHECK(vanishing_order(f, T() + PolyQ(Rat(1))) == 0);
}

TEST_CASE("rational functions reduce with monic denominator") {
    RatFunc r(T() * T() - PolyQ(Rat(1)), T() * Rat(2) + PolyQ(Rat(2)));
    // (t^2-1)/(2t+2) = (t-1)/2
    CHECK(r.den() == PolyQ(Rat(1)));
    CHECK(r.num() == (T() - PolyQ(Rat(1))) * make_rat(1, 2));

    RatFunc a(PolyQ(Rat(1)), T());
    RatFunc b(PolyQ(Rat(1)), T() + PolyQ(Rat(1)));
    RatFunc sum = a + b;
    CHECK(sum.num() == T() * Rat(2) + PolyQ(Rat(1)));
    CHECK(sum.den() == T() * T() + T());
    CHECK(a / a == RatFunc(Rat(1)));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS((void)(a / RatFunc()), Error);
}
