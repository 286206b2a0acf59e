#include "k3lat/mat.hpp"

#include <doctest.h>

using namespace k3lat;

TEST_CASE("matrix arithmetic") {
    MatZ a{{1, 2}, {3, 4}};
    MatZ b{{0, 1}, {1, 0}};
    CHECK(a * b == MatZ{{2, 1}, {4, 3}});
    CHECK(a + b == MatZ{{1, 3}, {4, 4}});
    CHECK(a - a == MatZ(2, 2));
    CHECK(a.transpose()(0, 1) == 3);
    CHECK(MatZ::identity(3)(2, 2) == 1);
    CHECK(a.scaled(Int(2))(1, 0) == 6);
}

TEST_CASE("row and column swaps") {
    MatZ a{{1, 2}, {3, 4}};
    a.swap_rows(0, 1);
    CHECK(a == MatZ{{3, 4}, {1, 2}});
    a.swap_cols(0, 1);
    CHECK(a == MatZ{{4, 3}, {2, 1}});
}

TEST_CASE("symmetry and conversions") {
    MatZ s{{2, -1}, {-1, 2}};
    CHECK(s.is_symmetric());
    MatQ q = to_rational(s);
    CHECK(q(0, 1) == -1);
    MatZ back = to_integral(q);
    CHECK(back == s);
    MatQ third(1, 1);
    third(0, 0) = make_rat(1, 3);
    CHECK_THROWS_AS((void)to_integral(third), Error);
}

TEST_CASE("inner products under a gram matrix") {
    MatZ g{{0, 1}, {1, 0}};
    std::vector<Int> e{Int(1), Int(0)}, f{Int(0), Int(1)};
    CHECK(inner(g, e, f) == 1);
    CHECK(inner(g, e, e) == 0);
    std::vector<Rat> he{make_rat(1, 2), Rat(0)};
    CHECK(inner_q(g, he, he) == 0);
}
