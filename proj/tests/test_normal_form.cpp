#include "k3lat/normal_form.hpp"

#include "test_util.hpp"

#include <doctest.h>
#include <random>

using namespace k3lat;

TEST_CASE("hnf of a hand-checked 3x2 system") {
    MatZ m(3, 2);
    m(0, 0) = 3; m(0, 1) = 0;
    m(1, 0) = 0; m(1, 1) = 3;
    m(2, 0) = 1; m(2, 1) = 1;
    HnfResult r = hnf(m);
    CHECK(r.rank == 2);
    CHECK(r.h(0, 0) == 1);
    CHECK(r.h(0, 1) == 1);
    CHECK(r.h(1, 0) == 0);
    CHECK(r.h(1, 1) == 3);
    // transform really is unimodular and maps m to h
    CHECK(abs(det_exact(r.u)) == 1);
    CHECK(r.u * m == r.h);
}

TEST_CASE("snf of the A2 gram is diag(1, 3)") {
    MatZ g(2, 2);
    g(0, 0) = -2; g(0, 1) = 1;
    g(1, 0) = 1; g(1, 1) = -2;
    SnfResult s = snf(g);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 3);
    CHECK(s.u * g * s.v == s.d);
}

TEST_CASE("snf invariants on random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 4;
        MatZ m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        SnfResult s = snf(m);
        CHECK(abs(det_exact(s.u)) == 1);
        CHECK(abs(det_exact(s.v)) == 1);
        CHECK(s.u * m * s.v == s.d);
        // diagonal, nonnegative, divisibility chain
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            CHECK(s.d(i, i) >= 0);
            if (s.d(i, i) != 0) {
                if (s.d(i + 1, i + 1) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
            } else {
                CHECK(s.d(i + 1, i + 1) == 0);
            }
        }
    }
}

TEST_CASE("hnf transform is unimodular on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 2 + trial % 3, cols = 2 + (trial / 2) % 3;
        MatZ m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
        HnfResult r = hnf(m);
        CHECK(abs(det_exact(r.u)) == 1);
        CHECK(r.u * m == r.h);
    }
}

namespace {

// cofactor expansion, the independent determinant oracle for small sizes
Int det_cofactor(const MatZ& m) {
    std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        MatZ minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Int term = m(0, j) * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("bareiss determinant agrees with cofactor expansion up to rank 4") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-8, 8);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 4;
        MatZ m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        CHECK(det_exact(m) == det_cofactor(m));
    }
}

TEST_CASE("solve_linear statuses") {
    MatQ a(2, 2);
    a(0, 0) = 1; a(0, 1) = 1;
    a(1, 0) = 0; a(1, 1) = 2;
    std::vector<Rat> b{Rat(3), Rat(4)};
    SolveResult r = solve_linear(a, b);
    REQUIRE(r.status == SolveStatus::Unique);
    CHECK(r.x[0] == 1);
    CHECK(r.x[1] == 2);

    MatQ s(2, 2);
    s(0, 0) = 1; s(0, 1) = 1;
    s(1, 0) = 2; s(1, 1) = 2;
    CHECK(solve_linear(s, std::vector<Rat>{Rat(1), Rat(2)}).status ==
          SolveStatus::Underdetermined);
    CHECK(solve_linear(s, std::vector<Rat>{Rat(1), Rat(3)}).status ==
          SolveStatus::Inconsistent);
}

TEST_CASE("integer kernel of a rank-deficient matrix") {
    MatZ m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
    MatZ k = integer_kernel(m);
    REQUIRE(k.rows() == 2);
    for (std::size_t r = 0; r < k.rows(); ++r) {
        Int dot0 = 0;
        for (std::size_t c = 0; c < 3; ++c) dot0 += m(0, c) * k(r, c);
        CHECK(dot0 == 0);
    }
}

TEST_CASE("rational inverse round-trips") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        MatQ m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = entry(rng);
        if (det_exact_q(m) == 0) continue;
        MatQ inv = inverse(m);
        MatQ prod = m * inv;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(prod(i, j) == (i == j ? Rat(1) : Rat(0)));
    }
}
