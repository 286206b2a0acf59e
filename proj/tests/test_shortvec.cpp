#include "k3lat/catalog.hpp"
#include "k3lat/shortvec.hpp"

#include <doctest.h>
#include <cmath>
#include <map>

using namespace k3lat;

namespace {

// Independent oracle: count vectors by scanning an integer box.  Valid for
// small definite lattices where the box certainly contains the ball.
std::map<Int, Int> box_counts(const Lattice& l, const Int& bound, int radius) {
    std::map<Int, Int> counts;
    std::vector<Int> x(l.rank, Int(0));
    std::vector<int> idx(l.rank, -radius);
    for (;;) {
        for (std::size_t i = 0; i < l.rank; ++i) x[i] = idx[i];
        bool zero = true;
        for (std::size_t i = 0; i < l.rank; ++i)
            if (idx[i] != 0) zero = false;
        if (!zero) {
            Int n = inner(l.gram, x, x);
            if (abs(n) <= bound) counts[n] += 1;
        }
        std::size_t k = 0;
        while (k < l.rank && idx[k] == radius) idx[k++] = -radius;
        if (k == l.rank) break;
        ++idx[k];
    }
    return counts;
}

}  // namespace

TEST_CASE("enumeration matches the box oracle on rank <= 4 lattices") {
    for (const char* name : {"A(1)", "A(2)", "A(3)", "A(4)", "Upsilon", "rank1(2)"}) {
        CAPTURE(name);
        Lattice l = standard_lattice(name);
        Int bound = 8;
        EnumReport rep = short_vectors(l, bound);
        std::map<Int, Int> oracle = box_counts(l, bound, 6);
        CHECK(rep.counts == oracle);
    }
}

TEST_CASE("root counts of the classics") {
    CHECK(short_vectors(lattice_A(2), 2).counts[Int(-2)] == 6);
    CHECK(short_vectors(lattice_E8_neg(), 2).counts[Int(-2)] == 240);
}

TEST_CASE("K12 twist vector counts") {
    Lattice om = lattice_Omega(3);
    EnumReport rep = short_vectors(om, 8);
    CHECK(rep.counts.count(Int(-2)) == 0);
    CHECK(rep.counts[Int(-4)] == 756);
    CHECK(rep.counts[Int(-6)] == 4032);
    CHECK(rep.counts[Int(-8)] == 20412);
    CHECK(rep.min == -4);
    CHECK(spans_at_norm(om, Int(-4)));
}

TEST_CASE("minimum norms of the definite catalog lattices") {
    CHECK(min_norm(lattice_Omega(3)) == -4);
    CHECK(min_norm(lattice_Omega(5)) == -4);
    CHECK(min_norm(lattice_Omega(7)) == -4);
    CHECK(min_norm(lattice_A(2)) == -2);
    CHECK(min_norm(lattice_Upsilon()) == 2);
}

TEST_CASE("kept vectors really have the reported norms") {
    Lattice l = lattice_A(3);
    EnumReport rep = short_vectors(l, 4, true);
    Int total = 0;
    for (auto& [n, c] : rep.counts) total += c;
    CHECK(Int(rep.vectors.size()) == total);
    for (const auto& v : rep.vectors) {
        Int n = inner(l.gram, v, v);
        CHECK(abs(n) <= 4);
        CHECK(n != 0);
    }
}

TEST_CASE("lll_gram preserves the lattice") {
    Lattice om = lattice_Omega(3);
    MatZ g = om.gram;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
    LllResult red = lll_gram(g);
    CHECK(abs(det_exact(red.t)) == 1);
    CHECK(red.t * g * red.t.transpose() == red.gram);
    CHECK(det_exact(red.gram) == det_exact(g));
}

TEST_CASE("densities") {
    CHECK(std::abs(density(lattice_Omega(5)) - 0.0094) < 5e-4);
    CHECK(std::abs(density(lattice_Omega(7)) - 0.0044) < 5e-4);
}

TEST_CASE("indefinite input is rejected") {
    CHECK_THROWS_AS((void)short_vectors(lattice_U(), 2), Error);
}
