#include "k3lat/catalog.hpp"
#include "k3lat/ellns.hpp"

#include <doctest.h>

using namespace k3lat;

TEST_CASE("standard configurations balance Euler number and torsion constraint") {
    for (int p : {3, 5, 7}) {
        CAPTURE(p);
        FibrationConfig cfg = standard_config(p);
        CHECK(cfg.p == p);
        CHECK(check_component_numbers(cfg));
        CHECK(check_euler(cfg));
        CHECK(cfg.p * cfg.h + cfg.i1count == 24);
    }
    // a broken component assignment fails the constraint
    FibrationConfig bad = standard_config(5);
    bad.k = {1, 1, 1, 2};
    CHECK_FALSE(check_component_numbers(bad));
}

TEST_CASE("torsion sections solve to squares of -2 and meet the right components") {
    FibrationConfig cfg = standard_config(3);
    std::vector<Rat> t1 = solve_torsion_section(cfg, 1);
    MatZ g = ambient_gram(cfg);
    Rat sq(0);
    for (std::size_t i = 0; i < t1.size(); ++i)
        for (std::size_t j = 0; j < t1.size(); ++j) sq += t1[i] * Rat(g(i, j)) * t1[j];
    CHECK(sq == -2);
}

TEST_CASE("neron-severi models") {
    for (int p : {3, 5, 7}) {
        CAPTURE(p);
        FibrationConfig cfg = standard_config(p);
        NSModel model = build_ns(cfg);
        CHECK(static_cast<int>(model.lattice.rank) == shioda_tate_rank(cfg));
        CHECK(model.lattice.det() == -ns_det_formula(cfg));
        CHECK(model.lattice.is_even());
        Signature s = signature(model.lattice);
        CHECK(s.plus == 1);
        CHECK(s.minus == model.lattice.rank - 1);
    }
    CHECK(ns_det_formula(standard_config(3)) == 81);
    CHECK(ns_det_formula(standard_config(5)) == 25);
    CHECK(ns_det_formula(standard_config(7)) == 7);
}

TEST_CASE("sigma is an order-p isometry fixing U(p)") {
    for (int p : {3, 5, 7}) {
        CAPTURE(p);
        NSModel model = build_ns(standard_config(p));
        SigmaAction act = sigma_matrix(model);
        CHECK(act.order == p);
        MatZ acc = MatZ::identity(model.lattice.rank);
        for (int i = 0; i < p; ++i) acc = acc * act.mat;
        CHECK(acc == MatZ::identity(model.lattice.rank));
        CHECK(act.mat != MatZ::identity(model.lattice.rank));
        CHECK(act.mat.transpose() * model.lattice.gram * act.mat == model.lattice.gram);

        SublatticeBasis inv = invariant_sublattice(model, act);
        CHECK(inv.lattice.rank == 2);
        CHECK(inv.lattice.det() == -Int(p) * p);
        CHECK(inv.lattice.is_even());
    }
}

TEST_CASE("complement of the invariant part is the catalog Omega") {
    for (int p : {3, 5, 7}) {
        CAPTURE(p);
        NSModel model = build_ns(standard_config(p));
        SigmaAction act = sigma_matrix(model);
        OmegaResult om = omega_lattice(model, act);
        CHECK(om.lattice.gram == lattice_Omega(p).gram);
        CHECK(disc_group_action(model, act, om));
    }
}

TEST_CASE("glue witness for p = 3") {
    NSModel model = build_ns(standard_config(3));
    SigmaAction act = sigma_matrix(model);
    const std::size_t n = model.lattice.rank;
    // w5 = (2s - t1 - t2)/3 is integral in NS* and sigma(w5) - w5 = t1 - s
    std::vector<Rat> w(n, Rat(0));
    w[0] = make_rat(2, 3);
    w[1] = make_rat(-1, 3);
    w[2] = make_rat(-1, 3);
    std::vector<Rat> diff(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) diff[i] += Rat(act.mat(i, j)) * w[j];
        diff[i] -= w[i];
    }
    CHECK(diff[0] == -1);
    CHECK(diff[1] == 1);
    for (std::size_t i = 2; i < n; ++i) CHECK(diff[i] == 0);
}

TEST_CASE("lefschetz bookkeeping") {
    LefschetzResult r3 = lefschetz_solve(3, 6);
    CHECK(r3.a == 10);
    CHECK(r3.b == 6);
    CHECK(r3.rho_min == 13);
    CHECK(r3.m_max == 7);
    LefschetzResult r5 = lefschetz_solve(5, 4);
    CHECK(r5.a == 6);
    CHECK(r5.b == 4);
    CHECK(r5.rho_min == 17);
    CHECK(r5.m_max == 3);
    LefschetzResult r7 = lefschetz_solve(7, 3);
    CHECK(r7.a == 4);
    CHECK(r7.b == 3);
    CHECK(r7.rho_min == 19);
    CHECK(r7.m_max == 1);
}
