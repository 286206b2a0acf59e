#include "k3lat/catalog.hpp"
#include "k3lat/json_io.hpp"

#include <doctest.h>

using namespace k3lat;

TEST_CASE("lattice json round-trip") {
    Lattice l = lattice_Omega(3);
    nlohmann::json j = lattice_to_json(l);
    CHECK(j["schema"] == 1);
    CHECK(j["rank"] == 12);
    Lattice back = lattice_from_json(j);
    CHECK(back.gram == l.gram);
    CHECK(back.label == l.label);

    nlohmann::json wrong = j;
    wrong["schema"] = 99;
    CHECK_THROWS_AS((void)lattice_from_json(wrong), Error);
    nlohmann::json ragged = j;
    ragged["rank"] = 5;
    CHECK_THROWS_AS((void)lattice_from_json(ragged), Error);
}

TEST_CASE("cyclotomic json round-trip") {
    CycInt c(7, {Int(1), Int(-2), Int(3), Int(0), Int(5), Int(-1)});
    nlohmann::json j = cyc_to_json(c);
    CHECK(cyc_from_json(j) == c);
}

TEST_CASE("polynomial json uses num/den strings") {
    PolyQ p({make_rat(1, 3), Rat(0), Rat(-2)});
    nlohmann::json j = poly_to_json(p);
    CHECK(j["coeffs"][0] == "1/3");
    CHECK(poly_from_json(j) == p);
}

TEST_CASE("enum report json") {
    EnumReport r;
    r.lattice = "Omega3";
    r.counts[Int(-4)] = 756;
    r.min = -4;
    nlohmann::json j = enum_report_to_json(r);
    CHECK(j["counts"]["-4"] == 756);
    CHECK(j["min"] == -4);
    CHECK(j["lattice"] == "Omega3");
}

TEST_CASE("config json") {
    FibrationConfig cfg;
    cfg.p = 5;
    cfg.h = 4;
    cfg.k = {1, 1, 2, 2};
    cfg.i1count = 4;
    nlohmann::json j = config_to_json(cfg);
    CHECK(j["p"] == 5);
    CHECK(j["k"] == std::vector<int>({1, 1, 2, 2}));
    CHECK(j["i1"] == 4);
}
