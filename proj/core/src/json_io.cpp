#include "k3lat/json_io.hpp"

namespace k3lat {

namespace {

nlohmann::json int_to_json(const Int& n) {
    if (n.fits_slong_p()) return nlohmann::json(n.get_si());
    return nlohmann::json(n.get_str());
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error("json: expected integer");
}

void check_schema(const nlohmann::json& j) {
    if (j.contains("schema") && j.at("schema").get<int>() != kJsonSchema)
        throw Error("json: unsupported schema version");
}

}  // namespace

nlohmann::json lattice_to_json(const Lattice& l) {
    nlohmann::json gram = nlohmann::json::array();
    for (std::size_t i = 0; i < l.rank; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < l.rank; ++j) row.push_back(int_to_json(l.gram(i, j)));
        gram.push_back(std::move(row));
    }
    return {{"schema", kJsonSchema}, {"label", l.label}, {"rank", l.rank}, {"gram", gram}};
}

Lattice lattice_from_json(const nlohmann::json& j) {
    check_schema(j);
    std::size_t rank = j.at("rank").get<std::size_t>();
    const nlohmann::json& gram = j.at("gram");
    if (gram.size() != rank) throw Error("json: gram size does not match rank");
    MatZ g(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        if (gram[i].size() != rank) throw Error("json: gram row size does not match rank");
        for (std::size_t k = 0; k < rank; ++k) g(i, k) = int_from_json(gram[i][k]);
    }
    std::string label = j.value("label", std::string("imported"));
    return Lattice(g, label);
}

nlohmann::json cyc_to_json(const CycInt& c) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& x : c.coeffs()) coeffs.push_back(int_to_json(x));
    return {{"schema", kJsonSchema}, {"p", c.p()}, {"coeffs", coeffs}};
}

CycInt cyc_from_json(const nlohmann::json& j) {
    check_schema(j);
    int p = j.at("p").get<int>();
    std::vector<Int> coeffs;
    for (const auto& x : j.at("coeffs")) coeffs.push_back(int_from_json(x));
    return CycInt(p, std::move(coeffs));
}

nlohmann::json enum_report_to_json(const EnumReport& r) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [norm, cnt] : r.counts) counts[norm.get_str()] = int_to_json(cnt);
    return {{"schema", kJsonSchema},
            {"lattice", r.lattice},
            {"counts", counts},
            {"min", int_to_json(r.min)}};
}

nlohmann::json config_to_json(const FibrationConfig& cfg) {
    return {{"schema", kJsonSchema}, {"p", cfg.p}, {"k", cfg.k}, {"i1", cfg.i1count}};
}

nlohmann::json poly_to_json(const PolyQ& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(c.get_str());
    return {{"schema", kJsonSchema}, {"coeffs", coeffs}};
}

PolyQ poly_from_json(const nlohmann::json& j) {
    check_schema(j);
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) {
        Rat q(c.get<std::string>());
        q.canonicalize();
        coeffs.push_back(q);
    }
    return PolyQ(std::move(coeffs));
}

nlohmann::json fiber_report_to_json(const FiberReport& r) {
    nlohmann::json fibers = nlohmann::json::object();
    for (const auto& [n, cnt] : r.multiset) fibers["I" + std::to_string(n)] = cnt;
    nlohmann::json places = nlohmann::json::array();
    for (const FiberPlace& pl : r.places) {
        places.push_back({{"at_infinity", pl.at_infinity},
                          {"place", pl.at_infinity ? "infinity" : pl.place.str()},
                          {"num_fibers", pl.num_fibers},
                          {"delta_ord", pl.delta_ord},
                          {"c4_ord", pl.c4_ord},
                          {"type", "I" + std::to_string(pl.n)}});
    }
    return {{"schema", kJsonSchema},
            {"delta", r.delta.str()},
            {"fibers", fibers},
            {"places", places},
            {"total_multiplicity", r.total_multiplicity()}};
}

}  // namespace k3lat
