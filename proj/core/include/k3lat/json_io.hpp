#pragma once

#include "k3lat/cyclo.hpp"
#include "k3lat/ellns.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/poly.hpp"
#include "k3lat/shortvec.hpp"
#include "k3lat/weierstrass.hpp"

#include <json.hpp>

namespace k3lat {

// All exported objects carry "schema": 1 so golden files can be validated.
inline constexpr int kJsonSchema = 1;

nlohmann::json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);

nlohmann::json cyc_to_json(const CycInt& c);
CycInt cyc_from_json(const nlohmann::json& j);

nlohmann::json enum_report_to_json(const EnumReport& r);

nlohmann::json config_to_json(const FibrationConfig& cfg);

nlohmann::json poly_to_json(const PolyQ& p);
PolyQ poly_from_json(const nlohmann::json& j);

nlohmann::json fiber_report_to_json(const FiberReport& r);

}  // namespace k3lat
