#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "potevo/potential.hpp"
#include "potevo/recon.hpp"
#include "potevo/sim.hpp"
#include "potevo/synth_poly.hpp"
#include "potevo/walsh.hpp"

namespace potevo {

// Grid files: CSV with an `x,value` header, or JSON {n, x_min, x_max, values}.
std::string grid_to_csv(const PotentialGrid& grid);
PotentialGrid grid_from_csv(const std::string& text);
nlohmann::json grid_to_json(const PotentialGrid& grid);
PotentialGrid grid_from_json(const nlohmann::json& j);

nlohmann::json spectrum_to_json(const WalshSpectrum& spectrum);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json fit_to_json(const FitResult& fit, const IncidenceSystem& sys);

nlohmann::json diagonal_to_json(const DiagonalUnitary& d);

nlohmann::json shots_to_json(const ShotResult& shots);

std::string reconstruction_to_csv(const PotentialGrid& reference, const Reconstruction& rec);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace potevo
