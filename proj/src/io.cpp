#include "potevo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace potevo {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_csv_values(const std::string& text, std::size_t expected_columns,
                                     std::size_t value_column) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> values;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() < expected_columns)
      throw std::invalid_argument("malformed CSV row: " + line);
    values.push_back(std::stod(cells[value_column]));
  }
  return values;
}

}  // namespace

std::string grid_to_csv(const PotentialGrid& grid) {
  std::string out = "x,value\n";
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    out += fmt(grid.x_at(k)) + "," + fmt(grid.values[k]) + "\n";
  }
  return out;
}

PotentialGrid grid_from_csv(const std::string& text) {
  const std::vector<double> values = parse_csv_values(text, 2, 1);
  if (values.empty()) throw std::invalid_argument("CSV grid has no data rows");
  if ((values.size() & (values.size() - 1)) != 0)
    throw std::invalid_argument("grid length must be a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < values.size()) ++n;

  // Recover x bounds from the first column.
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  const double x0 = std::stod(line.substr(0, line.find(',')));
  double x1 = x0 + 1.0;
  if (values.size() > 1) {
    std::getline(in, line);
    x1 = std::stod(line.substr(0, line.find(',')));
  }
  const double dx = x1 - x0;

  PotentialGrid grid;
  grid.n = n;
  grid.x_min = x0;
  grid.dx = dx;
  grid.x_max = x0 + dx * static_cast<double>(values.size());
  grid.values = Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                  static_cast<Eigen::Index>(values.size()));
  return grid;
}

json grid_to_json(const PotentialGrid& grid) {
  json j;
  j["n"] = grid.n;
  j["x_min"] = grid.x_min;
  j["x_max"] = grid.x_max;
  j["values"] = std::vector<double>(grid.values.data(), grid.values.data() + grid.values.size());
  return j;
}

PotentialGrid grid_from_json(const json& j) {
  PotentialGrid grid;
  grid.n = j.at("n").get<int>();
  grid.x_min = j.at("x_min").get<double>();
  grid.x_max = j.at("x_max").get<double>();
  const auto values = j.at("values").get<std::vector<double>>();
  if (values.size() != (std::size_t{1} << grid.n))
    throw std::invalid_argument("grid JSON value count does not match 2^n");
  grid.dx = (grid.x_max - grid.x_min) / static_cast<double>(values.size());
  grid.values = Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                  static_cast<Eigen::Index>(values.size()));
  return grid;
}

json spectrum_to_json(const WalshSpectrum& spectrum) {
  json j;
  j["n"] = spectrum.n;
  j["coeffs"] = std::vector<double>(spectrum.coeffs.data(),
                                    spectrum.coeffs.data() + spectrum.coeffs.size());
  return j;
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json entry;
    std::visit(
        [&](const auto& gate) {
          using T = std::decay_t<decltype(gate)>;
          if constexpr (std::is_same_v<T, GlobalPhase>) {
            entry = {{"type", "global_phase"}, {"phi", gate.phi}};
          } else if constexpr (std::is_same_v<T, Rz>) {
            entry = {{"type", "rz"}, {"q", gate.q}, {"theta", gate.theta}};
          } else if constexpr (std::is_same_v<T, Cnot>) {
            entry = {{"type", "cnot"}, {"control", gate.control}, {"target", gate.target}};
          } else if constexpr (std::is_same_v<T, PhaseGate>) {
            entry = {{"type", "phase"}, {"q", gate.q}, {"theta", gate.theta}};
          } else if constexpr (std::is_same_v<T, CPhase>) {
            entry = {{"type", "cphase"}, {"a", gate.a}, {"b", gate.b}, {"theta", gate.theta}};
          } else {
            entry = {{"type", "ccphase"},
                     {"a", gate.a},
                     {"b", gate.b},
                     {"c", gate.c},
                     {"theta", gate.theta}};
          }
        },
        g);
    gates.push_back(entry);
  }
  return json{{"n", c.n}, {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  c.n = j.at("n").get<int>();
  for (const json& entry : j.at("gates")) {
    const std::string type = entry.at("type").get<std::string>();
    if (type == "global_phase") {
      c.gates.push_back(GlobalPhase{entry.at("phi").get<double>()});
    } else if (type == "rz") {
      c.gates.push_back(Rz{entry.at("q").get<int>(), entry.at("theta").get<double>()});
    } else if (type == "cnot") {
      c.gates.push_back(Cnot{entry.at("control").get<int>(), entry.at("target").get<int>()});
    } else if (type == "phase") {
      c.gates.push_back(PhaseGate{entry.at("q").get<int>(), entry.at("theta").get<double>()});
    } else if (type == "cphase") {
      c.gates.push_back(CPhase{entry.at("a").get<int>(), entry.at("b").get<int>(),
                               entry.at("theta").get<double>()});
    } else if (type == "ccphase") {
      c.gates.push_back(CCPhase{entry.at("a").get<int>(), entry.at("b").get<int>(),
                                entry.at("c").get<int>(), entry.at("theta").get<double>()});
    } else {
      throw std::invalid_argument("unknown gate type: " + type);
    }
  }
  validate(c);
  return c;
}

json fit_to_json(const FitResult& fit, const IncidenceSystem& sys) {
  json j;
  j["n"] = sys.n;
  j["subsets"] = sys.subsets;
  j["xi"] = std::vector<double>(fit.xi.data(), fit.xi.data() + fit.xi.size());
  j["residual_norm"] = fit.residual_norm;
  j["per_point_error"] = std::vector<double>(
      fit.per_point_error.data(), fit.per_point_error.data() + fit.per_point_error.size());
  j["target_scale"] = fit.target_scale;
  return j;
}

json diagonal_to_json(const DiagonalUnitary& d) {
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(d.entries.size()));
  im.reserve(static_cast<std::size_t>(d.entries.size()));
  for (Eigen::Index k = 0; k < d.entries.size(); ++k) {
    re.push_back(d.entries[k].real());
    im.push_back(d.entries[k].imag());
  }
  return json{{"n", d.n}, {"real", re}, {"imag", im}};
}

json shots_to_json(const ShotResult& shots) {
  json counts = json::object();
  for (const auto& [bits, count] : shots.counts) counts[bits] = count;
  return json{{"shots", shots.shots}, {"counts", counts}};
}

std::string reconstruction_to_csv(const PotentialGrid& reference, const Reconstruction& rec) {
  if (reference.values.size() != rec.values.size())
    throw std::invalid_argument("reference and reconstruction lengths differ");
  std::string out = "x,v_ref,v_rec,abs_err,wrapped\n";
  for (Eigen::Index k = 0; k < rec.values.size(); ++k) {
    const double err = std::abs(rec.values[k] - reference.values[k]);
    out += fmt(reference.x_at(k)) + "," + fmt(reference.values[k]) + "," + fmt(rec.values[k]) +
           "," + fmt(err) + "," + (rec.wrap_flags[static_cast<std::size_t>(k)] ? "1" : "0") +
           "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace potevo
