#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace potevo {

// Repulsive exponential wall V(x) = a1 * exp(-a2 * (x - r1)).
struct RittnerExp {
  double a1;
  double a2;
  double r1;
};

// V(x) = exp(1 - x).
struct ShiftedExp {};

// V(x) = exp(-(x - 1)).
struct DecayExp {};

// Explicit list of 2^n values; x metadata comes from the sampling call.
struct Tabulated {
  std::vector<double> values;
};

using PotentialModel = std::variant<RittnerExp, ShiftedExp, DecayExp, Tabulated>;

// 2^n potential samples on a uniform lattice. values[k] lives at
// x_k = x_min + k * dx, left endpoint included, x_max excluded.
struct PotentialGrid {
  int n = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double dx = 0.0;
  Eigen::VectorXd values;

  Eigen::Index size() const { return values.size(); }
  double x_at(Eigen::Index k) const { return x_min + static_cast<double>(k) * dx; }
};

double evaluate(const PotentialModel& model, double x);

PotentialGrid sample_model(const PotentialModel& model, int n, double x_min, double x_max);

// Binary label of lattice point k, msqb leftmost: v_0 <-> "0...0".
std::string state_index_label(std::uint64_t k, int n);

}  // namespace potevo
