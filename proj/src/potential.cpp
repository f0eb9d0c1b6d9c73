#include "potevo/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace potevo {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

double evaluate(const PotentialModel& model, double x) {
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, RittnerExp>) {
          return m.a1 * std::exp(-m.a2 * (x - m.r1));
        } else if constexpr (std::is_same_v<T, ShiftedExp>) {
          return std::exp(1.0 - x);
        } else if constexpr (std::is_same_v<T, DecayExp>) {
          return std::exp(-(x - 1.0));
        } else {
          static_assert(std::is_same_v<T, Tabulated>);
          throw std::invalid_argument("tabulated models have no pointwise evaluator");
        }
      },
      model);
}

PotentialGrid sample_model(const PotentialModel& model, int n, double x_min, double x_max) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  if (!(x_max > x_min)) throw std::invalid_argument("x_max must exceed x_min");
  if (const auto* rit = std::get_if<RittnerExp>(&model)) {
    if (!(rit->a2 > 0.0)) throw std::invalid_argument("RittnerExp requires a2 > 0");
  }

  const std::size_t count = std::size_t{1} << n;
  PotentialGrid grid;
  grid.n = n;
  grid.x_min = x_min;
  grid.x_max = x_max;
  grid.dx = (x_max - x_min) / static_cast<double>(count);
  grid.values.resize(static_cast<Eigen::Index>(count));

  if (const auto* tab = std::get_if<Tabulated>(&model)) {
    if (!is_power_of_two(tab->values.size()))
      throw std::invalid_argument("tabulated value list length must be a power of two");
    if (tab->values.size() != count)
      throw std::invalid_argument("tabulated value list length does not match 2^n");
    for (std::size_t k = 0; k < count; ++k) {
      if (!std::isfinite(tab->values[k]))
        throw std::domain_error("non-finite tabulated value at index " + std::to_string(k));
      grid.values[static_cast<Eigen::Index>(k)] = tab->values[k];
    }
    return grid;
  }

  for (std::size_t k = 0; k < count; ++k) {
    const double x = grid.x_at(static_cast<Eigen::Index>(k));
    const double v = evaluate(model, x);
    if (!std::isfinite(v))
      throw std::domain_error("model evaluated to a non-finite value at index " +
                              std::to_string(k));
    grid.values[static_cast<Eigen::Index>(k)] = v;
  }
  return grid;
}

std::string state_index_label(std::uint64_t k, int n) {
  if (n < 1 || n > 63) throw std::invalid_argument("qubit count out of range");
  if (k >= (std::uint64_t{1} << n)) throw std::out_of_range("state index out of range");
  std::string label(static_cast<std::size_t>(n), '0');
  for (int b = 0; b < n; ++b) {
    if ((k >> b) & 1u) label[static_cast<std::size_t>(n - 1 - b)] = '1';
  }
  return label;
}

}  // namespace potevo
